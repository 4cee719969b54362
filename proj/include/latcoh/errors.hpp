#pragma once

#include <stdexcept>
#include <string>

namespace latcoh {

struct CapExceeded : std::runtime_error {
    explicit CapExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct BadParams : std::runtime_error {
    explicit BadParams(const std::string& what) : std::runtime_error(what) {}
};

struct GroupMismatch : std::runtime_error {
    explicit GroupMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotSubgroup : std::runtime_error {
    explicit NotSubgroup(const std::string& what) : std::runtime_error(what) {}
};

struct RankTooSmall : std::runtime_error {
    explicit RankTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct NotEquivariant : std::runtime_error {
    int position = -1;
    NotEquivariant(const std::string& what, int pos)
        : std::runtime_error(what), position(pos) {}
};

struct NotExact : std::runtime_error {
    int position = -1;
    NotExact(const std::string& what, int pos)
        : std::runtime_error(what), position(pos) {}
};

struct SequenceNotVerified : std::runtime_error {
    explicit SequenceNotVerified(const std::string& what) : std::runtime_error(what) {}
};

struct WitnessInvalid : std::runtime_error {
    explicit WitnessInvalid(const std::string& what) : std::runtime_error(what) {}
};

struct HypothesisFailed : std::runtime_error {
    explicit HypothesisFailed(const std::string& what) : std::runtime_error(what) {}
};

} // namespace latcoh

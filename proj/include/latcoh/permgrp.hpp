#pragma once

// Finite permutation groups: element closure, orbits, cyclic subgroup
// representatives, subgroup catalogs, and a few explicit constructions.
//
// Points are 0-based internally; cycle notation in JSON and on the CLI is
// 1-based and converted at the boundary.

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latcoh/errors.hpp"

namespace latcoh {

inline constexpr long kDefaultClosureCap = 250000;
inline constexpr long kDefaultSubgroupCap = 200;

class Perm {
public:
    Perm() = default;
    explicit Perm(long degree) : images_(static_cast<size_t>(degree))
    {
        std::iota(images_.begin(), images_.end(), 0);
    }
    explicit Perm(std::vector<long> images) : images_(std::move(images))
    {
        std::vector<bool> seen(images_.size(), false);
        for (long x : images_) {
            if (x < 0 || x >= static_cast<long>(images_.size()) || seen[x])
                throw BadParams("Perm: images are not a bijection");
            seen[x] = true;
        }
    }

    static Perm from_cycles(long degree, const std::vector<std::vector<long>>& cycles_0based)
    {
        std::vector<long> img(static_cast<size_t>(degree));
        std::iota(img.begin(), img.end(), 0);
        for (const auto& cyc : cycles_0based) {
            for (size_t i = 0; i < cyc.size(); ++i) {
                long from = cyc[i];
                long to = cyc[(i + 1) % cyc.size()];
                if (from < 0 || from >= degree) throw BadParams("Perm: cycle point out of range");
                img[from] = to;
            }
        }
        return Perm(std::move(img));
    }

    long degree() const { return static_cast<long>(images_.size()); }
    long operator()(long x) const { return images_[x]; }
    const std::vector<long>& images() const { return images_; }

    bool is_identity() const
    {
        for (long i = 0; i < degree(); ++i)
            if (images_[i] != i) return false;
        return true;
    }

    // (a*b)(x) = a(b(x))
    Perm operator*(const Perm& o) const
    {
        std::vector<long> img(images_.size());
        for (size_t i = 0; i < images_.size(); ++i) img[i] = images_[o.images_[i]];
        Perm p;
        p.images_ = std::move(img);
        return p;
    }

    Perm inverse() const
    {
        std::vector<long> img(images_.size());
        for (size_t i = 0; i < images_.size(); ++i) img[images_[i]] = static_cast<long>(i);
        Perm p;
        p.images_ = std::move(img);
        return p;
    }

    int sign() const
    {
        std::vector<bool> seen(images_.size(), false);
        int s = 1;
        for (size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            long len = 0;
            long j = static_cast<long>(i);
            while (!seen[j]) {
                seen[j] = true;
                j = images_[j];
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    long order() const
    {
        std::vector<bool> seen(images_.size(), false);
        long ord = 1;
        for (size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            long len = 0, j = static_cast<long>(i);
            while (!seen[j]) {
                seen[j] = true;
                j = images_[j];
                ++len;
            }
            ord = std::lcm(ord, len);
        }
        return ord;
    }

    std::vector<std::vector<long>> cycles() const
    {
        std::vector<std::vector<long>> out;
        std::vector<bool> seen(images_.size(), false);
        for (size_t i = 0; i < images_.size(); ++i) {
            if (seen[i] || images_[i] == static_cast<long>(i)) {
                seen[i] = true;
                continue;
            }
            std::vector<long> cyc;
            long j = static_cast<long>(i);
            while (!seen[j]) {
                seen[j] = true;
                cyc.push_back(j);
                j = images_[j];
            }
            out.push_back(std::move(cyc));
        }
        return out;
    }

    // cycle lengths including fixed points, sorted descending
    std::vector<long> cycle_type() const
    {
        std::vector<long> type;
        std::vector<bool> seen(images_.size(), false);
        for (size_t i = 0; i < images_.size(); ++i) {
            if (seen[i]) continue;
            long len = 0, j = static_cast<long>(i);
            while (!seen[j]) {
                seen[j] = true;
                j = images_[j];
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.rbegin(), type.rend());
        return type;
    }

    bool operator==(const Perm& o) const { return images_ == o.images_; }
    bool operator!=(const Perm& o) const { return !(*this == o); }
    bool operator<(const Perm& o) const { return images_ < o.images_; }

    std::string str() const
    {
        auto cs = cycles();
        if (cs.empty()) return "()";
        std::ostringstream os;
        for (const auto& c : cs) {
            os << "(";
            for (size_t i = 0; i < c.size(); ++i) os << (i ? " " : "") << c[i] + 1;
            os << ")";
        }
        return os.str();
    }

private:
    std::vector<long> images_;
};

enum class GroupKind { Generic, NaturalSymmetric, NaturalAlternating };

enum class CatalogCompleteness { AllUpToConjugacy, UserSupplied };

class PermGroup;
using PermGroupPtr = std::shared_ptr<const PermGroup>;

class PermGroup {
public:
    PermGroup(long degree, std::vector<Perm> generators, std::string name = {},
              GroupKind kind = GroupKind::Generic)
        : degree_(degree), generators_(std::move(generators)), name_(std::move(name)), kind_(kind)
    {
        for (const auto& g : generators_)
            if (g.degree() != degree_) throw BadParams("PermGroup: generator degree mismatch");
        cache_ = std::make_shared<Cache>();
    }

    long degree() const { return degree_; }
    const std::vector<Perm>& generators() const { return generators_; }
    const std::string& name() const { return name_; }
    GroupKind kind() const { return kind_; }

    bool same_group(const PermGroup& o) const
    {
        return degree_ == o.degree_ && generators_.size() == o.generators_.size() &&
               std::equal(generators_.begin(), generators_.end(), o.generators_.begin());
    }

    // Deterministic breadth-first closure: identity first, then by word
    // length in the listed generators, ties broken by image lexicographic
    // order within a level.
    const std::vector<Perm>& elements(long cap = kDefaultClosureCap) const
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        if (!cache_->elements.empty()) return cache_->elements;
        std::vector<Perm> level{Perm(degree_)};
        std::vector<Perm> all = level;
        std::set<Perm> seen(level.begin(), level.end());
        std::vector<std::pair<long, long>> parent{{-1, -1}}; // (parent index, generator index)
        long level_start = 0;
        while (!level.empty()) {
            std::vector<Perm> next;
            std::vector<std::pair<long, long>> next_parent;
            for (size_t li = 0; li < level.size(); ++li) {
                long pidx = level_start + static_cast<long>(li);
                for (size_t gi = 0; gi < generators_.size(); ++gi) {
                    Perm w = level[li] * generators_[gi];
                    if (seen.insert(w).second) {
                        next.push_back(w);
                        next_parent.emplace_back(pidx, static_cast<long>(gi));
                        if (static_cast<long>(seen.size()) > cap)
                            throw CapExceeded("PermGroup closure exceeds cap " + std::to_string(cap));
                    }
                }
            }
            // sort the new level lexicographically, keeping parent info aligned
            std::vector<size_t> idx(next.size());
            std::iota(idx.begin(), idx.end(), 0);
            std::sort(idx.begin(), idx.end(),
                      [&](size_t a, size_t b) { return next[a] < next[b]; });
            level_start = static_cast<long>(all.size());
            std::vector<Perm> sorted;
            for (size_t i : idx) {
                sorted.push_back(next[i]);
                parent.push_back(next_parent[i]);
                all.push_back(next[i]);
            }
            level = std::move(sorted);
        }
        // group-order sanity: |G| divides degree!
        cache_->elements = std::move(all);
        cache_->parent = std::move(parent);
        cache_->index.clear();
        for (size_t i = 0; i < cache_->elements.size(); ++i)
            cache_->index.emplace(cache_->elements[i], static_cast<long>(i));
        return cache_->elements;
    }

    bool closure_cached() const
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        return !cache_->elements.empty();
    }

    long order(long cap = kDefaultClosureCap) const
    {
        return static_cast<long>(elements(cap).size());
    }

    std::optional<long> element_index(const Perm& p, long cap = kDefaultClosureCap) const
    {
        elements(cap);
        std::lock_guard<std::mutex> lock(cache_->mutex);
        auto it = cache_->index.find(p);
        if (it == cache_->index.end()) return std::nullopt;
        return it->second;
    }

    bool contains(const Perm& p, long cap = kDefaultClosureCap) const
    {
        if (p.degree() != degree_) return false;
        if (kind_ == GroupKind::NaturalSymmetric) return true;
        if (kind_ == GroupKind::NaturalAlternating) return p.sign() == 1;
        return element_index(p, cap).has_value();
    }

    // Word of generator indices whose left-to-right product equals the
    // element at the given closure index.
    std::vector<long> word_for(long index) const
    {
        std::lock_guard<std::mutex> lock(cache_->mutex);
        std::vector<long> word;
        while (index > 0) {
            word.push_back(cache_->parent[index].second);
            index = cache_->parent[index].first;
        }
        std::reverse(word.begin(), word.end());
        return word;
    }

    std::vector<std::vector<long>> orbits() const
    {
        std::vector<long> uf(static_cast<size_t>(degree_));
        std::iota(uf.begin(), uf.end(), 0);
        std::function<long(long)> find = [&](long x) {
            while (uf[x] != x) {
                uf[x] = uf[uf[x]];
                x = uf[x];
            }
            return x;
        };
        for (const auto& g : generators_)
            for (long i = 0; i < degree_; ++i) {
                long a = find(i), b = find(g(i));
                if (a != b) uf[std::max(a, b)] = std::min(a, b);
            }
        std::map<long, std::vector<long>> buckets;
        for (long i = 0; i < degree_; ++i) buckets[find(i)].push_back(i);
        std::vector<std::vector<long>> out;
        for (auto& [root, pts] : buckets) out.push_back(std::move(pts));
        return out;
    }

    std::vector<long> orbit_sizes() const
    {
        std::vector<long> s;
        for (const auto& o : orbits()) s.push_back(static_cast<long>(o.size()));
        return s;
    }

private:
    struct Cache {
        std::mutex mutex;
        std::vector<Perm> elements;
        std::vector<std::pair<long, long>> parent;
        std::map<Perm, long> index;
    };

    long degree_ = 0;
    std::vector<Perm> generators_;
    std::string name_;
    GroupKind kind_ = GroupKind::Generic;
    std::shared_ptr<Cache> cache_;
};

inline PermGroupPtr make_group(long degree, std::vector<Perm> gens, std::string name = {},
                               GroupKind kind = GroupKind::Generic)
{
    return std::make_shared<PermGroup>(degree, std::move(gens), std::move(name), kind);
}

inline std::vector<Perm> close_elements(const PermGroup& g, long cap)
{
    return g.elements(cap);
}

inline PermGroupPtr trivial_group(long degree)
{
    return make_group(degree, {}, "1");
}

inline PermGroupPtr symmetric_group(long n)
{
    if (n < 1) throw BadParams("symmetric_group: n >= 1 required");
    std::vector<Perm> gens;
    if (n >= 2) gens.push_back(Perm::from_cycles(n, {{0, 1}}));
    if (n >= 3) {
        std::vector<long> cyc(static_cast<size_t>(n));
        std::iota(cyc.begin(), cyc.end(), 0);
        gens.push_back(Perm::from_cycles(n, {cyc}));
    }
    return make_group(n, std::move(gens), "S" + std::to_string(n), GroupKind::NaturalSymmetric);
}

inline PermGroupPtr alternating_group(long n)
{
    if (n < 3) throw BadParams("alternating_group: n >= 3 required");
    std::vector<Perm> gens;
    gens.push_back(Perm::from_cycles(n, {{0, 1, 2}}));
    if (n > 3) {
        std::vector<long> cyc;
        if (n % 2 == 1) {
            for (long i = 0; i < n; ++i) cyc.push_back(i);
        } else {
            for (long i = 1; i < n; ++i) cyc.push_back(i);
        }
        gens.push_back(Perm::from_cycles(n, {cyc}));
    }
    return make_group(n, std::move(gens), "A" + std::to_string(n), GroupKind::NaturalAlternating);
}

inline PermGroupPtr cyclic_group(long n)
{
    std::vector<long> cyc(static_cast<size_t>(n));
    std::iota(cyc.begin(), cyc.end(), 0);
    return make_group(n, {Perm::from_cycles(n, {cyc})}, "C" + std::to_string(n));
}

// --------------------------------------------------------------------------
// Explicit subgroup constructions
// --------------------------------------------------------------------------

namespace detail {

// p-cycle on the i-th block of p consecutive points (1-based block index)
inline Perm block_cycle(long n, long p, long i)
{
    std::vector<long> cyc;
    for (long t = 0; t < p; ++t) cyc.push_back((i - 1) * p + t);
    return Perm::from_cycles(n, {cyc});
}

inline Perm perm_power(const Perm& g, long e)
{
    long n = g.degree();
    Perm r(n);
    long ord = g.order();
    e %= ord;
    if (e < 0) e += ord;
    for (long t = 0; t < e; ++t) r = r * g;
    return r;
}

} // namespace detail

// Rank-2 elementary abelian p-group on n = p*k points (k >= p+1) whose
// orbits all have size p while every cyclic subgroup fixes a point.
inline PermGroupPtr elementary_block_group(long n, long p)
{
    if (p < 2 || n % p != 0) throw BadParams("elementary_block_group: p must divide n");
    long k = n / p;
    if (k < p + 1) throw BadParams("elementary_block_group: requires n/p >= p+1");
    Perm alpha(n), beta(n);
    for (long i = 1; i <= k - 1; ++i) alpha = alpha * detail::block_cycle(n, p, i);
    for (long i = 1; i <= p - 1; ++i)
        beta = beta * detail::perm_power(detail::block_cycle(n, p, i), p - i);
    for (long i = p + 1; i <= k; ++i) beta = beta * detail::block_cycle(n, p, i);
    return make_group(n, {alpha, beta},
                      "blocks(" + std::to_string(n) + "," + std::to_string(p) + ")");
}

// Transitive C_p x C_p on p^2 points: one generator cycles inside the rows
// of a p x p square, the other cycles the columns.
inline PermGroupPtr elementary_transitive_group(long p)
{
    if (p < 2) throw BadParams("elementary_transitive_group: p >= 2 required");
    long n = p * p;
    Perm sigma(n), pi(n);
    for (long i = 1; i <= p; ++i) sigma = sigma * detail::block_cycle(n, p, i);
    for (long i = 1; i <= p; ++i) {
        std::vector<long> cyc;
        for (long t = 0; t < p; ++t) cyc.push_back(i - 1 + p * t);
        pi = pi * Perm::from_cycles(n, {cyc});
    }
    return make_group(n, {sigma, pi}, "grid(" + std::to_string(p) + ")");
}

// <(1,2)(3,4)...(n-3,n-2), (1,2)(5,6)...(n-1,n)> for even n >= 6.
inline PermGroupPtr even_pairs_group(long n)
{
    if (n < 6 || n % 2 != 0) throw BadParams("even_pairs_group: even n >= 6 required");
    std::vector<std::vector<long>> ca, cb;
    for (long i = 0; i + 2 <= n - 2; i += 2) ca.push_back({i, i + 1});
    cb.push_back({0, 1});
    for (long i = 4; i + 2 <= n; i += 2) cb.push_back({i, i + 1});
    return make_group(n, {Perm::from_cycles(n, ca), Perm::from_cycles(n, cb)},
                      "pairs(" + std::to_string(n) + ")");
}

// Sylow 2-subgroup of the alternating group on n = 2^a >= 4 points, as the
// even part of the iterated-wreath Sylow 2-subgroup of S_n.
inline PermGroupPtr sylow2_alternating(long n)
{
    if (n < 4 || (n & (n - 1)) != 0)
        throw BadParams("sylow2_alternating: n must be a power of two, >= 4");
    // wreath tower generators: block swaps at every scale
    std::vector<Perm> wreath;
    for (long half = 1; half < n; half *= 2) {
        std::vector<std::vector<long>> cycles;
        for (long t = 0; t < half; ++t) cycles.push_back({t, t + half});
        wreath.push_back(Perm::from_cycles(n, cycles));
    }
    // even subgroup via Schreier generators for the sign kernel,
    // transversal {1, o} with o a fixed odd generator
    Perm odd(n);
    for (const auto& g : wreath)
        if (g.sign() == -1) {
            odd = g;
            break;
        }
    Perm odd_inv = odd.inverse();
    std::vector<Perm> gens;
    for (const auto& g : wreath) {
        if (g.sign() == 1) {
            gens.push_back(g);
            gens.push_back(odd * g * odd_inv);
        } else {
            gens.push_back(odd * g);
            gens.push_back(g * odd_inv);
        }
    }
    gens.push_back(odd * odd);
    std::vector<Perm> clean;
    for (auto& g : gens)
        if (!g.is_identity()) clean.push_back(g);
    auto grp = make_group(n, clean, "sylow2alt(" + std::to_string(n) + ")");
    // |A_n|_2 = 2^(n - popcount(n) - 1); for n = 2^a that is 2^(n-2)
    long target = 1;
    for (long e = 0; e < n - 2; ++e) target *= 2;
    if (grp->order() != target)
        throw BadParams("sylow2_alternating: constructed order mismatch");
    return grp;
}

// --------------------------------------------------------------------------
// Cyclic subgroup representatives
// --------------------------------------------------------------------------

namespace detail {

inline std::vector<std::vector<long>> partitions_of(long n)
{
    std::vector<std::vector<long>> out;
    std::vector<long> cur;
    std::function<void(long, long)> rec = [&](long rest, long maxpart) {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (long p = std::min(rest, maxpart); p >= 1; --p) {
            cur.push_back(p);
            rec(rest - p, p);
            cur.pop_back();
        }
    };
    rec(n, n);
    return out;
}

inline Perm perm_of_cycle_type(long n, const std::vector<long>& type)
{
    std::vector<std::vector<long>> cycles;
    long at = 0;
    for (long len : type) {
        if (len > 1) {
            std::vector<long> c;
            for (long t = 0; t < len; ++t) c.push_back(at + t);
            cycles.push_back(std::move(c));
        }
        at += len;
    }
    return Perm::from_cycles(n, cycles);
}

} // namespace detail

// One representative subgroup per distinct cyclic subgroup.  For natural
// S_n / A_n the fast path returns one generator per cycle type (even types
// only for A_n); this suffices for Sha because the restriction kernels are
// conjugation-invariant.
inline std::vector<PermGroupPtr> cyclic_subgroup_reps(const PermGroup& g,
                                                      long cap = kDefaultClosureCap,
                                                      bool conjugacy_dedup = false)
{
    std::vector<PermGroupPtr> out;
    if (g.kind() == GroupKind::NaturalSymmetric || g.kind() == GroupKind::NaturalAlternating) {
        for (const auto& type : detail::partitions_of(g.degree())) {
            Perm rep = detail::perm_of_cycle_type(g.degree(), type);
            if (g.kind() == GroupKind::NaturalAlternating && rep.sign() != 1) continue;
            out.push_back(make_group(g.degree(), rep.is_identity() ? std::vector<Perm>{}
                                                                   : std::vector<Perm>{rep}));
        }
        return out;
    }
    const auto& elems = g.elements(cap);
    std::set<std::vector<Perm>> seen;
    for (const auto& e : elems) {
        std::vector<Perm> subgroup;
        Perm p(g.degree());
        do {
            subgroup.push_back(p);
            p = p * e;
        } while (!p.is_identity());
        std::sort(subgroup.begin(), subgroup.end());
        if (conjugacy_dedup) {
            // canonical class key: minimum over all conjugates
            std::vector<Perm> best = subgroup;
            for (const auto& c : elems) {
                Perm ci = c.inverse();
                std::vector<Perm> conj;
                conj.reserve(subgroup.size());
                for (const auto& s : subgroup) conj.push_back(c * s * ci);
                std::sort(conj.begin(), conj.end());
                if (conj < best) best = conj;
            }
            subgroup = std::move(best);
        }
        if (!seen.insert(subgroup).second) continue;
        out.push_back(make_group(g.degree(), e.is_identity() ? std::vector<Perm>{}
                                                             : std::vector<Perm>{e}));
    }
    return out;
}

// --------------------------------------------------------------------------
// Subgroup catalog
// --------------------------------------------------------------------------

struct SubgroupCatalog {
    PermGroupPtr parent;
    std::vector<PermGroupPtr> members; // representatives up to conjugacy
    CatalogCompleteness completeness = CatalogCompleteness::AllUpToConjugacy;

    // stable content hash so reports can state which catalog was used
    std::string hash() const
    {
        std::ostringstream os;
        for (const auto& m : members) {
            os << "|";
            for (const auto& gen : m->generators()) {
                for (long x : gen.images()) os << x << ",";
                os << ";";
            }
        }
        unsigned long long h = 1469598103934665603ull;
        for (char c : os.str()) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        std::ostringstream hex;
        hex << std::hex << h;
        return hex.str();
    }
};

// Complete subgroup catalog up to conjugacy, via layered generator
// extension over the multiplication table.  Requires |G| <= cap.
inline SubgroupCatalog subgroups_up_to_conjugacy(const PermGroupPtr& g,
                                                 long cap = kDefaultSubgroupCap)
{
    const auto& elems = g->elements(static_cast<long>(cap));
    long n = static_cast<long>(elems.size());
    if (n > cap) throw CapExceeded("subgroup enumeration cap exceeded");
    // multiplication and inverse tables
    std::map<Perm, long> idx;
    for (long i = 0; i < n; ++i) idx.emplace(elems[i], i);
    std::vector<std::vector<long>> mul(static_cast<size_t>(n), std::vector<long>(n));
    std::vector<long> inv(static_cast<size_t>(n));
    for (long i = 0; i < n; ++i) {
        for (long j = 0; j < n; ++j) mul[i][j] = idx.at(elems[i] * elems[j]);
        inv[i] = idx.at(elems[i].inverse());
    }

    auto closure_of = [&](const std::vector<long>& seed) {
        std::vector<bool> in(static_cast<size_t>(n), false);
        std::vector<long> members{0};
        in[0] = true;
        std::vector<long> work;
        for (long s : seed)
            if (!in[s]) {
                in[s] = true;
                members.push_back(s);
                work.push_back(s);
            }
        size_t head = 0;
        while (head < work.size()) {
            long x = work[head++];
            size_t bound = members.size();
            for (size_t yi = 0; yi < bound; ++yi) {
                long y = members[yi];
                for (long z : {mul[x][y], mul[y][x]}) {
                    if (!in[z]) {
                        in[z] = true;
                        members.push_back(z);
                        work.push_back(z);
                    }
                }
            }
        }
        std::sort(members.begin(), members.end());
        return members;
    };

    std::set<std::vector<long>> all_subgroups;
    std::vector<std::vector<long>> frontier;
    {
        std::vector<long> triv{0};
        all_subgroups.insert(triv);
        frontier.push_back(triv);
    }
    while (!frontier.empty()) {
        std::vector<std::vector<long>> next;
        for (const auto& sub : frontier) {
            std::vector<bool> in(static_cast<size_t>(n), false);
            for (long s : sub) in[s] = true;
            for (long e = 1; e < n; ++e) {
                if (in[e]) continue;
                std::vector<long> seed = sub;
                seed.push_back(e);
                auto closed = closure_of(std::move(seed));
                if (all_subgroups.insert(closed).second) next.push_back(std::move(closed));
            }
        }
        frontier = std::move(next);
    }

    // conjugacy classes, canonical representative = smallest member set
    std::set<std::vector<long>> assigned;
    std::vector<std::vector<long>> reps;
    for (const auto& sub : all_subgroups) {
        if (assigned.count(sub)) continue;
        std::vector<long> best = sub;
        for (long c = 0; c < n; ++c) {
            std::vector<long> conj;
            conj.reserve(sub.size());
            for (long s : sub) conj.push_back(mul[mul[c][s]][inv[c]]);
            std::sort(conj.begin(), conj.end());
            if (conj < best) best = conj;
            assigned.insert(std::move(conj));
        }
        reps.push_back(best);
    }
    std::sort(reps.begin(), reps.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });

    SubgroupCatalog cat;
    cat.parent = g;
    for (const auto& sub : reps) {
        // greedy small generating set
        std::vector<long> gens;
        std::vector<long> closed{0};
        for (long e : sub) {
            if (std::binary_search(closed.begin(), closed.end(), e)) continue;
            gens.push_back(e);
            std::vector<long> seed = gens;
            closed = closure_of(std::move(seed));
            if (closed.size() == sub.size()) break;
        }
        std::vector<Perm> perm_gens;
        for (long e : gens) perm_gens.push_back(elems[e]);
        cat.members.push_back(make_group(g->degree(), std::move(perm_gens)));
    }
    cat.completeness = CatalogCompleteness::AllUpToConjugacy;
    return cat;
}

inline SubgroupCatalog user_catalog(const PermGroupPtr& parent, std::vector<PermGroupPtr> members)
{
    for (const auto& m : members)
        for (const auto& gen : m->generators())
            if (!parent->contains(gen)) throw NotSubgroup("user_catalog: member not in parent");
    SubgroupCatalog cat;
    cat.parent = parent;
    cat.members = std::move(members);
    cat.completeness = CatalogCompleteness::UserSupplied;
    return cat;
}

inline bool is_subgroup(const PermGroup& g, const PermGroup& h, long cap = kDefaultClosureCap)
{
    if (g.degree() != h.degree()) return false;
    for (const auto& gen : h.generators())
        if (!g.contains(gen, cap)) return false;
    return true;
}

} // namespace latcoh

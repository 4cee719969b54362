#pragma once

// Dense matrices over arbitrary-precision integers, row-major.

#include <cassert>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "latcoh/integer.hpp"

namespace latcoh {

struct IntMat {
    long rows = 0;
    long cols = 0;
    std::vector<Integer> a;

    IntMat() = default;
    IntMat(long r, long c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

    IntMat(std::initializer_list<std::initializer_list<long long>> init)
    {
        rows = static_cast<long>(init.size());
        cols = rows ? static_cast<long>(init.begin()->size()) : 0;
        a.reserve(static_cast<size_t>(rows) * cols);
        for (const auto& row : init) {
            assert(static_cast<long>(row.size()) == cols);
            for (long long v : row) a.emplace_back(v);
        }
    }

    Integer& at(long r, long c) { return a[static_cast<size_t>(r) * cols + c]; }
    const Integer& at(long r, long c) const { return a[static_cast<size_t>(r) * cols + c]; }

    Integer& operator()(long r, long c) { return at(r, c); }
    const Integer& operator()(long r, long c) const { return at(r, c); }

    bool operator==(const IntMat& o) const
    {
        return rows == o.rows && cols == o.cols && a == o.a;
    }
    bool operator!=(const IntMat& o) const { return !(*this == o); }

    static IntMat identity(long n)
    {
        IntMat m(n, n);
        for (long i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    static IntMat zero(long r, long c) { return IntMat(r, c); }

    bool is_zero() const
    {
        for (const auto& x : a)
            if (x != 0) return false;
        return true;
    }

    bool is_identity() const
    {
        if (rows != cols) return false;
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j)
                if (at(i, j) != (i == j ? 1 : 0)) return false;
        return true;
    }

    IntMat transpose() const
    {
        IntMat t(cols, rows);
        for (long i = 0; i < rows; ++i)
            for (long j = 0; j < cols; ++j)
                t.at(j, i) = at(i, j);
        return t;
    }

    IntMat col(long j) const
    {
        IntMat c(rows, 1);
        for (long i = 0; i < rows; ++i) c.at(i, 0) = at(i, j);
        return c;
    }

    std::string str() const
    {
        std::ostringstream os;
        os << "[";
        for (long i = 0; i < rows; ++i) {
            os << (i ? "; " : "");
            for (long j = 0; j < cols; ++j) os << (j ? "," : "") << at(i, j);
        }
        os << "]";
        return os.str();
    }
};

inline IntMat operator*(const IntMat& x, const IntMat& y)
{
    assert(x.cols == y.rows);
    IntMat z(x.rows, y.cols);
    for (long i = 0; i < x.rows; ++i) {
        for (long k = 0; k < x.cols; ++k) {
            const Integer& v = x.at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < y.cols; ++j) {
                const Integer& w = y.at(k, j);
                if (w != 0) z.at(i, j) += v * w;
            }
        }
    }
    return z;
}

inline IntMat operator+(const IntMat& x, const IntMat& y)
{
    assert(x.rows == y.rows && x.cols == y.cols);
    IntMat z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] + y.a[i];
    return z;
}

inline IntMat operator-(const IntMat& x, const IntMat& y)
{
    assert(x.rows == y.rows && x.cols == y.cols);
    IntMat z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = x.a[i] - y.a[i];
    return z;
}

inline IntMat operator*(const Integer& c, const IntMat& x)
{
    IntMat z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = c * x.a[i];
    return z;
}

inline IntMat hstack(const IntMat& x, const IntMat& y)
{
    assert(x.rows == y.rows);
    IntMat z(x.rows, x.cols + y.cols);
    for (long i = 0; i < x.rows; ++i) {
        for (long j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
        for (long j = 0; j < y.cols; ++j) z.at(i, x.cols + j) = y.at(i, j);
    }
    return z;
}

inline IntMat vstack(const IntMat& x, const IntMat& y)
{
    assert(x.cols == y.cols);
    IntMat z(x.rows + y.rows, x.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (long i = 0; i < y.rows; ++i)
        for (long j = 0; j < y.cols; ++j) z.at(x.rows + i, j) = y.at(i, j);
    return z;
}

// Block diagonal sum.
inline IntMat dsum_mat(const IntMat& x, const IntMat& y)
{
    IntMat z(x.rows + y.rows, x.cols + y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long j = 0; j < x.cols; ++j) z.at(i, j) = x.at(i, j);
    for (long i = 0; i < y.rows; ++i)
        for (long j = 0; j < y.cols; ++j) z.at(x.rows + i, x.cols + j) = y.at(i, j);
    return z;
}

// Kronecker product; row/col index (i,j) -> i*other + j, matching the
// lexicographic tensor basis convention.
inline IntMat kron(const IntMat& x, const IntMat& y)
{
    IntMat z(x.rows * y.rows, x.cols * y.cols);
    for (long i = 0; i < x.rows; ++i)
        for (long k = 0; k < x.cols; ++k) {
            const Integer& v = x.at(i, k);
            if (v == 0) continue;
            for (long j = 0; j < y.rows; ++j)
                for (long l = 0; l < y.cols; ++l) {
                    const Integer& w = y.at(j, l);
                    if (w != 0) z.at(i * y.rows + j, k * y.cols + l) = v * w;
                }
        }
    return z;
}

inline IntMat mat_mod(const IntMat& x, const Integer& m)
{
    IntMat z(x.rows, x.cols);
    for (size_t i = 0; i < x.a.size(); ++i) z.a[i] = mod_floor(x.a[i], m);
    return z;
}

inline std::vector<Integer> mat_vec(const IntMat& x, const std::vector<Integer>& v)
{
    assert(static_cast<long>(v.size()) == x.cols);
    std::vector<Integer> out(static_cast<size_t>(x.rows));
    for (long i = 0; i < x.rows; ++i) {
        Integer s = 0;
        for (long j = 0; j < x.cols; ++j) {
            const Integer& w = x.at(i, j);
            if (w != 0 && v[j] != 0) s += w * v[j];
        }
        out[i] = s;
    }
    return out;
}

// Fraction-free determinant (Bareiss).
inline Integer det(const IntMat& m)
{
    assert(m.rows == m.cols);
    long n = m.rows;
    if (n == 0) return 1;
    IntMat w = m;
    Integer sign = 1, prev = 1;
    for (long k = 0; k + 1 < n; ++k) {
        if (w.at(k, k) == 0) {
            long p = -1;
            for (long i = k + 1; i < n; ++i)
                if (w.at(i, k) != 0) { p = i; break; }
            if (p < 0) return 0;
            for (long j = 0; j < n; ++j) std::swap(w.at(k, j), w.at(p, j));
            sign = -sign;
        }
        for (long i = k + 1; i < n; ++i) {
            for (long j = k + 1; j < n; ++j) {
                Integer t = w.at(i, j) * w.at(k, k) - w.at(i, k) * w.at(k, j);
                w.at(i, j) = t / prev;
            }
            w.at(i, k) = 0;
        }
        prev = w.at(k, k);
    }
    return sign * w.at(n - 1, n - 1);
}

inline bool is_unimodular(const IntMat& m)
{
    if (m.rows != m.cols) return false;
    Integer d = det(m);
    return d == 1 || d == -1;
}

} // namespace latcoh

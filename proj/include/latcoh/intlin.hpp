#pragma once

// Exact integer and modular linear algebra: Hermite/Smith normal forms,
// saturated kernels, Diophantine solving, cokernel invariants.
//
// Conventions (see docs/conventions.md):
//   * hnf_cols: column-style Hermite form. Columns are combined by
//     unimodular operations only; the result has pivot rows p_0 < p_1 < ...,
//     positive pivots, zero entries above each pivot, and reduced residues
//     0 <= H(p_j, j') < H(p_j, j) for j' < j. Zero columns are dropped.
//   * kernel_basis returns a saturated basis (the kernel of an integer
//     matrix is a pure sublattice), brought to column Hermite form.

#include <algorithm>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "latcoh/errors.hpp"
#include "latcoh/int_mat.hpp"

namespace latcoh {

struct AbelianInvariants {
    std::vector<Integer> torsion; // invariant factors > 1, each dividing the next
    long free_rank = 0;

    bool trivial() const { return torsion.empty() && free_rank == 0; }
    bool finite() const { return free_rank == 0; }

    Integer order() const
    {
        Integer n = 1;
        for (const auto& d : torsion) n *= d;
        return n;
    }

    bool operator==(const AbelianInvariants& o) const
    {
        return torsion == o.torsion && free_rank == o.free_rank;
    }
    bool operator!=(const AbelianInvariants& o) const { return !(*this == o); }

    static AbelianInvariants zero() { return {}; }

    static AbelianInvariants cyclic(const Integer& d)
    {
        AbelianInvariants g;
        if (d == 0)
            g.free_rank = 1;
        else if (d > 1)
            g.torsion.push_back(d);
        return g;
    }

    std::string str() const
    {
        if (trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        if (free_rank > 0) {
            os << "Z";
            if (free_rank > 1) os << "^" << free_rank;
            first = false;
        }
        for (const auto& d : torsion) {
            if (!first) os << " + ";
            os << "Z/" << d;
            first = false;
        }
        return os.str();
    }
};

namespace detail {

// Combine columns j0, j1 of m so that row r gets (g, 0); unimodular.
inline void col_gcd_step(IntMat& m, long r, long j0, long j1)
{
    Integer a = m.at(r, j0), b = m.at(r, j1);
    if (b == 0) return;
    if (a == 0) {
        for (long i = 0; i < m.rows; ++i) std::swap(m.at(i, j0), m.at(i, j1));
        return;
    }
    if (b % a == 0) {
        Integer q = b / a;
        for (long i = 0; i < m.rows; ++i) m.at(i, j1) -= q * m.at(i, j0);
        return;
    }
    Integer u, v;
    Integer g = ext_gcd(a, b, u, v);
    Integer a1 = a / g, b1 = b / g;
    for (long i = 0; i < m.rows; ++i) {
        Integer x = m.at(i, j0), y = m.at(i, j1);
        m.at(i, j0) = u * x + v * y;
        m.at(i, j1) = a1 * y - b1 * x;
    }
}

} // namespace detail

// Column-style Hermite normal form; returns the canonical form (zero
// columns dropped).  If transform != nullptr, *transform is set to a
// unimodular V with A*V = [H | 0] (full width, untrimmed).
inline IntMat hnf_cols(const IntMat& a, IntMat* transform = nullptr)
{
    IntMat h = a;
    IntMat v = IntMat::identity(a.cols);
    long pivot_col = 0;
    std::vector<long> pivot_rows;
    for (long r = 0; r < h.rows && pivot_col < h.cols; ++r) {
        // gather the gcd of row r over columns >= pivot_col into pivot_col
        long nz = -1;
        for (long j = pivot_col; j < h.cols; ++j)
            if (h.at(r, j) != 0) { nz = j; break; }
        if (nz < 0) continue;
        if (nz != pivot_col) {
            for (long i = 0; i < h.rows; ++i) std::swap(h.at(i, pivot_col), h.at(i, nz));
            if (transform)
                for (long i = 0; i < v.rows; ++i) std::swap(v.at(i, pivot_col), v.at(i, nz));
        }
        for (long j = pivot_col + 1; j < h.cols; ++j) {
            if (h.at(r, j) == 0) continue;
            Integer a0 = h.at(r, pivot_col), b0 = h.at(r, j);
            Integer u, w;
            Integer g = ext_gcd(a0, b0, u, w);
            Integer a1 = a0 / g, b1 = b0 / g;
            for (long i = 0; i < h.rows; ++i) {
                Integer x = h.at(i, pivot_col), y = h.at(i, j);
                h.at(i, pivot_col) = u * x + w * y;
                h.at(i, j) = a1 * y - b1 * x;
            }
            if (transform)
                for (long i = 0; i < v.rows; ++i) {
                    Integer x = v.at(i, pivot_col), y = v.at(i, j);
                    v.at(i, pivot_col) = u * x + w * y;
                    v.at(i, j) = a1 * y - b1 * x;
                }
        }
        if (h.at(r, pivot_col) < 0) {
            for (long i = 0; i < h.rows; ++i) h.at(i, pivot_col) = -h.at(i, pivot_col);
            if (transform)
                for (long i = 0; i < v.rows; ++i) v.at(i, pivot_col) = -v.at(i, pivot_col);
        }
        // reduce earlier columns against this pivot
        const Integer& p = h.at(r, pivot_col);
        for (long j = 0; j < pivot_col; ++j) {
            if (h.at(r, j) == 0) continue;
            Integer q = floor_div(h.at(r, j), p);
            if (q == 0) continue;
            for (long i = 0; i < h.rows; ++i) h.at(i, j) -= q * h.at(i, pivot_col);
            if (transform)
                for (long i = 0; i < v.rows; ++i) v.at(i, j) -= q * v.at(i, pivot_col);
        }
        pivot_rows.push_back(r);
        ++pivot_col;
    }
    if (transform) *transform = v;
    IntMat out(h.rows, pivot_col);
    for (long i = 0; i < h.rows; ++i)
        for (long j = 0; j < pivot_col; ++j) out.at(i, j) = h.at(i, j);
    return out;
}

inline long rank_of(const IntMat& a) { return hnf_cols(a).cols; }

// Saturated basis of ker(A) within Z^cols, in column Hermite form.
//
// Incremental elimination: maintain a unimodular-complementable basis V of
// the running solution lattice; every row with a nonzero residual cuts the
// dimension by exactly one.
inline IntMat kernel_basis(const IntMat& a)
{
    long n = a.cols;
    std::vector<std::vector<Integer>> basis(static_cast<size_t>(n));
    for (long j = 0; j < n; ++j) {
        basis[j].assign(static_cast<size_t>(n), 0);
        basis[j][j] = 1;
    }
    std::vector<std::pair<long, Integer>> row;
    for (long r = 0; r < a.rows && !basis.empty(); ++r) {
        row.clear();
        for (long c = 0; c < n; ++c)
            if (a.at(r, c) != 0) row.emplace_back(c, a.at(r, c));
        if (row.empty()) continue;
        std::vector<Integer> y(basis.size());
        bool any = false;
        for (size_t j = 0; j < basis.size(); ++j) {
            Integer s = 0;
            for (const auto& [c, v] : row)
                if (basis[j][c] != 0) s += v * basis[j][c];
            y[j] = s;
            if (s != 0) any = true;
        }
        if (!any) continue;
        // gcd-eliminate y to a single pivot at position 0, then drop it
        size_t piv = 0;
        while (y[piv] == 0) ++piv;
        if (piv != 0) { std::swap(y[0], y[piv]); std::swap(basis[0], basis[piv]); }
        for (size_t j = 1; j < basis.size(); ++j) {
            if (y[j] == 0) continue;
            Integer u, v;
            Integer g = ext_gcd(y[0], y[j], u, v);
            Integer a1 = y[0] / g, b1 = y[j] / g;
            auto& c0 = basis[0];
            auto& cj = basis[j];
            for (long i = 0; i < n; ++i) {
                Integer x = c0[i], z = cj[i];
                c0[i] = u * x + v * z;
                cj[i] = a1 * z - b1 * x;
            }
            y[0] = g;
            y[j] = 0;
        }
        basis.erase(basis.begin());
    }
    IntMat k(n, static_cast<long>(basis.size()));
    for (size_t j = 0; j < basis.size(); ++j)
        for (long i = 0; i < n; ++i) k.at(i, j) = basis[j][i];
    return hnf_cols(k);
}

// Some integral X with A*X = B, or nullopt.
inline std::optional<IntMat> solve_linear(const IntMat& a, const IntMat& b)
{
    assert(a.rows == b.rows);
    IntMat v;
    IntMat h = hnf_cols(a, &v);
    long r = h.cols;
    std::vector<long> pivot_rows(static_cast<size_t>(r));
    {
        long row = 0;
        for (long j = 0; j < r; ++j) {
            while (row < h.rows && h.at(row, j) == 0) ++row;
            assert(row < h.rows);
            pivot_rows[j] = row;
        }
    }
    IntMat x(a.cols, b.cols);
    std::vector<Integer> resid(static_cast<size_t>(a.rows));
    for (long bc = 0; bc < b.cols; ++bc) {
        for (long i = 0; i < a.rows; ++i) resid[i] = b.at(i, bc);
        std::vector<Integer> y(static_cast<size_t>(r), 0);
        for (long j = 0; j < r; ++j) {
            const Integer& num = resid[pivot_rows[j]];
            const Integer& den = h.at(pivot_rows[j], j);
            if (num % den != 0) return std::nullopt;
            Integer q = num / den;
            y[j] = q;
            if (q != 0)
                for (long i = pivot_rows[j]; i < a.rows; ++i)
                    if (h.at(i, j) != 0) resid[i] -= q * h.at(i, j);
        }
        for (long i = 0; i < a.rows; ++i)
            if (resid[i] != 0) return std::nullopt;
        // x = V * [y; 0]
        for (long i = 0; i < a.cols; ++i) {
            Integer s = 0;
            for (long j = 0; j < r; ++j)
                if (v.at(i, j) != 0 && y[j] != 0) s += v.at(i, j) * y[j];
            x.at(i, bc) = s;
        }
    }
    return x;
}

inline bool lattice_contains(const IntMat& generators, const IntMat& vectors)
{
    return solve_linear(generators, vectors).has_value();
}

struct SmithForm {
    IntMat u, s, v; // a = u * s * v, u and v unimodular
    std::vector<Integer> invariant_factors;
};

// Full Smith normal form with both transforms; suitable for small and
// medium matrices (transforms are dense rows x rows / cols x cols).
// Eliminations use single-shot extended-gcd 2x2 combines to keep
// intermediate entries under control.
inline SmithForm snf(const IntMat& a)
{
    long n = a.rows, m = a.cols;
    SmithForm f;
    f.s = a;
    f.u = IntMat::identity(n);
    f.v = IntMat::identity(m);
    IntMat& s = f.s;
    IntMat& u = f.u;
    IntMat& v = f.v;

    auto row_swap = [&](long i, long j) {
        for (long k = 0; k < m; ++k) std::swap(s.at(i, k), s.at(j, k));
        for (long k = 0; k < n; ++k) std::swap(u.at(k, i), u.at(k, j));
    };
    auto row_neg = [&](long i) {
        for (long k = 0; k < m; ++k) s.at(i, k) = -s.at(i, k);
        for (long k = 0; k < n; ++k) u.at(k, i) = -u.at(k, i);
    };
    // rows (i,j) of S <- [[p,q],[r,t]] * rows, det = +1; U gets the inverse
    auto row_comb2 = [&](long i, long j, const Integer& p, const Integer& q,
                         const Integer& r, const Integer& t) {
        for (long k = 0; k < m; ++k) {
            Integer x = s.at(i, k), y = s.at(j, k);
            s.at(i, k) = p * x + q * y;
            s.at(j, k) = r * x + t * y;
        }
        for (long k = 0; k < n; ++k) {
            Integer x = u.at(k, i), y = u.at(k, j);
            u.at(k, i) = t * x - r * y;
            u.at(k, j) = -q * x + p * y;
        }
    };
    auto col_swap = [&](long i, long j) {
        for (long k = 0; k < n; ++k) std::swap(s.at(k, i), s.at(k, j));
        for (long k = 0; k < m; ++k) std::swap(v.at(i, k), v.at(j, k));
    };
    // cols (i,j) of S <- cols * [[p,r],[q,t]]^T style: col_i' = p*col_i + q*col_j,
    // col_j' = r*col_i + t*col_j, det = +1; V gets the inverse on rows
    auto col_comb2 = [&](long i, long j, const Integer& p, const Integer& q,
                         const Integer& r, const Integer& t) {
        for (long k = 0; k < n; ++k) {
            Integer x = s.at(k, i), y = s.at(k, j);
            s.at(k, i) = p * x + q * y;
            s.at(k, j) = r * x + t * y;
        }
        for (long k = 0; k < m; ++k) {
            Integer x = v.at(i, k), y = v.at(j, k);
            v.at(i, k) = t * x - r * y;
            v.at(j, k) = -q * x + p * y;
        }
    };
    auto col_addmul = [&](long j, long i, const Integer& c) {
        // col_j += c * col_i
        for (long k = 0; k < n; ++k)
            if (s.at(k, i) != 0) s.at(k, j) += c * s.at(k, i);
        for (long k = 0; k < m; ++k)
            if (v.at(j, k) != 0) v.at(i, k) -= c * v.at(j, k);
    };

    long t = std::min(n, m);
    for (long k = 0; k < t; ++k) {
        long pi = -1, pj = -1;
        Integer best = 0;
        for (long i = k; i < n; ++i)
            for (long j = k; j < m; ++j) {
                const Integer& x = s.at(i, j);
                if (x == 0) continue;
                Integer ax = abs_int(x);
                if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
            }
        if (pi < 0) { t = k; break; }
        if (pi != k) row_swap(k, pi);
        if (pj != k) col_swap(k, pj);
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (long i = k + 1; i < n; ++i) {
                const Integer x = s.at(i, k);
                if (x == 0) continue;
                const Integer p = s.at(k, k);
                if (x % p == 0) {
                    Integer c = -(x / p);
                    for (long c2 = 0; c2 < m; ++c2)
                        if (s.at(k, c2) != 0) s.at(i, c2) += c * s.at(k, c2);
                    for (long c2 = 0; c2 < n; ++c2)
                        if (u.at(c2, i) != 0) u.at(c2, k) -= c * u.at(c2, i);
                } else {
                    Integer uu, vv;
                    Integer g = ext_gcd(p, x, uu, vv);
                    row_comb2(k, i, uu, vv, -(x / g), p / g);
                    dirty = true;
                }
            }
            for (long j = k + 1; j < m; ++j) {
                const Integer x = s.at(k, j);
                if (x == 0) continue;
                const Integer p = s.at(k, k);
                if (x % p == 0) {
                    col_addmul(j, k, -(x / p));
                } else {
                    Integer uu, vv;
                    Integer g = ext_gcd(p, x, uu, vv);
                    col_comb2(k, j, uu, vv, -(x / g), p / g);
                    dirty = true;
                }
            }
        }
        if (s.at(k, k) < 0) row_neg(k);
    }
    // enforce the divisibility chain
    bool changed = true;
    while (changed) {
        changed = false;
        for (long k = 0; k + 1 < t; ++k) {
            for (long l = k + 1; l < t; ++l) {
                if (s.at(l, l) % s.at(k, k) == 0) continue;
                changed = true;
                col_addmul(k, l, 1); // puts d_l into position (l,k)
                Integer a0 = s.at(k, k), b0 = s.at(l, k);
                Integer uu, vv;
                Integer g = ext_gcd(a0, b0, uu, vv);
                row_comb2(k, l, uu, vv, -(b0 / g), a0 / g);
                if (s.at(k, l) != 0) col_addmul(l, k, -(s.at(k, l) / s.at(k, k)));
                if (s.at(k, k) < 0) row_neg(k);
                if (s.at(l, l) < 0) row_neg(l);
            }
        }
    }
    for (long k = 0; k < t; ++k)
        if (s.at(k, k) != 0) f.invariant_factors.push_back(s.at(k, k));
    return f;
}

inline std::vector<Integer> invariant_factors(const IntMat& a)
{
    // column HNF first to shrink, then SNF on the small core
    IntMat h = hnf_cols(a);
    return snf(h).invariant_factors;
}

// Invariants of Z^ambient_rank / column-space(a).
inline AbelianInvariants cokernel_invariants(const IntMat& a, long ambient_rank)
{
    if (a.rows != ambient_rank)
        throw BadParams("cokernel_invariants: ambient rank mismatch");
    AbelianInvariants g;
    auto f = invariant_factors(a);
    for (const auto& d : f)
        if (d > 1) g.torsion.push_back(d);
    g.free_rank = ambient_rank - static_cast<long>(f.size());
    return g;
}

// Generators of ker(a mod m) as columns over Z/m (lifted presentation).
inline IntMat modp_kernel(const IntMat& a, const Integer& m)
{
    if (m < 2) throw BadParams("modp_kernel: modulus must be >= 2");
    IntMat lifted = hstack(a, m * IntMat::identity(a.rows));
    IntMat k = kernel_basis(lifted);
    // project to the x-block and reduce
    IntMat proj(a.cols, k.cols);
    for (long i = 0; i < a.cols; ++i)
        for (long j = 0; j < k.cols; ++j) proj.at(i, j) = mod_floor(k.at(i, j), m);
    // drop zero columns
    std::vector<long> keep;
    for (long j = 0; j < proj.cols; ++j) {
        bool z = true;
        for (long i = 0; i < proj.rows; ++i)
            if (proj.at(i, j) != 0) { z = false; break; }
        if (!z) keep.push_back(j);
    }
    IntMat out(a.cols, static_cast<long>(keep.size()));
    for (size_t j = 0; j < keep.size(); ++j)
        for (long i = 0; i < a.cols; ++i) out.at(i, j) = proj.at(i, keep[j]);
    return out;
}

// Basis (as lattice in Z^cols) of {x : a*x = 0 mod m}; contains m*Z^cols.
inline IntMat modm_kernel_lattice(const IntMat& a, const Integer& m)
{
    if (m < 2) throw BadParams("modm_kernel_lattice: modulus must be >= 2");
    IntMat lifted = hstack(a, m * IntMat::identity(a.rows));
    IntMat k = kernel_basis(lifted);
    IntMat proj(a.cols, k.cols + a.cols);
    for (long i = 0; i < a.cols; ++i) {
        for (long j = 0; j < k.cols; ++j) proj.at(i, j) = k.at(i, j);
        proj.at(i, k.cols + i) = m;
    }
    return hnf_cols(proj);
}

// Rank of a over the prime field F_p (small Gaussian elimination).
inline long rank_mod_p(const IntMat& a, long p)
{
    std::vector<std::vector<long>> w(static_cast<size_t>(a.rows),
                                     std::vector<long>(static_cast<size_t>(a.cols)));
    for (long i = 0; i < a.rows; ++i)
        for (long j = 0; j < a.cols; ++j)
            w[i][j] = static_cast<long>(mod_floor(a.at(i, j), p));
    long rank = 0;
    for (long c = 0; c < a.cols && rank < a.rows; ++c) {
        long piv = -1;
        for (long i = rank; i < a.rows; ++i)
            if (w[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(w[rank], w[piv]);
        // normalize
        long inv = 1;
        for (long t = 1; t < p; ++t)
            if (t * w[rank][c] % p == 1) { inv = t; break; }
        for (long j = 0; j < a.cols; ++j) w[rank][j] = w[rank][j] * inv % p;
        for (long i = 0; i < a.rows; ++i) {
            if (i == rank || w[i][c] == 0) continue;
            long f = w[i][c];
            for (long j = 0; j < a.cols; ++j)
                w[i][j] = ((w[i][j] - f * w[rank][j]) % p + p) % p;
        }
        ++rank;
    }
    return rank;
}

// ---------------------------------------------------------------------------
// Cokernel presentation with row-operation replay.
//
// Presents Z^n / col(A) via S = E * (A * C) with E a (logged) product of
// elementary row operations and C untracked column operations.  Exposes the
// torsion part: invariant factors, a generating cocycle-style representative
// per factor (a vector of Z^n), and coordinates of arbitrary vectors.
// This is all that degree-i cohomology of a lattice needs, since
// H^i = torsion(C^i / B^i) when C^i/Z^i is torsion-free.
// ---------------------------------------------------------------------------

class CokernelPresentation {
public:
    CokernelPresentation(const IntMat& a, long ambient_rank)
        : n_(ambient_rank)
    {
        if (a.rows != ambient_rank)
            throw BadParams("CokernelPresentation: ambient rank mismatch");
        IntMat h = hnf_cols(a);
        b_ = h.cols;
        reduce_to_smith(h);
        for (long k = 0; k < b_; ++k)
            if (diag_[k] > 1) torsion_rows_.push_back(k);
    }

    long ambient() const { return n_; }
    long rank() const { return b_; }

    AbelianInvariants invariants() const
    {
        AbelianInvariants g;
        for (long k : torsion_rows_) g.torsion.push_back(diag_[k]);
        g.free_rank = n_ - b_;
        return g;
    }

    long torsion_count() const { return static_cast<long>(torsion_rows_.size()); }
    const Integer& torsion_factor(long i) const { return diag_[torsion_rows_[i]]; }

    // Representative of the i-th torsion generator, as a vector in Z^n.
    std::vector<Integer> generator(long i) const
    {
        std::vector<Integer> e(static_cast<size_t>(n_), 0);
        e[torsion_rows_[i]] = 1;
        replay_inverse(e);
        return e;
    }

    // Coordinates of the class of x in the torsion part: entry i is
    // reduced mod the i-th factor.  When require_saturated, x must lie in
    // the saturation of col(A) (all free coordinates vanish) -- for a
    // cohomology class this certifies that x is a cocycle class.
    std::vector<Integer> coords(const std::vector<Integer>& x, bool require_saturated = true) const
    {
        std::vector<Integer> y = x;
        replay_forward(y);
        if (require_saturated) {
            for (long i = b_; i < n_; ++i)
                if (y[i] != 0)
                    throw BadParams("CokernelPresentation: vector not in saturation");
        }
        std::vector<Integer> out;
        out.reserve(torsion_rows_.size());
        for (long k : torsion_rows_) out.push_back(mod_floor(y[k], diag_[k]));
        return out;
    }

private:
    struct Op {
        enum Kind : unsigned char { Swap, Neg, AddMul, Comb2 } kind;
        long i, j;
        Integer c;          // AddMul: row_i += c*row_j
        Integer u, v, s, t; // Comb2: [ri; rj] <- [[u,v],[s,t]] [ri; rj]
    };

    void replay_forward(std::vector<Integer>& x) const
    {
        for (const auto& op : log_) {
            switch (op.kind) {
            case Op::Swap: std::swap(x[op.i], x[op.j]); break;
            case Op::Neg: x[op.i] = -x[op.i]; break;
            case Op::AddMul: x[op.i] += op.c * x[op.j]; break;
            case Op::Comb2: {
                Integer xi = x[op.i], xj = x[op.j];
                x[op.i] = op.u * xi + op.v * xj;
                x[op.j] = op.s * xi + op.t * xj;
                break;
            }
            }
        }
    }

    void replay_inverse(std::vector<Integer>& x) const
    {
        for (auto it = log_.rbegin(); it != log_.rend(); ++it) {
            const auto& op = *it;
            switch (op.kind) {
            case Op::Swap: std::swap(x[op.i], x[op.j]); break;
            case Op::Neg: x[op.i] = -x[op.i]; break;
            case Op::AddMul: x[op.i] -= op.c * x[op.j]; break;
            case Op::Comb2: {
                Integer d = op.u * op.t - op.v * op.s; // +-1
                Integer xi = x[op.i], xj = x[op.j];
                x[op.i] = d * (op.t * xi - op.v * xj);
                x[op.j] = d * (op.u * xj - op.s * xi);
                break;
            }
            }
        }
    }

    // Smith form of the staircase h (n_ x b_), row ops logged, col ops free.
    void reduce_to_smith(IntMat& h)
    {
        long n = h.rows, m = h.cols;
        auto log_swap = [&](long i, long j) {
            for (long c = 0; c < m; ++c) std::swap(h.at(i, c), h.at(j, c));
            log_.push_back({Op::Swap, i, j, 0, 0, 0, 0, 0});
        };
        auto log_neg = [&](long i) {
            for (long c = 0; c < m; ++c) h.at(i, c) = -h.at(i, c);
            log_.push_back({Op::Neg, i, 0, 0, 0, 0, 0, 0});
        };
        auto log_addmul = [&](long i, long j, const Integer& c) {
            for (long col = 0; col < m; ++col)
                if (h.at(j, col) != 0) h.at(i, col) += c * h.at(j, col);
            log_.push_back({Op::AddMul, i, j, c, 0, 0, 0, 0});
        };
        auto log_comb2 = [&](long i, long j, const Integer& u, const Integer& v,
                             const Integer& s, const Integer& t) {
            for (long c = 0; c < m; ++c) {
                Integer x = h.at(i, c), y = h.at(j, c);
                h.at(i, c) = u * x + v * y;
                h.at(j, c) = s * x + t * y;
            }
            log_.push_back({Op::Comb2, i, j, 0, u, v, s, t});
        };
        auto col_addmul = [&](long j, long i, const Integer& c) {
            for (long r = 0; r < n; ++r)
                if (h.at(r, i) != 0) h.at(r, j) += c * h.at(r, i);
        };
        auto col_swap = [&](long i, long j) {
            for (long r = 0; r < n; ++r) std::swap(h.at(r, i), h.at(r, j));
        };

        for (long k = 0; k < m; ++k) {
            // staircase input: the pivot for step k can be found at or below
            // the current staircase; pick minimal |.| in submatrix
            long pi = -1, pj = -1;
            Integer best = 0;
            for (long j = k; j < m; ++j)
                for (long i = k; i < n; ++i) {
                    const Integer& x = h.at(i, j);
                    if (x == 0) continue;
                    Integer ax = abs_int(x);
                    if (pi < 0 || ax < best) { best = ax; pi = i; pj = j; }
                }
            if (pi < 0) break; // cannot happen for full-column-rank staircase
            if (pi != k) log_swap(k, pi);
            if (pj != k) col_swap(k, pj);
            bool dirty = true;
            while (dirty) {
                dirty = false;
                for (long i = k + 1; i < n; ++i) {
                    const Integer& x = h.at(i, k);
                    if (x == 0) continue;
                    const Integer& p = h.at(k, k);
                    if (x % p == 0) {
                        log_addmul(i, k, -(x / p));
                    } else {
                        Integer u, v;
                        Integer g = ext_gcd(p, x, u, v);
                        log_comb2(k, i, u, v, -(x / g), p / g);
                        dirty = true;
                    }
                }
                for (long j = k + 1; j < m; ++j) {
                    const Integer& x = h.at(k, j);
                    if (x == 0) continue;
                    const Integer& p = h.at(k, k);
                    if (x % p == 0) {
                        col_addmul(j, k, -(x / p));
                    } else {
                        detail::col_gcd_step(h, k, k, j);
                        dirty = true;
                    }
                }
            }
            if (h.at(k, k) < 0) log_neg(k);
        }
        // divisibility chain
        bool changed = true;
        while (changed) {
            changed = false;
            for (long k = 0; k + 1 < m; ++k)
                for (long l = k + 1; l < m; ++l) {
                    if (h.at(l, l) % h.at(k, k) == 0) continue;
                    changed = true;
                    col_addmul(k, l, 1);
                    Integer a0 = h.at(k, k), b0 = h.at(l, k);
                    Integer u, v;
                    Integer g = ext_gcd(a0, b0, u, v);
                    log_comb2(k, l, u, v, -(b0 / g), a0 / g);
                    if (h.at(k, l) != 0) col_addmul(l, k, -(h.at(k, l) / h.at(k, k)));
                    if (h.at(k, k) < 0) log_neg(k);
                    if (h.at(l, l) < 0) log_neg(l);
                }
        }
        diag_.resize(static_cast<size_t>(m));
        for (long k = 0; k < m; ++k) diag_[k] = h.at(k, k);
    }

    long n_ = 0;
    long b_ = 0;
    std::vector<Integer> diag_;
    std::vector<long> torsion_rows_;
    std::vector<Op> log_;
};

} // namespace latcoh

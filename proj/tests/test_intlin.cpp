#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>

#include "latcoh/intlin.hpp"

using namespace latcoh;

namespace {

IntMat random_mat(std::mt19937& rng, long rows, long cols, int lo, int hi, double density = 1.0)
{
    std::uniform_int_distribution<int> val(lo, hi);
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    IntMat m(rows, cols);
    for (long i = 0; i < rows; ++i)
        for (long j = 0; j < cols; ++j)
            if (coin(rng) <= density) m.at(i, j) = val(rng);
    return m;
}

// Counting oracle for finite cokernels: recover invariant factors of
// G = Z^n / col(A) from annihilator counts #{x in G : k*x = 0}, which equal
// prod_i gcd(k, d_i).  Enumerates cosets; independent of the SNF path.
std::vector<Integer> counting_coker_oracle(const IntMat& a)
{
    long n = a.rows;
    IntMat h = hnf_cols(a);
    REQUIRE(h.cols == n); // oracle only for finite quotients
    // full-rank column HNF is lower triangular with positive diagonal
    std::vector<long> diag(n);
    Integer order = 1;
    for (long j = 0; j < n; ++j) {
        diag[j] = static_cast<long>(h.at(j, j));
        order *= diag[j];
    }
    REQUIRE(order <= 5000);
    long ord = static_cast<long>(order);

    std::vector<std::vector<long>> reps;
    std::vector<long> cur(n, 0);
    for (long c = 0; c < ord; ++c) {
        reps.push_back(cur);
        for (long j = n - 1; j >= 0; --j) {
            if (++cur[j] < diag[j]) break;
            cur[j] = 0;
        }
    }
    auto is_in_lattice = [&](std::vector<Integer> x) {
        for (long j = n - 1; j >= 0; --j) {
            if (x[j] % h.at(j, j) != 0) return false;
            Integer q = x[j] / h.at(j, j);
            if (q != 0)
                for (long i = j; i < n; ++i) x[i] -= q * h.at(i, j);
        }
        return true;
    };
    auto annihilated_by = [&](long k) {
        long cnt = 0;
        for (const auto& r : reps) {
            std::vector<Integer> x(n);
            for (long i = 0; i < n; ++i) x[i] = Integer(k) * r[i];
            if (is_in_lattice(std::move(x))) ++cnt;
        }
        return cnt;
    };

    // per-prime exponent profiles from counts at p, p^2, ...
    std::vector<long> primes;
    {
        long rem = ord;
        for (long p = 2; p * p <= rem; ++p)
            if (rem % p == 0) {
                primes.push_back(p);
                while (rem % p == 0) rem /= p;
            }
        if (rem > 1) primes.push_back(rem);
    }
    auto vp = [](long x, long p) {
        long v = 0;
        while (x % p == 0) { x /= p; ++v; }
        return v;
    };
    std::vector<std::vector<long>> exponents; // per prime, descending exponent list
    for (long p : primes) {
        std::vector<long> counts; // c_j = #{i : v_p(d_i) >= j}
        long prev = 0, pk = 1;
        for (long j = 1;; ++j) {
            pk *= p;
            long logc = vp(annihilated_by(pk), p);
            long cj = logc - prev;
            prev = logc;
            if (cj == 0) break;
            counts.push_back(cj);
        }
        std::vector<long> exps;
        if (!counts.empty())
            for (long t = 0; t < counts[0]; ++t) {
                long e = 0;
                for (long c : counts)
                    if (c > t) ++e;
                exps.push_back(e);
            }
        exponents.push_back(exps); // already descending
    }
    size_t nf = 0;
    for (const auto& e : exponents) nf = std::max(nf, e.size());
    std::vector<Integer> inv(nf, Integer(1)); // index 0 = largest factor
    for (size_t pi = 0; pi < primes.size(); ++pi)
        for (size_t t = 0; t < exponents[pi].size(); ++t)
            for (long e = 0; e < exponents[pi][t]; ++e) inv[t] *= primes[pi];
    std::reverse(inv.begin(), inv.end());
    std::vector<Integer> out;
    for (auto& d : inv)
        if (d > 1) out.push_back(d);
    return out;
}

} // namespace

TEST_CASE("snf basics")
{
    SECTION("diag(2,3) -> [1,6]")
    {
        IntMat a{{2, 0}, {0, 3}};
        auto f = snf(a);
        REQUIRE(f.invariant_factors == std::vector<Integer>{1, 6});
        REQUIRE(f.u * f.s * f.v == a);
        auto oracle = counting_coker_oracle(a);
        REQUIRE(oracle == std::vector<Integer>{6});
    }
    SECTION("zero matrix")
    {
        IntMat a = IntMat::zero(3, 2);
        auto f = snf(a);
        REQUIRE(f.invariant_factors.empty());
        REQUIRE(f.u * f.s * f.v == a);
    }
    SECTION("identity")
    {
        auto f = snf(IntMat::identity(3));
        REQUIRE(f.invariant_factors == std::vector<Integer>{1, 1, 1});
    }
}

TEST_CASE("snf round trip on random matrices")
{
    std::mt19937 rng(12345);
    for (int iter = 0; iter < 25; ++iter) {
        long r = 1 + static_cast<long>(rng() % 8);
        long c = 1 + static_cast<long>(rng() % 8);
        IntMat a = random_mat(rng, r, c, -6, 6);
        auto f = snf(a);
        REQUIRE(f.u * f.s * f.v == a);
        REQUIRE(is_unimodular(f.u));
        REQUIRE(is_unimodular(f.v));
        for (size_t i = 0; i + 1 < f.invariant_factors.size(); ++i)
            REQUIRE(f.invariant_factors[i + 1] % f.invariant_factors[i] == 0);
    }
    // one larger sparse instance
    IntMat big = random_mat(rng, 200, 200, -2, 2, 0.05);
    auto f = snf(big);
    REQUIRE(f.u * f.s * f.v == big);
}

TEST_CASE("hnf examples")
{
    SECTION("[[2],[4]] single column")
    {
        IntMat a{{2}, {4}};
        IntMat h = hnf_cols(a);
        REQUIRE(h.cols == 1);
        REQUIRE(h.at(0, 0) == 2);
        REQUIRE(h.at(1, 0) == 4);
    }
    SECTION("identity") { REQUIRE(hnf_cols(IntMat::identity(4)) == IntMat::identity(4)); }
    SECTION("zero") { REQUIRE(hnf_cols(IntMat::zero(2, 2)).cols == 0); }
    SECTION("canonical residues")
    {
        IntMat a{{3, 1}, {0, 5}};
        IntMat h = hnf_cols(a);
        // pivot of second column reduced mod first pivot row entries
        REQUIRE(h.cols == 2);
        REQUIRE(h.at(0, 0) > 0);
        for (long j = 1; j < h.cols; ++j) {
            REQUIRE(h.at(0, j) >= 0);
            REQUIRE(h.at(0, j) < h.at(0, 0));
        }
    }
    SECTION("hnf is invariant under unimodular column mixes")
    {
        std::mt19937 rng(99);
        for (int iter = 0; iter < 10; ++iter) {
            IntMat a = random_mat(rng, 4, 3, -4, 4);
            IntMat b = a;
            // mix columns: c1 += 2*c0, swap c0,c2
            for (long i = 0; i < 4; ++i) b.at(i, 1) += 2 * b.at(i, 0);
            for (long i = 0; i < 4; ++i) std::swap(b.at(i, 0), b.at(i, 2));
            REQUIRE(hnf_cols(a) == hnf_cols(b));
        }
    }
}

TEST_CASE("kernel basis")
{
    SECTION("augmentation row")
    {
        IntMat a{{1, 1, 1}};
        IntMat k = kernel_basis(a);
        REQUIRE(k.cols == 2);
        IntMat target{{1}, {-1}, {0}};
        REQUIRE(solve_linear(k, target).has_value());
    }
    SECTION("invertible -> empty")
    {
        IntMat a{{2, 1}, {1, 1}};
        REQUIRE(kernel_basis(a).cols == 0);
    }
    SECTION("[2,4] -> (2,-1) primitive")
    {
        IntMat a{{2, 4}};
        IntMat k = kernel_basis(a);
        REQUIRE(k.cols == 1);
        REQUIRE(abs_int(k.at(0, 0)) == 2);
        REQUIRE(abs_int(k.at(1, 0)) == 1);
    }
    SECTION("saturation: kernel bases have trivial invariant factors")
    {
        std::mt19937 rng(777);
        for (int iter = 0; iter < 20; ++iter) {
            long r = 1 + static_cast<long>(rng() % 5);
            long c = 2 + static_cast<long>(rng() % 7);
            IntMat a = random_mat(rng, r, c, -5, 5);
            IntMat k = kernel_basis(a);
            REQUIRE((a * k).is_zero());
            for (const auto& d : invariant_factors(k)) REQUIRE(d == 1);
            REQUIRE(k.cols >= c - r);
        }
    }
}

TEST_CASE("solve_linear")
{
    SECTION("2x = 4") { REQUIRE(solve_linear(IntMat{{2}}, IntMat{{4}}).value().at(0, 0) == 2); }
    SECTION("2x = 3 has no integral solution")
    {
        REQUIRE(!solve_linear(IntMat{{2}}, IntMat{{3}}).has_value());
    }
    SECTION("identity system")
    {
        IntMat b{{7}, {-3}};
        REQUIRE(solve_linear(IntMat::identity(2), b).value() == b);
    }
    SECTION("soundness and completeness on small boxes")
    {
        std::mt19937 rng(4242);
        for (int iter = 0; iter < 40; ++iter) {
            IntMat a = random_mat(rng, 2, 2, -3, 3);
            IntMat b = random_mat(rng, 2, 1, -6, 6);
            auto x = solve_linear(a, b);
            bool brute = false;
            for (int u = -30; u <= 30 && !brute; ++u)
                for (int v = -30; v <= 30 && !brute; ++v)
                    if (a.at(0, 0) * u + a.at(0, 1) * v == b.at(0, 0) &&
                        a.at(1, 0) * u + a.at(1, 1) * v == b.at(1, 0))
                        brute = true;
            if (x.has_value()) {
                REQUIRE(a * x.value() == b);
            } else {
                // brute window is large enough for these coefficient sizes
                // only when a has full rank; otherwise just check soundness
                if (det(a) != 0) REQUIRE(!brute);
            }
        }
    }
}

TEST_CASE("cokernel invariants")
{
    SECTION("columns {3} in Z^1")
    {
        auto g = cokernel_invariants(IntMat{{3}}, 1);
        REQUIRE(g.torsion == std::vector<Integer>{3});
        REQUIRE(g.free_rank == 0);
    }
    SECTION("unimodular columns -> trivial")
    {
        REQUIRE(cokernel_invariants(IntMat::identity(3), 3).trivial());
    }
    SECTION("2Z x 2Z in Z^2")
    {
        IntMat a{{2, 0}, {0, 2}};
        auto g = cokernel_invariants(a, 2);
        REQUIRE(g.torsion == std::vector<Integer>{2, 2});
    }
    SECTION("matches counting oracle on random finite quotients")
    {
        std::mt19937 rng(31337);
        int done = 0;
        while (done < 15) {
            long n = 1 + static_cast<long>(rng() % 3);
            IntMat a = random_mat(rng, n, n + static_cast<long>(rng() % 2), -4, 4);
            IntMat h = hnf_cols(a);
            if (h.cols != n) continue;
            Integer order = 1;
            {
                long row = 0;
                for (long j = 0; j < n; ++j) {
                    while (h.at(row, j) == 0) ++row;
                    order *= h.at(row++, j);
                }
            }
            if (order > 4000) continue;
            auto g = cokernel_invariants(a, n);
            auto oracle = counting_coker_oracle(a);
            REQUIRE(g.torsion == oracle);
            ++done;
        }
    }
}

TEST_CASE("modp kernel")
{
    SECTION("[2] mod 2 is everything")
    {
        IntMat k = modp_kernel(IntMat{{2}}, 2);
        REQUIRE(k.cols == 1);
        REQUIRE(k.at(0, 0) == 1);
    }
    SECTION("identity mod 2 -> zero kernel")
    {
        REQUIRE(modp_kernel(IntMat::identity(2), 2).cols == 0);
    }
    SECTION("[1,1;1,1] mod 2 -> rank 1")
    {
        IntMat k = modp_kernel(IntMat{{1, 1}, {1, 1}}, 2);
        REQUIRE(rank_mod_p(k, 2) == 1);
        // brute force over (Z/2)^2
        int count = 0;
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y)
                if ((x + y) % 2 == 0) ++count;
        REQUIRE(count == 2); // rank-1 subspace
    }
}

TEST_CASE("cokernel presentation with representatives")
{
    std::mt19937 rng(2024);
    for (int iter = 0; iter < 20; ++iter) {
        long n = 2 + static_cast<long>(rng() % 4);
        long m = 1 + static_cast<long>(rng() % 4);
        IntMat a = random_mat(rng, n, m, -5, 5);
        CokernelPresentation pres(a, n);
        REQUIRE(pres.invariants() == cokernel_invariants(a, n));
        for (long i = 0; i < pres.torsion_count(); ++i) {
            auto g = pres.generator(i);
            // d * generator lies in the column lattice, generator itself does not
            IntMat gv(n, 1);
            for (long r = 0; r < n; ++r) gv.at(r, 0) = g[r];
            REQUIRE(solve_linear(a, pres.torsion_factor(i) * gv).has_value());
            REQUIRE(!solve_linear(a, gv).has_value());
            // coordinates of generator i are the i-th unit vector
            auto c = pres.coords(g);
            for (long j = 0; j < pres.torsion_count(); ++j)
                REQUIRE(c[j] == (i == j ? 1 : 0));
        }
        // coords of any column of A vanish
        if (a.cols > 0) {
            std::vector<Integer> col(static_cast<size_t>(n));
            for (long r = 0; r < n; ++r) col[r] = a.at(r, 0);
            for (const auto& c : pres.coords(col)) REQUIRE(c == 0);
        }
    }
}

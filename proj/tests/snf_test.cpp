#include "doctest.h"

#include <numeric>
#include <random>
#include <vector>

#include "qh/int_matrix.hpp"
#include "qh/snf.hpp"

using namespace qh;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int bound) {
    std::uniform_int_distribution<int> dist(-bound, bound);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

// Determinantal-divisor oracle: the k-th invariant factor is
// gcd(k x k minors) / gcd((k-1) x (k-1) minors), computed directly from the
// definition without any matrix reduction.
std::vector<Int> invariant_factors_by_minors(const IntMatrix& m) {
    int r = m.rows(), c = m.cols();
    std::vector<Int> divisors;  // divisors[k-1] = gcd of k x k minors
    for (int k = 1; k <= std::min(r, c); ++k) {
        Int g = 0;
        std::vector<int> ri(k), ci(k);
        std::iota(ri.begin(), ri.end(), 0);
        auto next_combo = [](std::vector<int>& v, int n) {
            int k2 = int(v.size());
            for (int i = k2 - 1; i >= 0; --i) {
                if (v[i] < n - (k2 - i)) {
                    ++v[i];
                    for (int j = i + 1; j < k2; ++j) v[j] = v[j - 1] + 1;
                    return true;
                }
            }
            return false;
        };
        do {
            std::iota(ci.begin(), ci.end(), 0);
            do {
                IntMatrix sub(k, k);
                for (int i = 0; i < k; ++i)
                    for (int j = 0; j < k; ++j) sub.at(i, j) = m.at(ri[i], ci[j]);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), sub.determinant().get_mpz_t());
            } while (next_combo(ci, c));
        } while (next_combo(ri, r));
        if (g == 0) break;
        divisors.push_back(g);
    }
    std::vector<Int> factors;
    Int prev = 1;
    for (const Int& d : divisors) {
        factors.push_back(d / prev);
        prev = d;
    }
    return factors;
}

}  // namespace

TEST_CASE("smith normal form matches the determinantal-divisor oracle") {
    std::mt19937 rng(20260826);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        IntMatrix m = random_matrix(rng, r, c, 5);
        SNFResult snf = smith_normal_form(m);

        // Factorization and shape.
        CHECK(snf.U.rows() == r);
        CHECK(snf.U.cols() == r);
        CHECK(snf.V.rows() == c);
        CHECK(snf.V.cols() == c);
        CHECK(snf.U * m * snf.V == snf.D);
        Int du = snf.U.determinant(), dv = snf.V.determinant();
        CHECK((du == 1 || du == -1));
        CHECK((dv == 1 || dv == -1));

        // Diagonal, nonnegative, divisibility chain, off-diagonal zero.
        auto diag = snf.diagonal();
        for (int i = 0; i < snf.D.rows(); ++i)
            for (int j = 0; j < snf.D.cols(); ++j)
                if (i != j) CHECK(snf.D.at(i, j) == 0);
        int rank = 0;
        for (size_t i = 0; i < diag.size(); ++i) {
            CHECK(diag[i] >= 0);
            if (diag[i] != 0) ++rank;
            if (i + 1 < diag.size() && diag[i] != 0 && diag[i + 1] != 0)
                CHECK(diag[i + 1] % diag[i] == 0);
            if (diag[i] == 0 && i + 1 < diag.size()) CHECK(diag[i + 1] == 0);
        }
        CHECK(snf.rank == rank);

        // Invariant factors from first principles.
        auto oracle = invariant_factors_by_minors(m);
        REQUIRE(oracle.size() == size_t(rank));
        for (int i = 0; i < rank; ++i) CHECK(diag[i] == oracle[i]);
    }
}

TEST_CASE("solve_integer finds solutions for constructed systems") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> dist(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        int r = 1 + int(rng() % 5), c = 1 + int(rng() % 5);
        IntMatrix m = random_matrix(rng, r, c, 5);
        std::vector<Int> x(c);
        for (auto& v : x) v = dist(rng);
        std::vector<Int> b = m.apply(x);
        auto sol = solve_integer(m, b);
        REQUIRE(sol.has_value());
        CHECK(m.apply(*sol) == b);
    }
}

TEST_CASE("solve_integer rejects systems with no integer solution") {
    IntMatrix m(1, 1);
    m.at(0, 0) = 2;
    CHECK_FALSE(solve_integer(m, {Int(1)}).has_value());
    CHECK(solve_integer(m, {Int(6)}).has_value());

    // 2x + 4y = 3 has no integer solution (gcd 2 does not divide 3).
    IntMatrix m2(1, 2);
    m2.at(0, 0) = 2;
    m2.at(0, 1) = 4;
    CHECK_FALSE(solve_integer(m2, {Int(3)}).has_value());
    auto s = solve_integer(m2, {Int(10)});
    REQUIRE(s.has_value());
    CHECK(2 * (*s)[0] + 4 * (*s)[1] == 10);

    // Inconsistent overdetermined system.
    IntMatrix m3(2, 1);
    m3.at(0, 0) = 1;
    m3.at(1, 0) = 1;
    CHECK_FALSE(solve_integer(m3, {Int(0), Int(1)}).has_value());
}

TEST_CASE("kernel_basis spans exactly the integer kernel lattice") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        int r = 1 + int(rng() % 4), c = 1 + int(rng() % 4);
        IntMatrix m = random_matrix(rng, r, c, 3);
        IntMatrix k = kernel_basis(m);
        SNFResult snf = smith_normal_form(m);
        CHECK(k.cols() == c - snf.rank);

        // Each column really lies in the kernel.
        for (int j = 0; j < k.cols(); ++j) {
            auto col = k.column(j);
            for (const Int& v : m.apply(col)) CHECK(v == 0);
        }

        // Brute force: every small integer kernel vector is an integer
        // combination of the basis columns.
        std::vector<int> idx(c, -3);
        while (true) {
            std::vector<Int> v(c);
            for (int j = 0; j < c; ++j) v[j] = idx[j];
            bool in_kernel = true;
            for (const Int& e : m.apply(v))
                if (e != 0) in_kernel = false;
            if (in_kernel) {
                if (k.cols() == 0) {
                    for (const Int& e : v) CHECK(e == 0);
                } else {
                    CHECK(solve_integer(k, v).has_value());
                }
            }
            int p = 0;
            while (p < c && idx[p] == 3) idx[p++] = -3;
            if (p == c) break;
            ++idx[p];
        }
    }
}

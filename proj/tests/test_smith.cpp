#include "qhk/smith.hpp"

#include <doctest.h>

#include <functional>
#include <random>

using namespace qhk;

namespace {

IntMatrix random_matrix(std::mt19937& rng, long max_dim, long max_entry) {
    std::uniform_int_distribution<long> dim(0, max_dim);
    long r = dim(rng), c = dim(rng);
    std::uniform_int_distribution<long> val(-max_entry, max_entry);
    IntMatrix m(r, c);
    for (long i = 0; i < r; ++i)
        for (long j = 0; j < c; ++j) m(i, j) = val(rng);
    return m;
}

bool is_diagonal_chain(const IntMatrix& d) {
    for (long i = 0; i < d.rows(); ++i)
        for (long j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    long k = std::min(d.rows(), d.cols());
    for (long i = 0; i < k; ++i) {
        if (d(i, i) < 0) return false;
        if (i + 1 < k && d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
        if (i + 1 < k && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
    }
    return true;
}

// gcd of all k x k minors; the classical characterization d1...dk = g_k.
Int minor_gcd(const IntMatrix& a, long k, std::vector<long>& rows, std::vector<long>& cols,
              long ri, long ci) {
    // enumerate row subsets then column subsets recursively
    if (static_cast<long>(rows.size()) < k) {
        Int g = 0;
        for (long i = ri; i <= a.rows() - (k - static_cast<long>(rows.size())); ++i) {
            rows.push_back(i);
            g = gcd(g, minor_gcd(a, k, rows, cols, i + 1, 0));
            rows.pop_back();
            if (g == 1) return g;
        }
        return g;
    }
    if (static_cast<long>(cols.size()) < k) {
        Int g = 0;
        for (long j = ci; j <= a.cols() - (k - static_cast<long>(cols.size())); ++j) {
            cols.push_back(j);
            g = gcd(g, minor_gcd(a, k, rows, cols, 0, j + 1));
            cols.pop_back();
            if (g == 1) return g;
        }
        return g;
    }
    // determinant of the k x k submatrix by Laplace on small k
    IntMatrix sub(k, k);
    for (long i = 0; i < k; ++i)
        for (long j = 0; j < k; ++j) sub(i, j) = a(rows[i], cols[j]);
    // Bareiss-free tiny determinant: expansion, k <= 4
    std::function<Int(const IntMatrix&)> det = [&](const IntMatrix& m) -> Int {
        long n = m.rows();
        if (n == 0) return 1;
        if (n == 1) return m(0, 0);
        Int s = 0;
        for (long j = 0; j < n; ++j) {
            if (m(0, j) == 0) continue;
            IntMatrix mm(n - 1, n - 1);
            for (long i = 1; i < n; ++i) {
                long cj = 0;
                for (long jj = 0; jj < n; ++jj) {
                    if (jj == j) continue;
                    mm(i - 1, cj++) = m(i, jj);
                }
            }
            Int term = m(0, j) * det(mm);
            s += (j % 2 == 0) ? term : -term;
        }
        return s;
    };
    return abs(det(sub));
}

std::vector<Int> minors_oracle(const IntMatrix& a) {
    std::vector<Int> out;
    Int prev = 1;
    for (long k = 1; k <= std::min(a.rows(), a.cols()); ++k) {
        std::vector<long> rows, cols;
        Int g = minor_gcd(a, k, rows, cols, 0, 0);
        if (g == 0) break;
        out.push_back(g / prev);
        prev = g;
    }
    return out;
}

}  // namespace

TEST_CASE("smith normal form on the pinned examples") {
    SUBCASE("diag(2,3) -> diag(1,6)") {
        auto s = smith_normal_form(IntMatrix::from_rows({{2, 0}, {0, 3}}));
        CHECK(s.D(0, 0) == 1);
        CHECK(s.D(1, 1) == 6);
    }
    SUBCASE("identity stays the identity") {
        auto s = smith_normal_form(IntMatrix::identity(3));
        CHECK(s.D == IntMatrix::identity(3));
    }
    SUBCASE("[[2,4],[6,8]] -> diag(2,4), matching the minor gcds") {
        IntMatrix a = IntMatrix::from_rows({{2, 4}, {6, 8}});
        auto s = smith_normal_form(a);
        CHECK(s.D(0, 0) == 2);
        CHECK(s.D(1, 1) == 4);
        auto oracle = minors_oracle(a);
        REQUIRE(oracle.size() == 2);
        CHECK(oracle[0] == 2);
        CHECK(oracle[1] == 4);
    }
    SUBCASE("empty and zero matrices") {
        auto s = smith_normal_form(IntMatrix(0, 0));
        CHECK(s.D.rows() == 0);
        auto z = smith_normal_form(IntMatrix(2, 3));
        CHECK(z.D.is_zero());
        CHECK(z.U == IntMatrix::identity(2));
    }
}

TEST_CASE("smith system: U A V = D, unimodular transforms, divisibility chain") {
    std::mt19937 rng(20240311);
    for (int iter = 0; iter < 1000; ++iter) {
        IntMatrix a = random_matrix(rng, 8, 9);
        SmithSystem s = smith_system(a);
        CHECK(is_diagonal_chain(s.D));
        CHECK(s.U * a * s.V == s.D);
        CHECK(s.U * s.Uinv == IntMatrix::identity(a.rows()));
        CHECK(s.V * s.Vinv == IntMatrix::identity(a.cols()));
        // recombining through the inverses reproduces A
        CHECK(s.Uinv * s.D * s.Vinv == a);
    }
}

TEST_CASE("smith reproduces A from U^-1 D V^-1 on 30x30 inputs") {
    std::mt19937 rng(777);
    std::uniform_int_distribution<long> val(-100, 100);
    for (int iter = 0; iter < 12; ++iter) {
        IntMatrix a(30, 30);
        for (long i = 0; i < 30; ++i)
            for (long j = 0; j < 30; ++j) a(i, j) = val(rng);
        SmithSystem s = smith_system(a);
        CHECK(s.Uinv * s.D * s.Vinv == a);
        CHECK(is_diagonal_chain(s.D));
    }
}

TEST_CASE("invariant factors match the gcd-of-minors definition up to 4x4") {
    std::mt19937 rng(99);
    std::uniform_int_distribution<long> dim(1, 4), val(-5, 5);
    for (int iter = 0; iter < 300; ++iter) {
        IntMatrix a(dim(rng), dim(rng));
        for (long i = 0; i < a.rows(); ++i)
            for (long j = 0; j < a.cols(); ++j) a(i, j) = val(rng);
        auto oracle = minors_oracle(a);
        InvariantFactors inv = invariant_factors(a);
        REQUIRE(inv.rank == static_cast<long>(oracle.size()));
        for (size_t k = 0; k < oracle.size(); ++k) CHECK(inv.factors[k] == oracle[k]);

        // the sparse-elimination route agrees with the tracked dense route
        SmithSystem s = smith_system(a);
        CHECK(s.rank == inv.rank);
        for (long k = 0; k < s.rank; ++k) CHECK(s.D(k, k) == inv.factors[k]);
    }
}

TEST_CASE("integer solve finds witnesses exactly when solvable") {
    IntMatrix a = IntMatrix::from_rows({{2, 0}, {0, 3}});
    SmithSystem s = smith_system(a);
    auto x = solve(s, {4, 9});
    REQUIRE(x.has_value());
    CHECK(a.apply(*x) == std::vector<Int>{4, 9});
    CHECK(!solve(s, {1, 1}).has_value());

    IntMatrix b = IntMatrix::from_rows({{1, -1}});
    SmithSystem sb = smith_system(b);
    auto y = solve(sb, {5});
    REQUIRE(y.has_value());
    CHECK(b.apply(*y) == std::vector<Int>{5});
}

#include <doctest.h>

#include <random>

#include "ehrhart/errors.hpp"
#include "ehrhart/linalg.hpp"

using namespace ehrhart;

namespace {

IntMatrix random_matrix(std::mt19937& rng, int r, int c, int lo = -5, int hi = 5) {
    std::uniform_int_distribution<int> dist(lo, hi);
    IntMatrix m(r, c);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < c; ++j) m.at(i, j) = dist(rng);
    return m;
}

// cofactor-expansion determinant, the slow reference
Int det_reference(const IntMatrix& m) {
    const int n = m.rows();
    if (n == 0) return 1;
    if (n == 1) return m.at(0, 0);
    Int acc = 0;
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        IntMatrix minor(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                minor.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Int term = m.at(0, j) * det_reference(minor);
        acc += (j % 2 == 0) ? term : -term;
    }
    return acc;
}

bool is_identity(const IntMatrix& m) {
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j)
            if (m.at(i, j) != (i == j ? 1 : 0)) return false;
    return true;
}

} // namespace

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937 rng(7);
    for (int n = 1; n <= 5; ++n)
        for (int rep = 0; rep < 20; ++rep) {
            IntMatrix m = random_matrix(rng, n, n);
            CHECK(determinant(m) == det_reference(m));
        }
}

TEST_CASE("rank") {
    std::mt19937 rng(11);
    IntMatrix m = random_matrix(rng, 3, 5);
    // duplicate a row: rank stays <= 2 + independent rows
    for (int j = 0; j < 5; ++j) m.at(2, j) = m.at(0, j) + m.at(1, j);
    CHECK(rank(m) <= 2);
    CHECK(rank(IntMatrix::identity(4)) == 4);
    CHECK(rank(IntMatrix(3, 3)) == 0);
}

TEST_CASE("smith normal form properties") {
    std::mt19937 rng(13);
    for (int rep = 0; rep < 40; ++rep) {
        int r = 1 + rep % 4, c = 1 + (rep / 2) % 4;
        IntMatrix m = random_matrix(rng, r, c);
        SmithForm snf = smith_normal_form(m);

        // D = U * A * V and A = Uinv * D * Vinv
        IntMatrix uav = snf.u * m * snf.v;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) CHECK(uav.at(i, j) == snf.d.at(i, j));
        IntMatrix back = snf.uinv * snf.d * snf.vinv;
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j) CHECK(back.at(i, j) == m.at(i, j));

        CHECK(is_identity(snf.u * snf.uinv));
        CHECK(is_identity(snf.v * snf.vinv));

        // diagonal, positive, divisibility chain
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < c; ++j)
                if (i != j) CHECK(snf.d.at(i, j) == 0);
        for (std::size_t i = 0; i < snf.diag.size(); ++i) {
            CHECK(snf.diag[i] > 0);
            if (i + 1 < snf.diag.size()) CHECK(snf.diag[i + 1] % snf.diag[i] == 0);
        }
        CHECK(snf.rank == rank(m));
    }
}

TEST_CASE("solve") {
    IntMatrix a(2, 2);
    a.at(0, 0) = 2; a.at(0, 1) = 1;
    a.at(1, 0) = 1; a.at(1, 1) = 1;
    auto x = solve(a, {Int(3), Int(2)});
    CHECK(x[0] == 1);
    CHECK(x[1] == 1);
    IntMatrix sing(2, 2);
    sing.at(0, 0) = 1; sing.at(0, 1) = 1;
    sing.at(1, 0) = 2; sing.at(1, 1) = 2;
    CHECK_THROWS_AS(solve(sing, {Int(1), Int(1)}), InternalError);
}

TEST_CASE("hyperplane normal") {
    std::mt19937 rng(17);
    for (int rep = 0; rep < 30; ++rep) {
        int n = 2 + rep % 4;
        IntMatrix rows = random_matrix(rng, n - 1, n);
        std::vector<Int> nrm = hyperplane_normal(rows);
        bool zero = true;
        Int g = 0;
        for (const auto& c : nrm) {
            if (c != 0) zero = false;
            g = gcd(g, c);
        }
        if (zero) {
            CHECK(rank(rows) < n - 1);
            continue;
        }
        CHECK(g == 1);
        for (int i = 0; i < n - 1; ++i) {
            Int dot = 0;
            for (int j = 0; j < n; ++j) dot += rows.at(i, j) * nrm[j];
            CHECK(dot == 0);
        }
    }
}

#include "perfdel/linalg.hpp"

#include "perfdel/certify.hpp"

#include <doctest.h>

#include <random>

using namespace perfdel;

namespace {

Mat random_matrix(std::mt19937_64& rng, int rows, int cols, long span = 6) {
    std::uniform_int_distribution<long> num(-span, span), den(1, 4);
    Mat m(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) m(i, j) = ratio(num(rng), den(rng));
    return m;
}

// leading principal minors, for the ldlt cross-check
bool all_leading_minors_positive(const Mat& m) {
    for (int k = 1; k <= m.rows(); ++k) {
        Mat sub(k, k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) sub(i, j) = m(i, j);
        if (determinant(sub) <= 0) return false;
    }
    return true;
}

} // namespace

TEST_SUITE("linalg") {

TEST_CASE("rank and nullspace basics") {
    SUBCASE("identity") {
        const auto rn = rank_and_nullspace(Mat::identity(3));
        CHECK(rn.rank == 3);
        CHECK(rn.nullspace.empty());
    }
    SUBCASE("zero row") {
        Mat z(1, 3);
        const auto rn = rank_and_nullspace(z);
        CHECK(rn.rank == 0);
        CHECK(rn.nullspace.size() == 3);
    }
}

TEST_CASE("nullspace vectors satisfy m v = 0 exactly") {
    std::mt19937_64 rng(23);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> dim(1, 6);
        const Mat m = random_matrix(rng, dim(rng), dim(rng));
        const auto rn = rank_and_nullspace(m);
        CHECK(rn.rank + static_cast<int>(rn.nullspace.size()) == m.cols());
        for (const auto& v : rn.nullspace) CHECK(is_zero(m * v));
        // independence: stack the basis and check its rank
        if (!rn.nullspace.empty()) {
            Mat stacked(static_cast<int>(rn.nullspace.size()), m.cols());
            for (std::size_t i = 0; i < rn.nullspace.size(); ++i)
                for (int j = 0; j < m.cols(); ++j) stacked(static_cast<int>(i), j) = rn.nullspace[i][j];
            CHECK(rank_of(stacked) == static_cast<int>(rn.nullspace.size()));
        }
        CHECK(rank_of(m) == rank_of(transpose(m)));
    }
}

TEST_CASE("determinant basics") {
    CHECK(determinant(Mat::identity(4)) == 1);
    Mat rep(2, 2);
    rep(0, 0) = 1;
    rep(0, 1) = 2;
    rep(1, 0) = 1;
    rep(1, 1) = 2;
    CHECK(determinant(rep) == 0);
    Mat nonsquare(2, 3);
    CHECK_THROWS_AS(determinant(nonsquare), std::invalid_argument);
}

TEST_CASE("determinant nonzero iff full rank") {
    std::mt19937_64 rng(31);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> dim(1, 5);
        const int n = dim(rng);
        const Mat m = random_matrix(rng, n, n);
        CHECK((determinant(m) != 0) == (rank_of(m) == n));
    }
}

TEST_CASE("determinant is alternating and multilinear in rows") {
    std::mt19937_64 rng(37);
    const Mat m = random_matrix(rng, 4, 4);
    Mat swapped = m;
    for (int j = 0; j < 4; ++j) std::swap(swapped(0, j), swapped(2, j));
    CHECK(determinant(swapped) == -determinant(m));
    Mat scaled = m;
    for (int j = 0; j < 4; ++j) scaled(1, j) *= ratio(3, 2);
    CHECK(determinant(scaled) == ratio(3, 2) * determinant(m));
}

TEST_CASE("uniqueness-system matrix at the pinned instance") {
    // the 4x4 system at (d=7, n=3, s=1): nonsingular with determinant 240
    const auto t = uniqueness_determinants(7, 2, 1);
    CHECK(t.det4 == 240);
    CHECK(t.det3 == -80);
}

TEST_CASE("ldlt classification") {
    SUBCASE("identity") {
        const auto f = ldlt(Mat::identity(2));
        REQUIRE(f.has_value());
        CHECK(f->positive_definite);
        CHECK(f->diag == std::vector<Rat>{Rat(1), Rat(1)});
    }
    SUBCASE("negative pivot") {
        Mat m = Mat::identity(2);
        m(1, 1) = -1;
        CHECK(!ldlt(m).has_value());
    }
    SUBCASE("semidefinite zero pivot") {
        Mat m(2, 2); // [[1,0],[0,0]]
        m(0, 0) = 1;
        const auto f = ldlt(m);
        REQUIRE(f.has_value());
        CHECK(!f->positive_definite);
    }
    SUBCASE("zero pivot with nonzero row is indefinite") {
        Mat m(2, 2); // [[0,1],[1,0]]
        m(0, 1) = m(1, 0) = 1;
        CHECK(!ldlt(m).has_value());
    }
    SUBCASE("requires symmetry") {
        Mat m(2, 2);
        m(0, 1) = 1;
        CHECK_THROWS_AS(ldlt(m), std::invalid_argument);
    }
}

TEST_CASE("ldlt positive definite iff leading minors positive") {
    std::mt19937_64 rng(41);
    for (int iter = 0; iter < 40; ++iter) {
        std::uniform_int_distribution<int> dim(1, 6);
        const int n = dim(rng);
        Mat m = random_matrix(rng, n, n, 3);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) m(j, i) = m(i, j);
        const auto f = ldlt(m);
        const bool pd = f.has_value() && f->positive_definite;
        CHECK(pd == all_leading_minors_positive(m));
        if (pd) {
            // reconstruct m = L D L^T
            Mat ld = f->lower;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) ld(i, j) *= f->diag[j];
            CHECK(ld * transpose(f->lower) == m);
        }
    }
}

TEST_CASE("ldlt_solve inverts positive definite systems") {
    std::mt19937_64 rng(43);
    for (int iter = 0; iter < 20; ++iter) {
        const int n = 4;
        const Mat a = random_matrix(rng, n, n, 3);
        Mat m = transpose(a) * a; // PSD; PD with probability ~1
        for (int i = 0; i < n; ++i) m(i, i) += 1;
        const auto f = ldlt(m);
        REQUIRE(f.has_value());
        REQUIRE(f->positive_definite);
        Vec rhs(n);
        std::uniform_int_distribution<long> num(-9, 9);
        for (auto& e : rhs) e = num(rng);
        CHECK(m * ldlt_solve(*f, rhs) == rhs);
    }
}

TEST_CASE("solve_columns") {
    Mat b(3, 2);
    b(0, 0) = 1;
    b(1, 1) = 2;
    b(2, 0) = 1;
    b(2, 1) = 1;
    const auto y = solve_columns(b, Vec{Rat(3), Rat(4), Rat(5)});
    REQUIRE(y.has_value());
    CHECK(*y == Vec{Rat(3), Rat(2)});
    CHECK(!solve_columns(b, Vec{Rat(3), Rat(4), Rat(6)}).has_value());
}

} // TEST_SUITE

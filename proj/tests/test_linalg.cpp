#include <doctest.h>

#include <random>

#include "obcalc/linalg.hpp"
#include "oracles.hpp"

using namespace obcalc::linalg;

namespace {

IntMatrix from_rows(const std::vector<std::vector<long>>& rows) {
    IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = 0; j < rows[i].size(); ++j) m.at(i, j) = rows[i][j];
    return m;
}

// Star-shaped presentation of Y_m: central -1 vertex joined to arms
// -2, -2, -(m+2). Used here as a fixed linear-algebra workload; the
// seifert module builds the same matrix through its own constructor.
IntMatrix ym_star(long m) {
    IntMatrix s = from_rows({{-1, 1, 1, 1}, {1, -2, 0, 0}, {1, 0, -2, 0}, {1, 0, 0, 0}});
    s.at(3, 3) = -(m + 2);
    return s;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m.at(i, j) = d(rng);
    return m;
}

IntMatrix random_symmetric(std::mt19937_64& rng, std::size_t n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i; j < n; ++j) {
            int v = d(rng);
            m.at(i, j) = v;
            m.at(j, i) = v;
        }
    return m;
}

// Random unimodular matrix as a product of shear and swap moves.
IntMatrix random_unimodular(std::mt19937_64& rng, std::size_t n) {
    std::uniform_int_distribution<int> shear(-2, 2);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    IntMatrix u = IntMatrix::identity(n);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        Int f = shear(rng);
        for (std::size_t k = 0; k < n; ++k) u.at(i, k) += f * u.at(j, k);
    }
    return u;
}

}  // namespace

TEST_CASE("smith normal form on pinned instances") {
    SUBCASE("diag(2,3) -> diag(1,6)") {
        IntMatrix a = from_rows({{2, 0}, {0, 3}});
        SmithResult r = smith_normal_form(a);
        CHECK(r.d == from_rows({{1, 0}, {0, 6}}));
        CHECK(oracles::smith_result_valid(a, r));
    }
    SUBCASE("identity is fixed") {
        IntMatrix a = IntMatrix::identity(3);
        CHECK(smith_normal_form(a).d == a);
    }
    SUBCASE("zero 1x1") {
        IntMatrix a = from_rows({{0}});
        CHECK(smith_normal_form(a).d == a);
    }
}

TEST_CASE("smith normal form random property suite") {
    std::mt19937_64 rng(20240811);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    for (int iter = 0; iter < 200; ++iter) {
        IntMatrix a = random_matrix(rng, dim(rng), dim(rng), -9, 9);
        CAPTURE(a.to_string());
        CHECK(oracles::smith_result_valid(a, smith_normal_form(a)));
    }
}

TEST_CASE("homology from presentation") {
    CHECK(homology_from_presentation(from_rows({{-2}})) ==
          AbelianGroup{{Int(2)}, 0});
    CHECK(homology_from_presentation(from_rows({{0}})) == AbelianGroup{{}, 1});
    CHECK(homology_from_presentation(IntMatrix::identity(4)) == AbelianGroup{{}, 0});

    SUBCASE("Y_m presentations have order four") {
        for (long m = 0; m <= 20; ++m) {
            AbelianGroup g = homology_from_presentation(ym_star(m));
            REQUIRE(g.is_finite());
            CHECK(g.order() == 4);
        }
        // m even gives Z/2+Z/2, m odd gives Z/4.
        CHECK(homology_from_presentation(ym_star(0)).invariant_factors ==
              std::vector<Int>{2, 2});
        CHECK(homology_from_presentation(ym_star(1)).invariant_factors ==
              std::vector<Int>{4});
    }
}

TEST_CASE("determinant") {
    CHECK(determinant(IntMatrix::identity(3)) == 1);
    CHECK(determinant(from_rows({{-1, 1}, {1, -2}})) == 1);
    for (long m = 0; m <= 20; ++m) CHECK(determinant(ym_star(m)) == -4);
    CHECK_THROWS_AS(determinant(from_rows({{1, 2, 3}, {4, 5, 6}})), std::invalid_argument);
    SUBCASE("agrees with cofactor expansion on randoms") {
        std::mt19937_64 rng(7);
        for (int iter = 0; iter < 50; ++iter) {
            IntMatrix a = random_matrix(rng, 3, 3, -6, 6);
            Int co = a.at(0, 0) * (a.at(1, 1) * a.at(2, 2) - a.at(1, 2) * a.at(2, 1)) -
                     a.at(0, 1) * (a.at(1, 0) * a.at(2, 2) - a.at(1, 2) * a.at(2, 0)) +
                     a.at(0, 2) * (a.at(1, 0) * a.at(2, 1) - a.at(1, 1) * a.at(2, 0));
            CHECK(determinant(a) == co);
        }
    }
}

TEST_CASE("signature on pinned instances") {
    CHECK(signature(from_rows({{-2}})) == -1);
    CHECK(signature(from_rows({{0, 1}, {1, 0}})) == 0);  // hyperbolic block
    CHECK(signature(IntMatrix::identity(5)) == 5);
    CHECK(signature(from_rows({{0}})) == 0);
    CHECK_THROWS_AS(signature(from_rows({{1, 2}, {3, 4}})), std::invalid_argument);
    // The Y_m star matrix is indefinite: one positive eigenvalue.
    for (long m = 0; m <= 20; ++m) {
        CHECK(signature(ym_star(m)) == -2);
        CHECK(oracles::charpoly_signature(ym_star(m)) == -2);
    }
}

TEST_CASE("signature properties") {
    std::mt19937_64 rng(20240812);
    std::uniform_int_distribution<std::size_t> dim(1, 5);
    SUBCASE("matches the characteristic-polynomial oracle") {
        for (int iter = 0; iter < 120; ++iter) {
            IntMatrix s = random_symmetric(rng, dim(rng), -5, 5);
            CAPTURE(s.to_string());
            CHECK(signature(s) == oracles::charpoly_signature(s));
        }
    }
    SUBCASE("invariant under unimodular congruence") {
        for (int iter = 0; iter < 60; ++iter) {
            std::size_t n = dim(rng);
            IntMatrix s = random_symmetric(rng, n, -5, 5);
            IntMatrix p = random_unimodular(rng, n);
            IntMatrix pt(n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) pt.at(i, j) = p.at(j, i);
            CHECK(signature(p * s * pt) == signature(s));
        }
    }
}

TEST_CASE("solve_rational") {
    CHECK(solve_rational(from_rows({{-2}}), {Rat(0)}) == std::vector<Rat>{Rat(0)});
    CHECK(solve_rational(from_rows({{-2}}), {Rat(1)}) == std::vector<Rat>{Rat(-1, 2)});
    CHECK_THROWS_AS(solve_rational(from_rows({{1, 1}, {1, 1}}), {Rat(1), Rat(0)}),
                    std::domain_error);

    SUBCASE("residual is exactly zero") {
        std::mt19937_64 rng(99);
        std::uniform_int_distribution<int> d(-9, 9);
        int solved = 0;
        while (solved < 40) {
            IntMatrix a = random_matrix(rng, 4, 4, -9, 9);
            if (determinant(a) == 0) continue;
            std::vector<Rat> b(4);
            for (Rat& x : b) {
                x = Rat(d(rng), 1 + std::abs(d(rng)));
                x.canonicalize();
            }
            std::vector<Rat> x = solve_rational(a, b);
            for (std::size_t i = 0; i < 4; ++i) {
                Rat acc;
                for (std::size_t j = 0; j < 4; ++j) acc += Rat(a.at(i, j)) * x[j];
                CHECK(acc == b[i]);
            }
            ++solved;
        }
    }
}

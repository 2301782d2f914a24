#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "lefschetz/exact_linalg.hpp"
#include "lefschetz/snf_theorems.hpp"

using namespace lefschetz;

namespace {

std::vector<mpz_class> sorted_nonunits(const ZMatrix& m) {
    auto v = smith_normal_form(m).nonunit();
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace

TEST_CASE("build_mr shapes and entries") {
    CHECK(build_mr(4, 4, 4, 4) == ZMatrix{{6, 4}, {4, 6}});
    CHECK(build_mr(4, 4, 4, 3) == ZMatrix{{4}, {6}, {4}});
    // middle rank of the (a+b, a+c, b+c) substitution at a = b = c = 1
    CHECK(build_mr(2, 2, 2, 1) == ZMatrix{{2}});
    CHECK_THROWS_AS(build_mr(3, 4, 4, 4), PreconditionError);
    CHECK_THROWS_AS(build_mr(4, 4, 4, 5), PreconditionError);
    CHECK_THROWS_AS(build_mr(4, 4, 4, 2), PreconditionError);
}

TEST_CASE("middle-rank build_mr is the c x c binomial band matrix") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c) {
                if (!(a + b >= a + c && a + c >= b + c)) continue; // A >= B >= C
                int r = a + b + c - 2;
                ZMatrix m = build_mr(a + b, a + c, b + c, r);
                REQUIRE(m.rows() == c);
                REQUIRE(m.cols() == c);
                for (int i = 1; i <= c; ++i)
                    for (int j = 1; j <= c; ++j)
                        CHECK(m.at(i - 1, j - 1) == binomial(a + b, b + i - j));
            }
}

TEST_CASE("multinomial reduction specializes to the trivariate one") {
    ZMatrix tri = build_mr(4, 4, 4, 4);
    ZMatrix multi = build_multinomial_mr({4, 4, 4}, 4);
    CHECK(multi == tri); // identical here, not merely permuted
    CHECK(sorted_nonunits(multi) == sorted_nonunits(tri));

    // degenerate boundary: no row monomials at all
    ZMatrix empty = build_multinomial_mr({2, 2}, 1);
    CHECK(empty.rows() == 0);
    CHECK(empty.cols() == 1);

    CHECK_THROWS_AS(build_multinomial_mr({2, 4}, 2), PreconditionError);
}

TEST_CASE("carlitz closed forms") {
    auto c1 = carlitz_closed_forms(3, 2, 1);
    REQUIRE(c1.has_value());
    CHECK(*c1 == std::vector<mpz_class>{10});

    auto c2 = carlitz_closed_forms(2, 2, 2);
    REQUIRE(c2.has_value());
    CHECK(*c2 == std::vector<mpz_class>{2, 10});

    auto c3 = carlitz_closed_forms(3, 2, 2);
    REQUIRE(c3.has_value());
    CHECK(*c3 == std::vector<mpz_class>{5, 10});

    CHECK_FALSE(carlitz_closed_forms(3, 3, 3).has_value());
}

TEST_CASE("closed forms match direct smith forms, a,b <= 6") {
    for (int a = 1; a <= 6; ++a)
        for (int b = 1; b <= 6; ++b) {
            for (int c = 1; c <= 2; ++c) {
                ZMatrix carlitz(c, c);
                for (int i = 1; i <= c; ++i)
                    for (int j = 1; j <= c; ++j)
                        carlitz.at(i - 1, j - 1) = binomial(a + b, b + i - j);
                auto expected = carlitz_closed_forms(a, b, c);
                REQUIRE(expected.has_value());
                CHECK(smith_normal_form(carlitz).entries == *expected);
            }
        }
}

TEST_CASE("the explicit 2x2 unimodular transform diagonalizes the a=b case") {
    for (int a : {2, 3}) {
        ZMatrix m(2, 2);
        for (int i = 1; i <= 2; ++i)
            for (int j = 1; j <= 2; ++j) m.at(i - 1, j - 1) = binomial(2 * a, a + i - j);
        ZMatrix p{{1, -1}, {-1 - 3 * a, 2 + 3 * a}};
        ZMatrix q{{2, 1}, {1, 1}};
        ZMatrix d = p * m * q;
        CHECK(d.at(0, 1) == 0);
        CHECK(d.at(1, 0) == 0);
        CHECK(d.at(0, 0) == binomial(2 * a, a) / (a + 1));
        CHECK(d.at(1, 1) == binomial(2 * a + 1, a + 1));
    }
}

TEST_CASE("symbolic reduction small cases") {
    TermMatrix t = symbolic_reduction(2, 2, 2, 1);
    REQUIRE(t.rows == 1);
    REQUIRE(t.cols == 1);
    CHECK(t.at(0, 0) == BivariateTerm{-2, 1, 1});

    TermMatrix col = symbolic_reduction(4, 4, 4, 3);
    REQUIRE(col.rows == 3);
    REQUIRE(col.cols == 1);
    CHECK(col.at(0, 0) == BivariateTerm{-4, 3, 1});
    CHECK(col.at(1, 0) == BivariateTerm{-6, 2, 2});
    CHECK(col.at(2, 0) == BivariateTerm{-4, 1, 3});
}

TEST_CASE("symbolic reduction matches the closed form across the grid") {
    for (int A = 2; A <= 5; ++A)
        for (int B = 2; B <= A; ++B)
            for (int C = 2; C <= B; ++C) {
                int e = A + B + C - 3;
                for (int r = A - 1; 2 * r <= e - 1; ++r) {
                    TermMatrix t = symbolic_reduction(A, B, C, r);
                    ZMatrix m = build_mr(A, B, C, r);
                    REQUIRE(t.rows == m.rows());
                    REQUIRE(t.cols == m.cols());
                    int sign = (A % 2 == 0) ? -1 : 1; // (-1)^(A-1)
                    for (int i = 1; i <= t.rows; ++i)
                        for (int j = 1; j <= t.cols; ++j) {
                            const BivariateTerm& term = t.at(i - 1, j - 1);
                            CHECK(term.coeff == sign * m.at(i - 1, j - 1));
                            if (term.coeff != 0) {
                                CHECK(term.ypow == A + B - r - i + j - 2);
                                CHECK(term.zpow == r - B + i - j + 2);
                            }
                        }
                }
            }
}

TEST_CASE("substituting y = z = 1 reproduces the sign-scaled binomial matrix") {
    TermMatrix t = symbolic_reduction(4, 4, 4, 4);
    ZMatrix m = build_mr(4, 4, 4, 4);
    for (int i = 0; i < t.rows; ++i)
        for (int j = 0; j < t.cols; ++j) CHECK(t.at(i, j).coeff == -m.at(i, j));
}

TEST_CASE("theorem verification reports") {
    RingSpec spec{4, 4, 4};
    VerificationReport i = verify_snf_theorem(Thm1Part::I, spec);
    CHECK(i.passed);
    VerificationReport ii = verify_snf_theorem(Thm1Part::II, spec);
    CHECK(ii.passed);
    // witness values: r=3 non-units (2), r=4 non-units (2,10)
    REQUIRE(ii.cases.size() >= 4);
    CHECK(ii.cases[0].actual == "(2)");
    CHECK(ii.cases[2].actual == "(2,10)");
    VerificationReport iii = verify_snf_theorem(Thm1Part::III, spec);
    CHECK(iii.passed);
    CHECK_THROWS_AS(verify_snf_theorem(Thm1Part::I, RingSpec{3, 4, 4}),
                    PreconditionError);
}

TEST_CASE("prime nullity bound across the grid") {
    for (int A = 1; A <= 5; ++A)
        for (int B = 1; B <= A; ++B)
            for (int C = 1; C <= B; ++C) {
                RingSpec spec{A, B, C};
                int e = spec.top_degree();
                for (int r = A - 1; 2 * r <= e - 1; ++r) {
                    auto f = smith_normal_form(up_map_matrix(spec, r));
                    for (int p : {2, 3, 5, 7, 11, 13}) {
                        int divisible = 0;
                        for (const auto& x : f.entries)
                            if (x % p == 0) ++divisible;
                        CHECK(divisible <= r - A + 2);
                    }
                }
            }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lefschetz/monomial_ring.hpp"

using namespace lefschetz;

namespace {

Monomial comp(const RingSpec& spec, const Monomial& m) {
    Monomial out(m.size());
    for (std::size_t i = 0; i < m.size(); ++i) out[i] = spec.caps[i] - 1 - m[i];
    return out;
}

// entrywise form of the transpose duality between U_r and U_{e-1-r}
bool complement_duality_holds(const RingSpec& spec) {
    int e = spec.top_degree();
    for (int r = 0; r < e; ++r) {
        ZMatrix u = up_map_matrix(spec, r);
        ZMatrix v = up_map_matrix(spec, e - 1 - r);
        auto cols = graded_basis(spec, r), rows = graded_basis(spec, r + 1);
        auto vcols = graded_basis(spec, e - 1 - r), vrows = graded_basis(spec, e - r);
        auto index = [](const std::vector<Monomial>& basis, const Monomial& m) {
            return static_cast<int>(std::find(basis.begin(), basis.end(), m) -
                                    basis.begin());
        };
        for (int i = 0; i < u.rows(); ++i)
            for (int j = 0; j < u.cols(); ++j) {
                int ci = index(vcols, comp(spec, rows[i]));
                int ri = index(vrows, comp(spec, cols[j]));
                if (u.at(i, j) != v.at(ri, ci)) return false;
            }
    }
    return true;
}

} // namespace

TEST_CASE("graded basis ordering and bounds") {
    RingSpec spec{4, 4, 4};
    auto b4 = graded_basis(spec, 4);
    REQUIRE(b4.size() == 12);
    CHECK(b4[0] == Monomial{3, 1, 0});  // x^3 y
    CHECK(b4[1] == Monomial{3, 0, 1});  // x^3 z
    CHECK(b4[2] == Monomial{2, 2, 0});  // x^2 y^2
    CHECK(b4[5] == Monomial{1, 3, 0});  // x y^3
    CHECK(b4[11] == Monomial{0, 1, 3}); // y z^3
    CHECK(std::is_sorted(b4.begin(), b4.end(), std::greater<>()));

    RingSpec small{2, 2, 2};
    CHECK(graded_basis(small, 1) ==
          std::vector<Monomial>{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    CHECK(graded_basis(small, 2) ==
          std::vector<Monomial>{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(graded_basis(small, 4).empty()); // out of range, not an error
    CHECK(graded_basis(small, -1).empty());
}

TEST_CASE("hilbert function") {
    CHECK(hilbert_function(RingSpec{2, 2, 2}) == std::vector<long long>{1, 3, 3, 1});
    CHECK(hilbert_function(RingSpec{4, 4, 4}) ==
          std::vector<long long>{1, 3, 6, 10, 12, 12, 10, 6, 3, 1});
    CHECK(hilbert_function(RingSpec{1, 1, 1}) == std::vector<long long>{1});
}

TEST_CASE("hilbert function is symmetric and unimodal") {
    for (int a = 1; a <= 4; ++a)
        for (int b = 1; b <= 4; ++b)
            for (int c = 1; c <= 4; ++c)
                for (int d = 1; d <= 3; ++d) {
                    RingSpec spec{a, b, c, d};
                    auto h = hilbert_function(spec);
                    REQUIRE(static_cast<int>(h.size()) == spec.top_degree() + 1);
                    for (std::size_t r = 0; r < h.size(); ++r)
                        CHECK(h[r] == h[h.size() - 1 - r]);
                    std::size_t mid = h.size() / 2;
                    for (std::size_t r = 0; r + 1 <= mid; ++r) CHECK(h[r] <= h[r + 1]);
                }
}

TEST_CASE("up map matrices") {
    CHECK(up_map_matrix(RingSpec{2, 2, 2}, 1) ==
          ZMatrix{{1, 1, 0}, {1, 0, 1}, {0, 1, 1}});
    CHECK(up_map_matrix(RingSpec{2, 1, 1}, 0) == ZMatrix{{1}});
    ZMatrix u4 = up_map_matrix(RingSpec{4, 4, 4}, 4);
    CHECK(u4.rows() == 12);
    CHECK(u4.cols() == 12);
    for (int i = 0; i < u4.rows(); ++i) {
        int row = 0, col = 0;
        for (int j = 0; j < u4.cols(); ++j) {
            row += static_cast<int>(u4.at(i, j).get_si());
            col += static_cast<int>(u4.at(j, i).get_si());
        }
        CHECK(row <= 3);
        CHECK(col <= 3);
    }
    CHECK_THROWS_AS(up_map_matrix(RingSpec{2, 2, 2}, 3), DimensionError);
}

TEST_CASE("complement duality across the grading") {
    for (int a = 1; a <= 5; ++a)
        for (int b = 1; b <= a; ++b)
            for (int c = 1; c <= b; ++c) CHECK(complement_duality_holds(RingSpec{a, b, c}));
    CHECK(complement_duality_holds(RingSpec{5, 3, 2}));
    CHECK(complement_duality_holds(RingSpec{2, 3, 5})); // unsorted caps too
}

TEST_CASE("invariant bases") {
    RingSpec s222{2, 2, 2};
    auto cyc1 = invariant_basis(s222, 1, {ActionKind::Cycle3, ActionSign::Plus});
    REQUIRE(cyc1.size() == 1);
    CHECK(cyc1[0].rep == Monomial{1, 0, 0});
    CHECK(cyc1[0].terms.size() == 3);

    auto cyc2 = invariant_basis(s222, 2, {ActionKind::Cycle3, ActionSign::Plus});
    REQUIRE(cyc2.size() == 1); // xy + xz + yz, x^2 etc. vanish
    CHECK(cyc2[0].rep == Monomial{1, 1, 0});

    RingSpec s233{2, 3, 3};
    auto minus = invariant_basis(s233, 2, {ActionKind::SwapYZ, ActionSign::Minus});
    REQUIRE(minus.size() == 2);
    CHECK(minus[0].rep == Monomial{1, 1, 0}); // xy - xz
    CHECK(minus[1].rep == Monomial{0, 2, 0}); // y^2 - z^2
    CHECK(minus[0].terms ==
          std::vector<std::pair<Monomial, int>>{{{1, 1, 0}, 1}, {{1, 0, 1}, -1}});

    CHECK_THROWS_AS(invariant_basis(s233, 1, {ActionKind::Cycle3, ActionSign::Plus}),
                    ConstraintError);
    CHECK_THROWS_AS(invariant_basis(s222, 1, {ActionKind::Cycle3, ActionSign::Minus}),
                    ConstraintError);
    CHECK_THROWS_AS(
        invariant_basis(RingSpec{3, 3, 2}, 1, {ActionKind::SwapYZ, ActionSign::Minus}),
        ConstraintError);
}

TEST_CASE("plus and minus dimensions account for fixed monomials") {
    for (int A : {2, 3, 4})
        for (int B : {2, 3, 4}) {
            RingSpec spec{A, B, B};
            for (int r = 0; r <= spec.top_degree(); ++r) {
                auto basis = graded_basis(spec, r);
                long long fixed = 0;
                for (const auto& m : basis)
                    if (m[1] == m[2]) ++fixed;
                auto plus = invariant_basis(spec, r, {ActionKind::SwapYZ, ActionSign::Plus});
                auto minus =
                    invariant_basis(spec, r, {ActionKind::SwapYZ, ActionSign::Minus});
                CHECK(static_cast<long long>(plus.size() + minus.size()) ==
                      static_cast<long long>(basis.size()));
                CHECK(static_cast<long long>(plus.size()) - fixed ==
                      static_cast<long long>(minus.size()));
            }
        }
}

TEST_CASE("restricted up maps") {
    CHECK(restricted_up_map(RingSpec{2, 2, 2}, 1, {ActionKind::Cycle3, ActionSign::Plus}) ==
          ZMatrix{{2}});

    // in the descending-representative bases the (2,3,3) minus matrix is
    // the column permutation of the papered [[1,1],[1,0]]
    CHECK(restricted_up_map(RingSpec{2, 3, 3}, 2, {ActionKind::SwapYZ, ActionSign::Minus}) ==
          ZMatrix{{1, 1}, {0, 1}});

    ZMatrix r444 = restricted_up_map(RingSpec{4, 4, 4}, 4,
                                     {ActionKind::Cycle3, ActionSign::Plus});
    REQUIRE(r444.rows() == 4);
    REQUIRE(r444.cols() == 4);
    int twos = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            CHECK(r444.at(i, j) >= 0);
            CHECK(r444.at(i, j) <= 2);
            if (r444.at(i, j) == 2) ++twos;
        }
    CHECK(twos == 1);
    // the double entry sits at column [2,1,1], row [2,2,1]
    auto dom = invariant_basis(RingSpec{4, 4, 4}, 4, {ActionKind::Cycle3, ActionSign::Plus});
    auto tgt = invariant_basis(RingSpec{4, 4, 4}, 5, {ActionKind::Cycle3, ActionSign::Plus});
    for (std::size_t j = 0; j < dom.size(); ++j)
        for (std::size_t i = 0; i < tgt.size(); ++i)
            if (r444.at(static_cast<int>(i), static_cast<int>(j)) == 2) {
                CHECK(dom[j].rep == Monomial{2, 1, 1});
                CHECK(tgt[i].rep == Monomial{2, 2, 1});
            }
}

TEST_CASE("cycle3 restricted dimensions are h/3 at the middle ranks") {
    for (int a = 1; a <= 3; ++a) {
        RingSpec spec{2 * a, 2 * a, 2 * a};
        int m = 3 * a - 2;
        auto h = hilbert_function(spec);
        auto dom = invariant_basis(spec, m, {ActionKind::Cycle3, ActionSign::Plus});
        auto tgt = invariant_basis(spec, m + 1, {ActionKind::Cycle3, ActionSign::Plus});
        CHECK(3 * static_cast<long long>(dom.size()) == h[static_cast<std::size_t>(m)]);
        CHECK(3 * static_cast<long long>(tgt.size()) ==
              h[static_cast<std::size_t>(m) + 1]);
    }
}

TEST_CASE("alternating basis and map") {
    RingSpec spec{4, 4, 4};
    auto b4 = alternating_basis(spec, 4);
    REQUIRE(b4.size() == 1);
    CHECK(b4[0].rep == Monomial{3, 1, 0});
    CHECK(b4[0].terms.size() == 6);
    CHECK(alternating_up_map(spec, 4) == ZMatrix{{1}});
}

#include <doctest.h>

#include "test_util.hpp"
#include "varsamp/geometry.hpp"
#include "varsamp/unipoly.hpp"

using namespace varsamp;
using vstest::brute_common_zeros;
using vstest::make_poly;
using vstest::random_multipoly;

TEST_SUITE("poly") {

TEST_CASE("eval examples") {
    Field f13(13);
    // x^2 + y^2 - 1 at (1, 0)
    MultiPoly circle = make_poly(f13, 2, {{1, {2, 0}}, {1, {0, 2}}, {12, {0, 0}}});
    CHECK(circle.eval({f13.one(), f13.zero()}) == f13.zero());

    MultiPoly c = MultiPoly::constant(f13, 2, f13.element(5));
    CHECK(c.eval({f13.element(9), f13.element(3)}) == f13.element(5));

    Field f7(7);
    MultiPoly xy3 = make_poly(f7, 2, {{1, {1, 1}}, {3, {0, 0}}});
    CHECK(xy3.eval({f7.element(2), f7.element(3)}) == f7.element(2)); // 6+3 = 9 = 2 mod 7

    CHECK_THROWS_AS(circle.eval({f13.one()}), DimensionMismatch);
}

TEST_CASE("total_degree examples and conventions") {
    Field f7(7);
    CHECK(make_poly(f7, 2, {{1, {2, 1}}, {1, {0, 1}}}).total_degree() == 3); // x^2 y + y
    CHECK(MultiPoly::zero(f7, 2).total_degree() == 0);
    CHECK(MultiPoly::constant(f7, 2, f7.element(5)).total_degree() == 0);
}

TEST_CASE("arith examples") {
    Field f7(7);
    MultiPoly xp1 = make_poly(f7, 1, {{1, {1}}, {1, {0}}});
    MultiPoly xm1 = make_poly(f7, 1, {{1, {1}}, {6, {0}}});
    MultiPoly prod = xp1 * xm1;
    CHECK(prod == make_poly(f7, 1, {{1, {2}}, {6, {0}}})); // x^2 - 1
    CHECK(prod.to_unipoly(0) == UniPoly(f7, {6, 0, 1}));

    MultiPoly f = make_poly(f7, 2, {{3, {1, 2}}, {2, {0, 1}}});
    CHECK((f + f.scaled(f7.element(6))).is_zero()); // f + (-1)f = 0

    UniPoly x3(f7, {0, 0, 0, 1});
    UniPoly x2(f7, {0, 0, 1});
    auto [q, r] = x3.divmod(x2);
    CHECK(q == UniPoly(f7, {0, 1}));
    CHECK(r.is_zero());
    CHECK_THROWS_AS(x3.divmod(UniPoly::zero(f7)), DivisionByZero);
}

TEST_CASE("unipoly divmod property: f = q*g + r with deg r < deg g") {
    Field f13(13);
    RandomSource rng(77);
    for (int i = 0; i < 500; ++i) {
        UniPoly f = vstest::random_unipoly(f13, 9, rng, false);
        UniPoly g = vstest::random_unipoly(f13, 5, rng, true);
        auto [q, r] = f.divmod(g);
        REQUIRE(q * g + r == f);
        if (!r.is_zero()) REQUIRE(r.degree() < g.degree());
    }
}

TEST_CASE("ring law (f+g)*h = f*h + g*h checked by exhaustive evaluation over F_13^n") {
    Field f13(13);
    RandomSource rng(13013);
    for (int rep = 0; rep < 20; ++rep) {
        std::size_t nv = 1 + rng.below(3);
        MultiPoly f = random_multipoly(f13, nv, 4, 5, rng);
        MultiPoly g = random_multipoly(f13, nv, 4, 5, rng);
        MultiPoly h = random_multipoly(f13, nv, 4, 5, rng);
        MultiPoly lhs = (f + g) * h;
        MultiPoly rhs = f * h + g * h;
        REQUIRE(lhs == rhs);
        // Equality of normal forms is backed by agreement of values everywhere.
        std::vector<std::uint64_t> v(nv, 0);
        for (;;) {
            std::vector<FieldElement> pt;
            for (std::uint64_t c : v) pt.push_back(f13.element(c));
            REQUIRE(lhs.eval(pt) == (f.eval(pt) + g.eval(pt)) * h.eval(pt));
            std::size_t i = nv;
            bool done = true;
            while (i-- > 0) {
                if (++v[i] < 13) {
                    done = false;
                    break;
                }
                v[i] = 0;
            }
            if (done) break;
        }
    }
}

TEST_CASE("substitute_affine examples") {
    Field f7(7);
    // f = x + y on the line (1,2) + t*(1,0): g(t) = t + 3
    MultiPoly f = make_poly(f7, 2, {{1, {1, 0}}, {1, {0, 1}}});
    AffineSubspace line({f7.one(), f7.element(2)}, {{f7.one(), f7.zero()}});
    CHECK(substitute_affine(f, line) == make_poly(f7, 1, {{1, {1}}, {3, {0}}}));

    MultiPoly c = MultiPoly::constant(f7, 2, f7.element(4));
    CHECK(substitute_affine(c, line) == MultiPoly::constant(f7, 1, f7.element(4)));

    Field f13(13);
    MultiPoly circle = make_poly(f13, 2, {{1, {2, 0}}, {1, {0, 2}}, {12, {0, 0}}});
    AffineSubspace xaxis({f13.zero(), f13.zero()}, {{f13.one(), f13.zero()}});
    CHECK(substitute_affine(circle, xaxis) == make_poly(f13, 1, {{1, {2}}, {12, {0}}}));
}

TEST_CASE("substitute_affine commutes with evaluation (1e4 random cases)") {
    Field f13(13);
    RandomSource rng(5150);
    for (int i = 0; i < 10000; ++i) {
        std::size_t n = 2 + rng.below(2); // 2..3 ambient vars
        std::size_t k = 1 + rng.below(n); // 1..n
        MultiPoly f = random_multipoly(f13, n, 4, 6, rng);
        AffineSubspace a = sample_affine_subspace(f13, n, k, rng);
        MultiPoly g = substitute_affine(f, a);
        REQUIRE(g.total_degree() <= f.total_degree());
        std::vector<FieldElement> t;
        for (std::size_t j = 0; j < k; ++j) t.push_back(rand_element(f13, rng));
        REQUIRE(g.eval(t) == f.eval(a.point_at(t)));
    }
}

TEST_CASE("mixed fields and shape errors") {
    Field f7(7), f11(11);
    MultiPoly a = make_poly(f7, 2, {{1, {1, 0}}});
    MultiPoly b = make_poly(f11, 2, {{1, {1, 0}}});
    CHECK_THROWS_AS((void)(a + b), MixedFields);
    CHECK_THROWS_AS((void)(a * make_poly(f7, 3, {{1, {1, 0, 0}}})), DimensionMismatch);
}

} // TEST_SUITE

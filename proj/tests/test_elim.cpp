#include <doctest.h>

#include <algorithm>

#include "test_util.hpp"

using namespace varsamp;
using vstest::brute_common_zeros;
using vstest::key_of;
using vstest::make_poly;
using vstest::random_multipoly;

namespace {

std::vector<std::vector<std::uint64_t>> keys_of(
    const std::vector<std::vector<FieldElement>>& pts) {
    std::vector<std::vector<std::uint64_t>> out;
    for (const auto& p : pts) out.push_back(key_of(p));
    return out;
}

// Mix of generic, shared-factor and multiple-of systems so every
// classification arm gets exercised.
PolySystem random_system(const Field& f, RandomSource& rng) {
    MultiPoly f1 = random_multipoly(f, 2, 3, 5, rng, true);
    std::uint64_t mode = rng.below(10);
    MultiPoly f2 = MultiPoly::zero(f, 2);
    if (mode < 7) {
        f2 = random_multipoly(f, 2, 3, 5, rng, true);
    } else if (mode < 8) {
        // f2 a multiple of f1 (degrees permitting): positive-dimensional
        MultiPoly low = random_multipoly(f, 2, 1, 2, rng, true);
        f2 = f1.total_degree() <= 2 ? f1 * low : f1;
    } else {
        MultiPoly g = random_multipoly(f, 2, 1, 3, rng, true);
        MultiPoly l1 = random_multipoly(f, 2, 1, 3, rng, true);
        MultiPoly l2 = random_multipoly(f, 2, 1, 3, rng, true);
        if (g.total_degree() + std::max(l1.total_degree(), l2.total_degree()) <= 3) {
            f1 = g * l1;
            f2 = g * l2;
        } else {
            f2 = l2;
        }
    }
    return PolySystem(f, 2, {f1, f2});
}

} // namespace

TEST_SUITE("elim") {

TEST_CASE("PolySystem validation") {
    Field f7(7);
    MultiPoly x = make_poly(f7, 1, {{1, {1}}});
    CHECK_THROWS_AS(PolySystem(f7, 1, {}), BadDimensions);
    CHECK_THROWS_AS(PolySystem(f7, 1, {x, x}), BadDimensions); // k > n
    MultiPoly y = make_poly(f7, 5, {{1, {0, 1, 0, 0, 0}}});
    CHECK_THROWS_AS(PolySystem(f7, 5, {y, y, y, y, y}), TooManyPolys);
    PolySystem ok(f7, 1, {x});
    CHECK(ok.degree_bound() == 1);
}

TEST_CASE("lex_groebner examples") {
    Field f7(7);
    // {t^2 - 1, t - 1} -> {t - 1} (univariate gcd)
    PolySystem s1(f7, 1,
                  {make_poly(f7, 1, {{1, {2}}, {6, {0}}}), make_poly(f7, 1, {{1, {1}}, {6, {0}}})});
    auto g1 = lex_groebner(s1);
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == make_poly(f7, 1, {{1, {1}}, {6, {0}}}));

    // {t1 + t2, t1 - t2} -> {t1, t2}: 2 t2 = 0 forces t2 = 0
    PolySystem s2(f7, 2,
                  {make_poly(f7, 2, {{1, {1, 0}}, {1, {0, 1}}}),
                   make_poly(f7, 2, {{1, {1, 0}}, {6, {0, 1}}})});
    auto g2 = lex_groebner(s2);
    REQUIRE(g2.size() == 2);
    CHECK(g2[0] == make_poly(f7, 2, {{1, {0, 1}}}));
    CHECK(g2[1] == make_poly(f7, 2, {{1, {1, 0}}}));

    // unit ideal
    PolySystem s3(f7, 1, {MultiPoly::constant(f7, 1, f7.element(3))});
    auto g3 = lex_groebner(s3);
    REQUIRE(g3.size() == 1);
    CHECK(g3[0] == MultiPoly::constant(f7, 1, f7.one()));
}

TEST_CASE("buchberger self-check: every S-polynomial reduces to zero") {
    Field f11(11);
    RandomSource rng(808);
    for (int i = 0; i < 30; ++i) {
        PolySystem sys = random_system(f11, rng);
        auto basis = lex_groebner(sys);
        if (basis.empty()) continue;
        // basis members generate and reduce the original polynomials
        for (const MultiPoly& f : sys.polys()) {
            MultiPoly r = f;
            bool reduced = true;
            while (reduced && !r.is_zero()) {
                reduced = false;
                for (const MultiPoly& g : basis) {
                    if (!g.leading_term().mono.divides(r.leading_term().mono)) continue;
                    Term q{r.leading_term().mono.divided_by(g.leading_term().mono),
                           r.leading_term().coeff * inv(g.leading_term().coeff)};
                    r = r - g.times_term(q);
                    reduced = true;
                    break;
                }
            }
            REQUIRE(r.is_zero());
        }
    }
}

TEST_CASE("classify examples") {
    Field f7(7);
    // {t1*t2 - 1}: a curve in the plane
    PolySystem curve(f7, 2, {make_poly(f7, 2, {{1, {1, 1}}, {6, {0, 0}}})});
    CHECK(classify_intersection(curve).is_positive_dim());

    // {t^2 + 1} over F_7: no roots (oracle: brute force)
    PolySystem empty(f7, 1, {make_poly(f7, 1, {{1, {2}}, {1, {0}}})});
    CHECK(brute_common_zeros(empty.polys(), f7, 1).empty());
    CHECK(classify_intersection(empty).is_empty());

    // {t1^2 - 1, t2 - t1}: points (1,1), (6,6)
    PolySystem two(f7, 2,
                   {make_poly(f7, 2, {{1, {2, 0}}, {6, {0, 0}}}),
                    make_poly(f7, 2, {{1, {0, 1}}, {6, {1, 0}}})});
    auto cls = classify_intersection(two);
    REQUIRE(cls.is_zero_dim());
    CHECK(keys_of(cls.points) ==
          std::vector<std::vector<std::uint64_t>>{{1, 1}, {6, 6}});
}

TEST_CASE("enumerate_solutions examples") {
    Field f13(13);
    RandomSource rng(3);
    // circle cap line t2 = 0
    PolySystem s1(f13, 2,
                  {make_poly(f13, 2, {{1, {2, 0}}, {1, {0, 2}}, {12, {0, 0}}}),
                   make_poly(f13, 2, {{1, {0, 1}}})});
    CHECK(keys_of(enumerate_solutions(s1, rng)) ==
          std::vector<std::vector<std::uint64_t>>{{1, 0}, {12, 0}});

    // {t - c}
    PolySystem s2(f13, 1, {make_poly(f13, 1, {{1, {1}}, {13 - 9, {0}}})});
    CHECK(keys_of(enumerate_solutions(s2, rng)) ==
          std::vector<std::vector<std::uint64_t>>{{9}});

    // circle cap line t1 + t2 = 1 (oracle: brute force over F_13^2)
    PolySystem s3(f13, 2,
                  {make_poly(f13, 2, {{1, {2, 0}}, {1, {0, 2}}, {12, {0, 0}}}),
                   make_poly(f13, 2, {{1, {1, 0}}, {1, {0, 1}}, {12, {0, 0}}})});
    auto expect = brute_common_zeros(s3.polys(), f13, 2);
    CHECK(keys_of(enumerate_solutions(s3, rng)) == expect);
    CHECK(expect == std::vector<std::vector<std::uint64_t>>{{0, 1}, {1, 0}});

    // not zero-dimensional
    PolySystem pd(f13, 2, {make_poly(f13, 2, {{1, {1, 1}}, {12, {0, 0}}})});
    CHECK_THROWS_AS(enumerate_solutions(pd, rng), NotZeroDimensional);
}

TEST_CASE("oracle equivalence on 200 random systems (k=2, d<=3, q in {11,13})") {
    for (std::uint64_t q : {11ull, 13ull}) {
        Field f(q);
        RandomSource rng(0xe1e + q);
        for (int i = 0; i < 100; ++i) {
            PolySystem sys = random_system(f, rng);
            auto brute = brute_common_zeros(sys.polys(), f, 2);
            IntersectionClass cls = classify_intersection(sys, rng);
            switch (cls.kind) {
                case IntersectionClass::Kind::Empty:
                    REQUIRE(brute.empty());
                    break;
                case IntersectionClass::Kind::ZeroDim: {
                    REQUIRE(keys_of(cls.points) == brute);
                    std::uint64_t bezout = 1;
                    for (std::size_t j = 0; j < sys.num_polys(); ++j)
                        bezout *= std::max<std::uint32_t>(sys.degree_bound(), 1);
                    REQUIRE(cls.points.size() <= bezout);
                    for (const auto& pt : cls.points)
                        for (const MultiPoly& g : sys.polys()) REQUIRE(g.eval(pt).is_zero());
                    break;
                }
                case IntersectionClass::Kind::PositiveDim: {
                    // structural check: some variable owns no pure-power leading monomial
                    auto basis = lex_groebner(sys);
                    REQUIRE(!basis_is_zero_dimensional(basis, 2));
                    break;
                }
            }
        }
    }
}

TEST_CASE("elimination budget aborts and is caller-visible") {
    Field f13(13);
    RandomSource rng(5);
    PolySystem sys(f13, 2,
                   {make_poly(f13, 2, {{1, {2, 1}}, {5, {1, 1}}, {1, {0, 1}}, {3, {0, 0}}}),
                    make_poly(f13, 2, {{1, {1, 2}}, {7, {1, 1}}, {2, {1, 0}}, {4, {0, 0}}})});
    CHECK_THROWS_AS(lex_groebner(sys, 3), EliminationBudgetExceeded);
    CHECK_NOTHROW(lex_groebner(sys));
}

TEST_CASE("restrict_to_subspace ties the pipeline together") {
    Field f13(13);
    MultiPoly circle = make_poly(f13, 2, {{1, {2, 0}}, {1, {0, 2}}, {12, {0, 0}}});
    PolySystem sys(f13, 2, {circle});
    AffineSubspace xaxis({f13.zero(), f13.zero()}, {{f13.one(), f13.zero()}});
    PolySystem restricted = restrict_to_subspace(sys, xaxis);
    CHECK(restricted.num_vars() == 1);
    auto cls = classify_intersection(restricted);
    REQUIRE(cls.is_zero_dim());
    CHECK(keys_of(cls.points) == std::vector<std::vector<std::uint64_t>>{{1}, {12}});
}

} // TEST_SUITE

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "test_util.hpp"
#include "varsamp/geometry.hpp"

using namespace varsamp;

namespace {

// Independent oracle identity for a subspace: its full point set.
std::set<std::vector<std::uint64_t>> point_set(const AffineSubspace& a, const Field& f) {
    std::set<std::vector<std::uint64_t>> pts;
    std::size_t k = a.dim();
    std::vector<std::uint64_t> t(k, 0);
    for (;;) {
        std::vector<FieldElement> tv;
        for (std::uint64_t c : t) tv.push_back(f.element(c));
        pts.insert(vstest::key_of(a.point_at(tv)));
        std::size_t i = k;
        bool done = true;
        while (i-- > 0) {
            if (++t[i] < f.modulus()) {
                done = false;
                break;
            }
            t[i] = 0;
        }
        if (done) break;
    }
    return pts;
}

} // namespace

TEST_SUITE("geometry") {

TEST_CASE("construction validates rank and dimensions") {
    Field f7(7);
    CHECK_THROWS_AS(AffineSubspace({f7.zero(), f7.zero()},
                                   {{f7.one(), f7.zero()}, {f7.element(2), f7.zero()}}),
                    BadDimensions); // dependent columns
    CHECK_THROWS_AS(AffineSubspace({f7.zero()}, {{f7.one()}, {f7.one()}}), BadDimensions); // k > n
    AffineSubspace ok({f7.zero(), f7.zero()}, {{f7.one(), f7.element(5)}});
    CHECK(ok.dim() == 1);
    CHECK(ok.ambient_dim() == 2);
}

TEST_CASE("contains examples") {
    Field f7(7);
    AffineSubspace line({f7.one(), f7.element(2)}, {{f7.one(), f7.one()}});
    CHECK(contains(line, line.base()));
    CHECK(contains(line, {f7.element(4), f7.element(5)})); // (1,2) + 3*(1,1)
    AffineSubspace xaxis({f7.zero(), f7.zero()}, {{f7.one(), f7.zero()}});
    CHECK(!contains(xaxis, {f7.element(3), f7.one()}));
    CHECK_THROWS_AS(contains(xaxis, {f7.one()}), DimensionMismatch);
}

TEST_CASE("contains(a, point_at(t)) always holds") {
    Field f11(11);
    RandomSource rng(40);
    for (int i = 0; i < 300; ++i) {
        std::size_t n = 2 + rng.below(3);
        std::size_t k = 1 + rng.below(n);
        AffineSubspace a = sample_affine_subspace(f11, n, k, rng);
        std::vector<FieldElement> t;
        for (std::size_t j = 0; j < k; ++j) t.push_back(rand_element(f11, rng));
        REQUIRE(contains(a, a.point_at(t)));
    }
}

TEST_CASE("count examples") {
    CHECK(count_linear_subspaces(2, 1, 3) == 4);
    CHECK(count_affine_subspaces(2, 1, 3) == 12);
    CHECK(count_linear_subspaces(4, 4, 3) == 1);
    CHECK(count_affine_subspaces(4, 4, 3) == 1);
    CHECK(count_affine_subspaces(3, 1, 5) == 775); // 31 * 25
    CHECK(count_linear_subspaces(4, 2, 3) == 130);
    CHECK(count_linear_subspaces(10, 3, 101) > 0);
}

TEST_CASE("enumeration matches closed-form counts and is duplicate-free") {
    for (std::uint64_t q : {3ull, 5ull}) {
        Field f(q);
        for (std::size_t n = 1; n <= 3; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                auto subs = enumerate_affine_subspaces(f, n, k, 1ull << 40);
                CHECK(BigInt(subs.size()) == count_affine_subspaces(n, k, q));
                std::set<std::vector<std::uint64_t>> keys;
                for (const auto& a : subs) keys.insert(a.canonical_key());
                CHECK(keys.size() == subs.size());
            }
        }
    }
    Field f3(3);
    CHECK(enumerate_affine_subspaces(f3, 2, 1).size() == 12);
    CHECK(enumerate_affine_subspaces(f3, 2, 2).size() == 1);
    CHECK_THROWS_AS(enumerate_affine_subspaces(Field(101), 3, 2), TooLarge);
}

TEST_CASE("canonical_key identifies equal point sets") {
    Field f5(5);
    RandomSource rng(99);
    for (int i = 0; i < 200; ++i) {
        AffineSubspace a = sample_affine_subspace(f5, 3, 1 + rng.below(2), rng);
        AffineSubspace b = sample_affine_subspace(f5, 3, a.dim(), rng);
        bool same_key = a.canonical_key() == b.canonical_key();
        bool same_set = point_set(a, f5) == point_set(b, f5);
        REQUIRE(same_key == same_set);
    }
}

TEST_CASE("uniformity oracle at (n=2, k=1, q=3): every (v0, B) tuple grouped by line") {
    // The sampler draws (v0, B) uniformly among rank-1 tuples; uniformity over
    // lines follows iff every line is represented by the same number of
    // tuples. Enumerate all 8 nonzero direction vectors x 9 base points.
    Field f3(3);
    std::map<std::set<std::vector<std::uint64_t>>, int> groups;
    for (std::uint64_t b0 = 0; b0 < 3; ++b0)
        for (std::uint64_t b1 = 0; b1 < 3; ++b1) {
            if (b0 == 0 && b1 == 0) continue;
            for (std::uint64_t v0 = 0; v0 < 3; ++v0)
                for (std::uint64_t v1 = 0; v1 < 3; ++v1) {
                    AffineSubspace line({f3.element(v0), f3.element(v1)},
                                        {{f3.element(b0), f3.element(b1)}});
                    ++groups[point_set(line, f3)];
                }
        }
    CHECK(groups.size() == 12);
    for (const auto& [set, count] : groups) CHECK(count == 72 / 12);
}

TEST_CASE("sampled subspaces: rank-deficient draws are redrawn, full space at k=n") {
    Field f3(3);
    RandomSource rng(1234);
    for (int i = 0; i < 500; ++i) {
        AffineSubspace a = sample_affine_subspace(f3, 2, 2, rng);
        CHECK(a.dim() == 2); // the constructor would reject dependent draws
        CHECK(point_set(a, f3).size() == 9);
    }
    CHECK_THROWS_AS(sample_affine_subspace(f3, 2, 3, rng), BadDimensions);
    CHECK_THROWS_AS(sample_affine_subspace(f3, 2, 0, rng), BadDimensions);
}

TEST_CASE("chi-square uniformity at (n=3, k=1, q=5) over 1e6 draws") {
    Field f5(5);
    RandomSource rng(0xfeed);
    std::map<std::vector<std::uint64_t>, std::uint64_t> counts;
    const std::uint64_t draws = 1'000'000;
    for (std::uint64_t i = 0; i < draws; ++i)
        ++counts[sample_affine_subspace(f5, 3, 1, rng).canonical_key()];
    const double cells = 775.0;
    CHECK(counts.size() == 775);
    double expected = static_cast<double>(draws) / cells;
    double chi2 = 0.0;
    for (const auto& [k, c] : counts) {
        double d = static_cast<double>(c) - expected;
        chi2 += d * d / expected;
    }
    // df = 774; mean df, sd sqrt(2 df); allow 6 sigma.
    double df = cells - 1.0;
    CHECK(chi2 < df + 6.0 * std::sqrt(2.0 * df));
    CHECK(chi2 > df - 6.0 * std::sqrt(2.0 * df));
}

TEST_CASE("Prop-5-style normalized error bounds at small q") {
    for (std::uint64_t q : {3ull, 5ull, 7ull, 11ull}) {
        for (std::size_t n = 1; n <= 4; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                if (static_cast<double>(q) < std::sqrt(2.0 * static_cast<double>(k))) continue;
                BigInt n1 = count_linear_subspaces(n, k, q);
                BigInt n2 = count_affine_subspaces(n, k, q);
                BigInt qq(q);
                BigInt c1 = boost::multiprecision::pow(qq, static_cast<unsigned>(k * (n - k)));
                BigInt c2 = boost::multiprecision::pow(qq, static_cast<unsigned>((k + 1) * (n - k)));
                // |N/q^e - 1| <= 2k/q^2, exactly: |N - c| * q^2 <= 2k * c
                CHECK(boost::multiprecision::abs(n1 - c1) * qq * qq <= 2 * BigInt(k) * c1);
                CHECK(boost::multiprecision::abs(n2 - c2) * qq * qq <= 2 * BigInt(k) * c2);
            }
        }
    }
}

} // TEST_SUITE

#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "varsamp/elim.hpp"
#include "varsamp/poly.hpp"
#include "varsamp/rng.hpp"

namespace varsamp {

using BigRational = boost::multiprecision::cpp_rational;

/// Points as raw residue tuples, the key type for all distribution work.
using PointKey = std::vector<std::uint64_t>;

PointKey point_key(const std::vector<FieldElement>& point);

/// Finite probability mass function over points, exact rational masses
/// summing to one.
class EmpiricalDistribution {
public:
    const std::map<PointKey, BigRational>& mass() const noexcept { return mass_; }
    BigRational mass_at(const PointKey& p) const;

    static EmpiricalDistribution from_mass(std::map<PointKey, BigRational> mass);

private:
    std::map<PointKey, BigRational> mass_;
};

/// Normalized counts of a nonempty sample list.
EmpiricalDistribution empirical_distribution(const std::vector<PointKey>& samples);

/// Uniform distribution on a nonempty support.
EmpiricalDistribution uniform_distribution(const std::vector<PointKey>& support);

/// Half the l1 distance, exact.
BigRational statistical_distance(const EmpiricalDistribution& a, const EmpiricalDistribution& b);

/// Pointwise (1-eps) * a + eps * e.
EmpiricalDistribution mix(const EmpiricalDistribution& a, const EmpiricalDistribution& e,
                          const BigRational& eps);

/// Exactly { x in F_q^n : f_i(x) = 0 for all i }, by a full scan of F_q^n.
/// Guarded by q^n <= cap.
std::vector<std::vector<FieldElement>> enumerate_variety(const PolySystem& sys,
                                                         std::uint64_t cap = (1ull << 27));

/// |N - s q^r| / q^(r - 1/2): the normalized point-count deviation whose
/// boundedness across growing q is the testable content of the Lang-Weil
/// regime. s is caller-supplied (component counting is out of scope).
double lang_weil_deviation(std::uint64_t N, std::uint64_t s, std::uint32_t r, std::uint64_t q);

/// Monte Carlo fraction of uniformly drawn k-subspaces whose restriction of
/// the system is zero-dimensional with rational points. Exact rational
/// successes/trials.
BigRational estimate_proper_fraction(const PolySystem& sys, std::uint64_t trials,
                                     RandomSource& rng,
                                     std::uint64_t budget = DEFAULT_ELIMINATION_BUDGET);

/// Exhaustive variant of the above over every affine k-subspace (tiny q only).
BigRational exact_proper_fraction(const PolySystem& sys, std::uint64_t cap = (1ull << 27));

/// Per-variety-point count of properly intersecting k-subspaces through it,
/// in the enumerable regime.
struct DegreeAudit {
    std::uint64_t num_points = 0; // 0 means the variety is empty
    std::uint64_t min_degree = 0;
    std::uint64_t max_degree = 0;
    double ratio_lo = 0.0; // min_degree / q^(k(n-k))
    double ratio_hi = 0.0; // max_degree / q^(k(n-k))
    /// max |count/q^(k(n-k)) - 1|; the measured analogue of the C/q envelope.
    double relative_spread = 0.0;
};

DegreeAudit audit_left_degrees(const PolySystem& sys, std::uint64_t cap = (1ull << 27));

/// True iff the brute-force zero count of f is at most total_degree(f) *
/// q^(n-1).
bool schwartz_zippel_check(const MultiPoly& f, std::uint64_t cap = (1ull << 27));

/// 99%-style confidence slack for comparing an empirical distribution of
/// `samples` draws over `support_size` atoms against its true law:
/// 0.5*sqrt(S/N) bounds the expected total-variation gap, plus a McDiarmid
/// deviation term sqrt(ln(1/(1-confidence)) / (2N)).
double sampling_slack(std::uint64_t support_size, std::uint64_t samples,
                      double confidence = 0.99);

/// Wilson score interval for a binomial proportion.
struct WilsonInterval {
    double low = 0.0;
    double high = 1.0;
    double half_width() const noexcept { return (high - low) / 2.0; }
};

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z = 2.5758);

} // namespace varsamp

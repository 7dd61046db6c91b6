#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <utility>
#include <vector>

#include "varsamp/elim.hpp"
#include "varsamp/geometry.hpp"
#include "varsamp/rng.hpp"

namespace varsamp {

/// Observability record for one sampling run.
struct SampleReport {
    std::int64_t iterations_used = 0;
    bool fell_back = false;
    std::int64_t rsamp_failures = 0;
};

/// Oracle bundle for the almost-regular bipartite vertex sampler.
///   rsamp    - uniform right vertex, or nullopt on failure
///   rnei     - nonempty neighbor list of a right vertex, size <= d_max
///   fallback - emergency left vertex once the retry budget is gone
///   d_max    - upper bound on right degrees
///   p_bound  - upper bound on the rsamp failure probability, in [0, 1)
///   delta    - left-degree concentration parameter, in (0, 1/2)
template <class Left, class Right>
struct BipartiteOracles {
    std::function<std::optional<Right>(RandomSource&)> rsamp;
    std::function<std::vector<Left>(const Right&)> rnei;
    std::function<Left(RandomSource&)> fallback;
    std::uint64_t d_max = 1;
    double p_bound = 0.0;
    double delta = 0.25;
};

/// Retry budget ceil(d/(1-p) * ln((1-delta)/delta)), clamped to >= 1.
std::int64_t retry_budget(std::uint64_t d_max, double p_bound, double delta);

/// One almost-uniform left vertex: up to retry_budget() rounds of
/// (rsamp, rnei, accept with probability |V|/d_max, emit uniform element),
/// then the fallback. The output law is 3*delta/(1-delta)-close to uniform
/// on the left vertex set.
template <class Left, class Right>
std::pair<Left, SampleReport> bipartite_sample(const BipartiteOracles<Left, Right>& o,
                                               RandomSource& rng) {
    if (!(o.delta > 0.0 && o.delta < 0.5)) throw ConfigRejected("delta must lie in (0, 1/2)");
    if (!(o.p_bound >= 0.0 && o.p_bound < 1.0)) throw ConfigRejected("p_bound must lie in [0, 1)");
    if (o.d_max < 1) throw ConfigRejected("d_max must be at least 1");

    SampleReport report;
    const std::int64_t t0 = retry_budget(o.d_max, o.p_bound, o.delta);
    for (std::int64_t t = 0; t < t0; ++t) {
        ++report.iterations_used;
        std::optional<Right> r = o.rsamp(rng);
        if (!r) {
            ++report.rsamp_failures;
            continue;
        }
        std::vector<Left> v = o.rnei(*r);
        if (v.empty() || v.size() > o.d_max)
            throw Error("rnei violated its degree contract");
        // Accept with probability |V|/d_max and pick the element in one exact
        // draw: a uniform index below d_max lands in V with just that chance.
        std::uint64_t idx = rng.below(o.d_max);
        if (idx < v.size()) return {std::move(v[idx]), report};
    }
    report.fell_back = true;
    return {o.fallback(rng), report};
}

/// Tuning for the end-to-end variety sampler.
struct SamplerParams {
    /// Accuracy parameter epsilon in (0,1); the induced concentration
    /// parameter is delta = q^(epsilon-1), which must stay below 1/2.
    double epsilon = 0.25;
    /// Extra rsamp attempts the fallback path may spend before giving up.
    std::uint64_t max_wall_budget = 100'000;
    /// S-pair budget per intersection solve; overruns count as rsamp failures.
    std::uint64_t elimination_budget = DEFAULT_ELIMINATION_BUDGET;
    /// Optional sharper failure-probability estimate (e.g. from
    /// verify::estimate_proper_fraction) to shrink the retry budget; the
    /// default is the analytic 1 - d^-k / 2.
    std::optional<double> p_bound_override;
};

/// A right vertex of the incidence graph: a subspace that properly intersects
/// the variety, together with the intersection points in ambient coordinates.
struct ProperSlice {
    AffineSubspace subspace;
    std::vector<std::vector<FieldElement>> points;
};

using VarietyOracles = BipartiteOracles<std::vector<FieldElement>, ProperSlice>;

/// Oracle wiring for a concrete system: rsamp draws a uniform k-subspace and
/// keeps it only when the restricted system is zero-dimensional with rational
/// points; rnei returns the intersection; d_max = d^k; delta = q^(epsilon-1).
/// The fallback keeps retrying rsamp up to max_wall_budget attempts and then
/// raises VarietyLikelyEmpty (no success ever seen) or BudgetExhausted.
VarietyOracles make_variety_oracles(const PolySystem& sys, const SamplerParams& params);

/// One almost-uniform point of the variety; every returned point is
/// re-checked against all defining polynomials before it leaves. Across runs
/// the output law is 6/q^(1-epsilon)-close to uniform on the variety for
/// large enough q.
std::pair<std::vector<FieldElement>, SampleReport> sample_variety_point(
    const PolySystem& sys, const SamplerParams& params, RandomSource& rng);

/// Reusable wrapper around make_variety_oracles for long sampling runs.
class VarietySampler {
public:
    VarietySampler(PolySystem sys, SamplerParams params);

    std::pair<std::vector<FieldElement>, SampleReport> sample(RandomSource& rng);

    const VarietyOracles& oracles() const noexcept { return oracles_; }
    std::int64_t budget() const noexcept { return t0_; }

private:
    PolySystem sys_;
    VarietyOracles oracles_;
    std::int64_t t0_;
};

} // namespace varsamp

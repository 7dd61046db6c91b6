#include "varsamp/sampler.hpp"

namespace varsamp {

std::int64_t retry_budget(std::uint64_t d_max, double p_bound, double delta) {
    double raw = (static_cast<double>(d_max) / (1.0 - p_bound)) * std::log((1.0 - delta) / delta);
    std::int64_t t0 = static_cast<std::int64_t>(std::ceil(raw));
    return t0 < 1 ? 1 : t0;
}

namespace {

struct OracleState {
    std::uint64_t rsamp_successes = 0;
};

std::uint64_t pow_u64_checked(std::uint64_t base, std::size_t e) {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < e; ++i) {
        r *= base;
        if (r > ~0ull) throw ConfigRejected("degree bound d^k overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

} // namespace

VarietyOracles make_variety_oracles(const PolySystem& sys, const SamplerParams& params) {
    const std::uint64_t q = sys.field().modulus();
    const std::size_t n = sys.num_vars();
    const std::size_t k = sys.num_polys();
    const std::uint64_t d = std::max<std::uint32_t>(sys.degree_bound(), 1);

    double delta = std::pow(static_cast<double>(q), params.epsilon - 1.0);
    if (!(delta > 0.0 && delta < 0.5))
        throw ConfigRejected("q^(epsilon-1) = " + std::to_string(delta) +
                             " is not below 1/2; pick a smaller epsilon or a larger field");

    VarietyOracles o;
    o.d_max = pow_u64_checked(d, k);
    o.delta = delta;
    o.p_bound = params.p_bound_override
                    ? *params.p_bound_override
                    : 1.0 - 0.5 / static_cast<double>(o.d_max);
    if (!(o.p_bound >= 0.0 && o.p_bound < 1.0))
        throw ConfigRejected("p_bound must lie in [0, 1)");

    auto state = std::make_shared<OracleState>();
    const std::uint64_t elim_budget = params.elimination_budget;

    o.rsamp = [sys, n, k, state, elim_budget](RandomSource& rng) -> std::optional<ProperSlice> {
        AffineSubspace a = sample_affine_subspace(sys.field(), n, k, rng);
        IntersectionClass cls;
        try {
            cls = classify_intersection(restrict_to_subspace(sys, a), rng, elim_budget);
        } catch (const EliminationBudgetExceeded&) {
            return std::nullopt; // time-out counts as an rsamp failure
        }
        if (!cls.is_zero_dim()) return std::nullopt;
        ++state->rsamp_successes;
        std::vector<std::vector<FieldElement>> ambient;
        ambient.reserve(cls.points.size());
        for (const auto& t : cls.points) ambient.push_back(a.point_at(t));
        return ProperSlice{std::move(a), std::move(ambient)};
    };

    o.rnei = [](const ProperSlice& slice) { return slice.points; };

    auto rsamp = o.rsamp;
    const std::uint64_t wall = params.max_wall_budget;
    o.fallback = [rsamp, state, wall](RandomSource& rng) -> std::vector<FieldElement> {
        for (std::uint64_t attempt = 0; attempt < wall; ++attempt) {
            std::optional<ProperSlice> slice = rsamp(rng);
            if (slice) return slice->points[rng.below(slice->points.size())];
        }
        if (state->rsamp_successes == 0)
            throw VarietyLikelyEmpty("no subspace ever intersected the variety properly");
        throw BudgetExhausted("fallback exhausted its rsamp attempts");
    };

    return o;
}

VarietySampler::VarietySampler(PolySystem sys, SamplerParams params)
    : sys_(std::move(sys)),
      oracles_(make_variety_oracles(sys_, params)),
      t0_(retry_budget(oracles_.d_max, oracles_.p_bound, oracles_.delta)) {}

std::pair<std::vector<FieldElement>, SampleReport> VarietySampler::sample(RandomSource& rng) {
    auto [point, report] = bipartite_sample(oracles_, rng);
    for (const MultiPoly& f : sys_.polys())
        if (!f.eval(point).is_zero())
            throw Error("internal: sampled point does not lie on the variety");
    return {std::move(point), report};
}

std::pair<std::vector<FieldElement>, SampleReport> sample_variety_point(
    const PolySystem& sys, const SamplerParams& params, RandomSource& rng) {
    VarietySampler sampler(sys, params);
    return sampler.sample(rng);
}

} // namespace varsamp

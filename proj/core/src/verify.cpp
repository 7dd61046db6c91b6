#include "varsamp/verify.hpp"

#include <algorithm>
#include <cmath>

#include "varsamp/unipoly.hpp"

namespace varsamp {

PointKey point_key(const std::vector<FieldElement>& point) {
    PointKey k;
    k.reserve(point.size());
    for (FieldElement x : point) k.push_back(x.value());
    return k;
}

BigRational EmpiricalDistribution::mass_at(const PointKey& p) const {
    auto it = mass_.find(p);
    return it == mass_.end() ? BigRational(0) : it->second;
}

EmpiricalDistribution EmpiricalDistribution::from_mass(std::map<PointKey, BigRational> mass) {
    BigRational total(0);
    for (auto& [k, v] : mass) {
        if (v < 0) throw Error("negative probability mass");
        total += v;
    }
    if (total != 1) throw Error("probability masses must sum to exactly 1");
    for (auto it = mass.begin(); it != mass.end();) {
        if (it->second == 0)
            it = mass.erase(it);
        else
            ++it;
    }
    EmpiricalDistribution d;
    d.mass_ = std::move(mass);
    return d;
}

EmpiricalDistribution empirical_distribution(const std::vector<PointKey>& samples) {
    if (samples.empty()) throw EmptySample("cannot normalize an empty sample list");
    std::map<PointKey, std::uint64_t> counts;
    for (const PointKey& s : samples) ++counts[s];
    std::map<PointKey, BigRational> mass;
    for (auto& [k, c] : counts) mass[k] = BigRational(c, samples.size());
    return EmpiricalDistribution::from_mass(std::move(mass));
}

EmpiricalDistribution uniform_distribution(const std::vector<PointKey>& support) {
    if (support.empty()) throw EmptySample("uniform distribution needs a nonempty support");
    std::map<PointKey, BigRational> mass;
    for (const PointKey& s : support) mass[s] = 0;
    if (mass.size() != support.size()) throw Error("uniform support has duplicate points");
    for (auto& [k, v] : mass) v = BigRational(1, support.size());
    return EmpiricalDistribution::from_mass(std::move(mass));
}

BigRational statistical_distance(const EmpiricalDistribution& a, const EmpiricalDistribution& b) {
    BigRational sum(0);
    for (const auto& [k, v] : a.mass()) sum += boost::multiprecision::abs(v - b.mass_at(k));
    for (const auto& [k, v] : b.mass())
        if (a.mass_at(k) == 0) sum += v;
    return sum / 2;
}

EmpiricalDistribution mix(const EmpiricalDistribution& a, const EmpiricalDistribution& e,
                          const BigRational& eps) {
    if (eps < 0 || eps > 1) throw Error("mixing weight must lie in [0, 1]");
    std::map<PointKey, BigRational> mass;
    for (const auto& [k, v] : a.mass()) mass[k] += (1 - eps) * v;
    for (const auto& [k, v] : e.mass()) mass[k] += eps * v;
    return EmpiricalDistribution::from_mass(std::move(mass));
}

namespace {

std::uint64_t checked_pow_or_throw(std::uint64_t q, std::size_t n, std::uint64_t cap,
                                   const char* what) {
    unsigned __int128 r = 1;
    for (std::size_t i = 0; i < n; ++i) {
        r *= q;
        if (r > cap) throw TooLarge(what);
    }
    return static_cast<std::uint64_t>(r);
}

// Full scan of F_q^n with per-variable specialization: the polynomials are
// re-substituted one coordinate at a time so the innermost loop is univariate
// Horner evaluation.
template <class Fn>
void scan_common_zeros(const Field& field, std::vector<MultiPoly> polys, std::size_t var,
                       std::vector<FieldElement>& prefix, Fn&& on_zero) {
    const std::size_t n = polys.empty() ? 0 : polys[0].num_vars();
    const std::uint64_t q = field.modulus();
    if (var + 1 == n) {
        std::vector<UniPoly> last;
        last.reserve(polys.size());
        for (const MultiPoly& f : polys) last.push_back(f.to_unipoly(var));
        for (std::uint64_t v = 0; v < q; ++v) {
            FieldElement x = field.element(v);
            bool zero = true;
            for (const UniPoly& u : last)
                if (!u.eval(x).is_zero()) {
                    zero = false;
                    break;
                }
            if (zero) {
                prefix.push_back(x);
                on_zero(prefix);
                prefix.pop_back();
            }
        }
        return;
    }
    for (std::uint64_t v = 0; v < q; ++v) {
        FieldElement x = field.element(v);
        std::vector<MultiPoly> next;
        next.reserve(polys.size());
        for (const MultiPoly& f : polys) next.push_back(f.substitute_var(var, x));
        prefix.push_back(x);
        scan_common_zeros(field, std::move(next), var + 1, prefix, on_zero);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<FieldElement>> enumerate_variety(const PolySystem& sys,
                                                         std::uint64_t cap) {
    checked_pow_or_throw(sys.field().modulus(), sys.num_vars(), cap,
                         "q^n exceeds the brute-force cap");
    std::vector<std::vector<FieldElement>> out;
    std::vector<FieldElement> prefix;
    scan_common_zeros(sys.field(), sys.polys(), 0, prefix,
                      [&](const std::vector<FieldElement>& pt) { out.push_back(pt); });
    return out;
}

double lang_weil_deviation(std::uint64_t N, std::uint64_t s, std::uint32_t r, std::uint64_t q) {
    if (s < 1) throw Error("s must be at least 1");
    double qr = std::pow(static_cast<double>(q), static_cast<double>(r));
    double expected = static_cast<double>(s) * qr;
    double diff = std::abs(static_cast<double>(N) - expected);
    return diff / (qr / std::sqrt(static_cast<double>(q)));
}

BigRational estimate_proper_fraction(const PolySystem& sys, std::uint64_t trials,
                                     RandomSource& rng, std::uint64_t budget) {
    if (trials < 1) throw Error("estimate_proper_fraction needs at least one trial");
    const std::size_t k = sys.num_polys();
    std::uint64_t hits = 0;
    for (std::uint64_t t = 0; t < trials; ++t) {
        AffineSubspace a = sample_affine_subspace(sys.field(), sys.num_vars(), k, rng);
        try {
            if (classify_intersection(restrict_to_subspace(sys, a), rng, budget).is_zero_dim())
                ++hits;
        } catch (const EliminationBudgetExceeded&) {
            // counts as improper, mirroring the sampler's failure handling
        }
    }
    return BigRational(hits, trials);
}

BigRational exact_proper_fraction(const PolySystem& sys, std::uint64_t cap) {
    const std::size_t k = sys.num_polys();
    auto subspaces = enumerate_affine_subspaces(sys.field(), sys.num_vars(), k, cap);
    std::uint64_t hits = 0;
    for (const AffineSubspace& a : subspaces)
        if (classify_intersection(restrict_to_subspace(sys, a)).is_zero_dim()) ++hits;
    return BigRational(hits, subspaces.size());
}

DegreeAudit audit_left_degrees(const PolySystem& sys, std::uint64_t cap) {
    auto variety = enumerate_variety(sys, cap);
    DegreeAudit audit;
    audit.num_points = variety.size();
    if (variety.empty()) return audit;

    std::map<PointKey, std::uint64_t> degree;
    for (const auto& pt : variety) degree[point_key(pt)] = 0;

    const std::size_t k = sys.num_polys();
    for (const AffineSubspace& a :
         enumerate_affine_subspaces(sys.field(), sys.num_vars(), k, cap)) {
        IntersectionClass cls = classify_intersection(restrict_to_subspace(sys, a));
        if (!cls.is_zero_dim()) continue;
        for (const auto& t : cls.points) {
            auto it = degree.find(point_key(a.point_at(t)));
            if (it == degree.end())
                throw Error("internal: intersection point is off the variety");
            ++it->second;
        }
    }

    audit.min_degree = ~0ull;
    for (const auto& [pt, d] : degree) {
        audit.min_degree = std::min(audit.min_degree, d);
        audit.max_degree = std::max(audit.max_degree, d);
    }
    double center = std::pow(static_cast<double>(sys.field().modulus()),
                             static_cast<double>(k * (sys.num_vars() - k)));
    audit.ratio_lo = static_cast<double>(audit.min_degree) / center;
    audit.ratio_hi = static_cast<double>(audit.max_degree) / center;
    audit.relative_spread = std::max(std::abs(audit.ratio_hi - 1.0), std::abs(audit.ratio_lo - 1.0));
    return audit;
}

bool schwartz_zippel_check(const MultiPoly& f, std::uint64_t cap) {
    if (f.is_zero()) throw ZeroPolynomial("Schwartz-Zippel applies to nonzero polynomials");
    Field field = f.field();
    const std::size_t n = f.num_vars();
    checked_pow_or_throw(field.modulus(), n, cap, "q^n exceeds the brute-force cap");
    std::uint64_t zeros = 0;
    std::vector<FieldElement> prefix;
    scan_common_zeros(field, {f}, 0, prefix,
                      [&](const std::vector<FieldElement>&) { ++zeros; });
    unsigned __int128 bound = f.total_degree();
    for (std::size_t i = 0; i + 1 < n; ++i) bound *= field.modulus();
    return zeros <= bound;
}

double sampling_slack(std::uint64_t support_size, std::uint64_t samples, double confidence) {
    double s = static_cast<double>(support_size);
    double n = static_cast<double>(samples);
    return 0.5 * std::sqrt(s / n) + std::sqrt(std::log(1.0 / (1.0 - confidence)) / (2.0 * n));
}

WilsonInterval wilson_interval(std::uint64_t successes, std::uint64_t trials, double z) {
    if (trials == 0) throw Error("Wilson interval needs at least one trial");
    double n = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / n;
    double z2 = z * z;
    double denom = 1.0 + z2 / n;
    double center = (phat + z2 / (2.0 * n)) / denom;
    double half = z * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n)) / denom;
    return WilsonInterval{std::max(0.0, center - half), std::min(1.0, center + half)};
}

} // namespace varsamp

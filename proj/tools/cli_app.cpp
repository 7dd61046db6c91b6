#include "cli_app.hpp"

#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "varsamp/sampler.hpp"
#include "varsamp/system_io.hpp"
#include "varsamp/verify.hpp"

namespace varsamp::cli {

namespace {

SystemFile load_system(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open system file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_system(buf.str());
}

std::string point_line(const std::vector<FieldElement>& pt) {
    std::ostringstream out;
    for (std::size_t i = 0; i < pt.size(); ++i) {
        if (i) out << ",";
        out << pt[i].value();
    }
    return out.str();
}

int cmd_sample(const std::string& path, double epsilon, std::uint64_t count, std::uint64_t seed,
               bool json, std::ostream& out) {
    SystemFile sf = load_system(path);
    VarietySampler sampler(sf.system, SamplerParams{epsilon});
    RandomSource rng(seed);

    std::vector<std::vector<FieldElement>> points;
    points.reserve(count);
    std::uint64_t fallbacks = 0, rsamp_failures = 0;
    for (std::uint64_t i = 0; i < count; ++i) {
        auto [pt, report] = sampler.sample(rng);
        for (const MultiPoly& f : sf.system.polys())
            if (!f.eval(pt).is_zero()) throw Error("internal: output point is off the variety");
        fallbacks += report.fell_back ? 1 : 0;
        rsamp_failures += static_cast<std::uint64_t>(report.rsamp_failures);
        points.push_back(std::move(pt));
    }

    if (json) {
        nlohmann::json doc;
        doc["q"] = sf.system.field().modulus();
        doc["vars"] = sf.var_names;
        auto& arr = doc["points"] = nlohmann::json::array();
        for (const auto& pt : points) {
            nlohmann::json row = nlohmann::json::array();
            for (FieldElement x : pt) row.push_back(x.value());
            arr.push_back(std::move(row));
        }
        doc["report"] = {{"fallbacks", fallbacks}, {"rsamp_failures", rsamp_failures}};
        out << doc.dump() << "\n";
    } else {
        for (const auto& pt : points) out << point_line(pt) << "\n";
    }
    return 0;
}

int cmd_solve(const std::string& path, std::ostream& out) {
    SystemFile sf = load_system(path);
    if (sf.system.num_vars() != sf.system.num_polys())
        throw Error("solve needs a square system (as many variables as polynomials)");
    IntersectionClass cls = classify_intersection(sf.system);
    switch (cls.kind) {
        case IntersectionClass::Kind::Empty:
            out << "classification: empty\nsolutions: 0\n";
            break;
        case IntersectionClass::Kind::PositiveDim:
            out << "classification: positive-dimensional\n";
            break;
        case IntersectionClass::Kind::ZeroDim:
            out << "classification: zero-dimensional\nsolutions: " << cls.points.size() << "\n";
            for (const auto& pt : cls.points) out << point_line(pt) << "\n";
            break;
    }
    return 0;
}

int cmd_count(const std::string& path, std::ostream& out) {
    SystemFile sf = load_system(path);
    out << "count: " << enumerate_variety(sf.system).size() << "\n";
    return 0;
}

int cmd_subspaces(std::uint64_t n, std::uint64_t k, std::uint64_t q, std::ostream& out) {
    if (k > n) throw BadDimensions("k exceeds n");
    out << "linear: " << count_linear_subspaces(n, k, q)
        << ", affine: " << count_affine_subspaces(n, k, q) << "\n";
    return 0;
}

int cmd_verify_distance(const std::string& path, double epsilon, std::uint64_t samples,
                        std::uint64_t seed, std::ostream& out) {
    SystemFile sf = load_system(path);
    auto variety = enumerate_variety(sf.system);
    if (variety.empty()) throw VarietyLikelyEmpty("the variety has no rational points");
    std::vector<PointKey> support;
    support.reserve(variety.size());
    for (const auto& pt : variety) support.push_back(point_key(pt));

    VarietySampler sampler(sf.system, SamplerParams{epsilon});
    RandomSource rng(seed);
    std::vector<PointKey> draws;
    draws.reserve(samples);
    for (std::uint64_t i = 0; i < samples; ++i)
        draws.push_back(point_key(sampler.sample(rng).first));

    BigRational distance =
        statistical_distance(empirical_distribution(draws), uniform_distribution(support));
    double dist = static_cast<double>(distance);
    double q = static_cast<double>(sf.system.field().modulus());
    double bound = 6.0 * std::pow(q, epsilon - 1.0);
    double slack = sampling_slack(support.size(), samples);

    out << std::setprecision(6) << std::fixed;
    out << "samples: " << samples << "\n";
    out << "support: " << support.size() << "\n";
    out << "distance: " << dist << "\n";
    out << "bound: " << bound << "\n";
    out << "slack: " << slack << "\n";
    bool pass = dist <= bound + slack;
    out << (pass ? "PASS" : "FAIL") << "\n";
    return pass ? 0 : 4;
}

int cmd_estimate_proper(const std::string& path, std::uint64_t trials, std::uint64_t seed,
                        std::ostream& out) {
    SystemFile sf = load_system(path);
    RandomSource rng(seed);
    BigRational frac = estimate_proper_fraction(sf.system, trials, rng);
    std::uint64_t hits =
        static_cast<std::uint64_t>(boost::multiprecision::numerator(frac) * trials /
                                   boost::multiprecision::denominator(frac));
    WilsonInterval wi = wilson_interval(hits, trials);
    out << std::setprecision(6) << std::fixed;
    out << "fraction: " << static_cast<double>(frac) << "\n";
    out << "wilson99: [" << wi.low << ", " << wi.high << "]\n";
    return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Almost-uniform sampling of rational points on affine varieties over prime fields"};
    app.require_subcommand(1);

    std::string system_path;
    double epsilon = 0.25;
    std::uint64_t count = 1, samples = 0, trials = 0, seed = 0;
    std::uint64_t n = 0, k = 0, q = 0;
    bool json = false;

    auto* sample = app.add_subcommand("sample", "Draw almost-uniform points on the variety");
    sample->add_option("--system", system_path, "system file")->required();
    sample->add_option("--epsilon", epsilon, "accuracy parameter in (0,1)")->required();
    sample->add_option("--count", count, "number of points")->required();
    sample->add_option("--seed", seed, "random seed")->required();
    sample->add_flag("--json", json, "emit a JSON document instead of lines");

    auto* solve = app.add_subcommand("solve", "Classify and solve a square system");
    solve->add_option("--system", system_path, "system file")->required();

    auto* cnt = app.add_subcommand("count", "Brute-force count of the variety's points");
    cnt->add_option("--system", system_path, "system file")->required();

    auto* subs = app.add_subcommand("subspaces", "Linear and affine subspace counts");
    subs->add_option("--n", n, "ambient dimension")->required();
    subs->add_option("--k", k, "subspace dimension")->required();
    subs->add_option("--q", q, "field size")->required();

    auto* vdist = app.add_subcommand("verify-distance",
                                     "Empirical distance of the sampler to uniform");
    vdist->add_option("--system", system_path, "system file")->required();
    vdist->add_option("--epsilon", epsilon, "accuracy parameter in (0,1)")->required();
    vdist->add_option("--samples", samples, "number of draws")->required();
    vdist->add_option("--seed", seed, "random seed")->required();

    auto* eprop = app.add_subcommand("estimate-proper",
                                     "Monte Carlo proper-intersection fraction");
    eprop->add_option("--system", system_path, "system file")->required();
    eprop->add_option("--trials", trials, "number of subspace draws")->required();
    eprop->add_option("--seed", seed, "random seed")->required();

    try {
        std::vector<std::string> argv = args;
        std::reverse(argv.begin(), argv.end()); // CLI11 parses reversed vectors
        app.parse(argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            // --help and friends
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        if (sample->parsed()) return cmd_sample(system_path, epsilon, count, seed, json, out);
        if (solve->parsed()) return cmd_solve(system_path, out);
        if (cnt->parsed()) return cmd_count(system_path, out);
        if (subs->parsed()) return cmd_subspaces(n, k, q, out);
        if (vdist->parsed()) return cmd_verify_distance(system_path, epsilon, samples, seed, out);
        if (eprop->parsed()) return cmd_estimate_proper(system_path, trials, seed, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const CompositeModulus& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const EvenModulus& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const TooManyPolys& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const UndeclaredVariable& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const ConfigRejected& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const BadDimensions& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const VarietyLikelyEmpty& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const BudgetExhausted& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const EliminationBudgetExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const TooLarge& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace varsamp::cli

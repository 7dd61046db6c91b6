#include "varsamp/elim.hpp"

#include <algorithm>
#include <optional>

#include "varsamp/rootfind.hpp"
#include "varsamp/unipoly.hpp"

namespace varsamp {

PolySystem::PolySystem(const Field& field, std::size_t num_vars, std::vector<MultiPoly> polys)
    : field_(field), num_vars_(num_vars), polys_(std::move(polys)), degree_bound_(0) {
    if (polys_.empty()) throw BadDimensions("a system needs at least one polynomial");
    if (polys_.size() > MAX_K)
        throw TooManyPolys("co-dimension " + std::to_string(polys_.size()) + " exceeds the cap " +
                           std::to_string(MAX_K));
    if (polys_.size() > num_vars_) throw BadDimensions("more polynomials than variables");
    for (const MultiPoly& f : polys_) {
        if (f.num_vars() != num_vars_)
            throw DimensionMismatch("polynomial variable count differs from the system's");
        if (f.modulus() != field_.modulus()) throw MixedFields("polynomial over a different field");
        degree_bound_ = std::max(degree_bound_, f.total_degree());
    }
}

namespace {

// Top-reduction of f by the basis until no leading monomial divides; the
// budget counter ticks once per cancellation step.
MultiPoly normal_form(MultiPoly f, const std::vector<MultiPoly>& basis, std::uint64_t& steps,
                      std::uint64_t budget) {
    bool reduced = true;
    while (reduced && !f.is_zero()) {
        reduced = false;
        const Term& lt = f.leading_term();
        for (const MultiPoly& g : basis) {
            const Term& gt = g.leading_term();
            if (!gt.mono.divides(lt.mono)) continue;
            if (++steps > budget)
                throw EliminationBudgetExceeded("S-pair reduction budget exhausted");
            Term factor{lt.mono.divided_by(gt.mono), lt.coeff * inv(gt.coeff)};
            f = f - g.times_term(factor);
            reduced = true;
            break;
        }
    }
    return f;
}

// Full reduction: reduce the leading term first, then the tail terms, so the
// result is in normal form with respect to the whole basis.
MultiPoly full_reduce(MultiPoly f, const std::vector<MultiPoly>& basis, std::uint64_t& steps,
                      std::uint64_t budget) {
    Field field(f.field());
    MultiPoly out = MultiPoly::zero(field, f.num_vars());
    while (!f.is_zero()) {
        f = normal_form(std::move(f), basis, steps, budget);
        if (f.is_zero()) break;
        const Term& lt = f.leading_term();
        out = out + MultiPoly(field, f.num_vars(), {lt});
        f = f - MultiPoly(field, f.num_vars(), {lt});
    }
    return out;
}

MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g) {
    const Term& ft = f.leading_term();
    const Term& gt = g.leading_term();
    Monomial l = Monomial::lcm(ft.mono, gt.mono);
    Term a{l.divided_by(ft.mono), inv(ft.coeff)};
    Term b{l.divided_by(gt.mono), inv(gt.coeff)};
    return f.times_term(a) - g.times_term(b);
}

std::vector<MultiPoly> unit_basis(const Field& field, std::size_t num_vars) {
    return {MultiPoly::constant(field, num_vars, field.one())};
}

// k = 1 collapses to a univariate gcd.
std::vector<MultiPoly> groebner_univariate(const PolySystem& sys) {
    Field field = sys.field();
    std::optional<UniPoly> acc;
    for (const MultiPoly& f : sys.polys()) {
        if (f.is_zero()) continue;
        UniPoly u = f.to_unipoly(0);
        acc = acc ? upoly_gcd(*acc, u) : u.monic();
    }
    if (!acc) return {};
    if (acc->degree() == 0) return unit_basis(field, 1);
    std::vector<Term> terms;
    for (std::size_t i = 0; i < acc->coeffs().size(); ++i) {
        if (acc->coeffs()[i].is_zero()) continue;
        Monomial m(std::size_t{1});
        m[0] = static_cast<std::uint32_t>(i);
        terms.push_back(Term{std::move(m), acc->coeffs()[i]});
    }
    return {MultiPoly(field, 1, std::move(terms))};
}

} // namespace

std::vector<MultiPoly> lex_groebner(const PolySystem& sys, std::uint64_t budget) {
    Field field = sys.field();
    const std::size_t nv = sys.num_vars();
    if (nv == 1) return groebner_univariate(sys);

    std::uint64_t steps = 0;
    std::vector<MultiPoly> basis;
    for (const MultiPoly& f : sys.polys()) {
        if (f.is_zero()) continue;
        MultiPoly r = full_reduce(f, basis, steps, budget);
        if (r.is_nonzero_constant()) return unit_basis(field, nv);
        if (!r.is_zero()) basis.push_back(r.scaled(inv(r.leading_term().coeff)));
    }
    if (basis.empty()) return {};

    // Pair queue under the normal strategy: smallest lcm degree first.
    struct Pair {
        std::size_t i, j;
        Monomial lcm;
    };
    auto pair_less = [](const Pair& a, const Pair& b) {
        if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
        return Monomial::lex_less(a.lcm, b.lcm);
    };
    std::vector<Pair> pairs;
    auto push_pairs_for = [&](std::size_t jn) {
        for (std::size_t i = 0; i < jn; ++i)
            pairs.push_back(Pair{i, jn,
                                 Monomial::lcm(basis[i].leading_term().mono,
                                               basis[jn].leading_term().mono)});
    };
    for (std::size_t j = 1; j < basis.size(); ++j) push_pairs_for(j);

    while (!pairs.empty()) {
        auto it = std::min_element(pairs.begin(), pairs.end(), pair_less);
        Pair p = *it;
        *it = pairs.back();
        pairs.pop_back();

        const Monomial& mi = basis[p.i].leading_term().mono;
        const Monomial& mj = basis[p.j].leading_term().mono;
        if (p.lcm == mi * mj) continue; // coprime leading monomials reduce to zero

        if (++steps > budget) throw EliminationBudgetExceeded("S-pair reduction budget exhausted");
        MultiPoly s = normal_form(s_polynomial(basis[p.i], basis[p.j]), basis, steps, budget);
        if (s.is_zero()) continue;
        if (s.is_nonzero_constant()) return unit_basis(field, nv);
        basis.push_back(s.scaled(inv(s.leading_term().coeff)));
        push_pairs_for(basis.size() - 1);
    }

    // Inter-reduce: drop elements whose leading monomial another one divides,
    // then fully reduce each survivor against the rest.
    std::vector<MultiPoly> minimal;
    for (std::size_t i = 0; i < basis.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
            if (i == j) continue;
            const Monomial& a = basis[j].leading_term().mono;
            const Monomial& b = basis[i].leading_term().mono;
            if (a.divides(b) && !(a == b && j > i)) redundant = true;
        }
        if (!redundant) minimal.push_back(basis[i]);
    }
    std::vector<MultiPoly> reduced;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        std::vector<MultiPoly> others;
        for (std::size_t j = 0; j < minimal.size(); ++j)
            if (j != i) others.push_back(minimal[j]);
        MultiPoly r = others.empty() ? minimal[i] : full_reduce(minimal[i], others, steps, budget);
        if (!r.is_zero()) reduced.push_back(r.scaled(inv(r.leading_term().coeff)));
    }
    std::sort(reduced.begin(), reduced.end(), [](const MultiPoly& a, const MultiPoly& b) {
        return Monomial::lex_less(a.leading_term().mono, b.leading_term().mono);
    });
    return reduced;
}

bool basis_is_zero_dimensional(const std::vector<MultiPoly>& basis, std::size_t num_vars) {
    for (std::size_t v = 0; v < num_vars; ++v) {
        bool found = false;
        for (const MultiPoly& g : basis) {
            const Monomial& m = g.leading_term().mono;
            if (m[v] == 0) continue;
            bool pure = true;
            for (std::size_t w = 0; w < num_vars && pure; ++w)
                if (w != v && m[w] != 0) pure = false;
            if (pure) {
                found = true;
                break;
            }
        }
        if (!found) return false;
    }
    return true;
}

namespace {

bool is_unit_basis(const std::vector<MultiPoly>& basis) {
    return basis.size() == 1 && basis[0].is_nonzero_constant();
}

// Back-substitution over a zero-dimensional reduced lex basis, variables
// t_k, t_{k-1}, ..., t_1. Returns candidates satisfying every univariate
// condition; the caller cross-checks them against the original system.
std::vector<std::vector<FieldElement>> back_substitute(const std::vector<MultiPoly>& basis,
                                                       const Field& field, std::size_t nv,
                                                       RandomSource& rng) {
    // partial[v] holds values for variables v..nv-1.
    std::vector<std::vector<FieldElement>> partials{{}};
    for (std::size_t v = nv; v-- > 0;) {
        // Basis elements involving only variables >= v (for lex, leading
        // monomial in those variables implies the whole polynomial is).
        std::vector<const MultiPoly*> active;
        for (const MultiPoly& g : basis) {
            const Monomial& m = g.leading_term().mono;
            bool ok = true;
            for (std::size_t w = 0; w < v && ok; ++w)
                if (m[w] != 0) ok = false;
            if (ok) active.push_back(&g);
        }
        std::vector<std::vector<FieldElement>> next;
        for (const auto& tail : partials) {
            std::optional<UniPoly> cond;
            bool contradiction = false;
            for (const MultiPoly* g : active) {
                MultiPoly s = *g;
                for (std::size_t w = v + 1; w < nv; ++w)
                    s = s.substitute_var(w, tail[w - v - 1]);
                if (s.is_zero()) continue;
                UniPoly u = s.to_unipoly(v);
                if (u.degree() == 0) {
                    contradiction = true; // nonzero constant condition
                    break;
                }
                cond = cond ? upoly_gcd(*cond, u) : u.monic();
                if (cond->degree() == 0) {
                    contradiction = true;
                    break;
                }
            }
            if (contradiction) continue;
            if (!cond) throw NotZeroDimensional("no univariate condition for a variable");
            for (FieldElement r : roots_in_field(*cond, field, rng)) {
                std::vector<FieldElement> ext;
                ext.reserve(tail.size() + 1);
                ext.push_back(r);
                ext.insert(ext.end(), tail.begin(), tail.end());
                next.push_back(std::move(ext));
            }
        }
        partials = std::move(next);
    }
    return partials;
}

std::vector<std::vector<FieldElement>> solutions_from_basis(
    const std::vector<MultiPoly>& basis, const PolySystem& sys, RandomSource& rng) {
    std::vector<std::vector<FieldElement>> candidates =
        back_substitute(basis, sys.field(), sys.num_vars(), rng);
    std::vector<std::vector<FieldElement>> verified;
    for (auto& pt : candidates) {
        bool ok = true;
        for (const MultiPoly& f : sys.polys())
            if (!f.eval(pt).is_zero()) {
                ok = false;
                break;
            }
        if (ok) verified.push_back(std::move(pt));
    }
    std::sort(verified.begin(), verified.end(),
              [](const std::vector<FieldElement>& a, const std::vector<FieldElement>& b) {
                  for (std::size_t i = 0; i < a.size(); ++i)
                      if (a[i].value() != b[i].value()) return a[i].value() < b[i].value();
                  return false;
              });
    verified.erase(std::unique(verified.begin(), verified.end()), verified.end());
    return verified;
}

} // namespace

IntersectionClass classify_intersection(const PolySystem& sys, RandomSource& rng,
                                        std::uint64_t budget) {
    std::vector<MultiPoly> basis = lex_groebner(sys, budget);
    if (basis.empty()) return {IntersectionClass::Kind::PositiveDim, {}};
    if (is_unit_basis(basis)) return {IntersectionClass::Kind::Empty, {}};
    if (!basis_is_zero_dimensional(basis, sys.num_vars()))
        return {IntersectionClass::Kind::PositiveDim, {}};
    auto points = solutions_from_basis(basis, sys, rng);
    if (points.empty()) return {IntersectionClass::Kind::Empty, {}};
    // Bezout guard: a zero-dimensional system of k degree-d equations has at
    // most d^k rational points.
    unsigned __int128 bound = 1;
    for (std::size_t i = 0; i < sys.num_polys(); ++i)
        bound *= std::max<std::uint32_t>(sys.degree_bound(), 1);
    if (static_cast<unsigned __int128>(points.size()) > bound)
        throw Error("internal: solution count exceeds the Bezout bound");
    return {IntersectionClass::Kind::ZeroDim, std::move(points)};
}

IntersectionClass classify_intersection(const PolySystem& sys, std::uint64_t budget) {
    RandomSource rng(0x5eed'0f0e'd00dull);
    return classify_intersection(sys, rng, budget);
}

std::vector<std::vector<FieldElement>> enumerate_solutions(const PolySystem& sys,
                                                           RandomSource& rng,
                                                           std::uint64_t budget) {
    std::vector<MultiPoly> basis = lex_groebner(sys, budget);
    if (basis.empty() || is_unit_basis(basis) ||
        !basis_is_zero_dimensional(basis, sys.num_vars()))
        throw NotZeroDimensional("system does not define a zero-dimensional variety");
    auto points = solutions_from_basis(basis, sys, rng);
    if (points.empty())
        throw NotZeroDimensional("zero-dimensional over the closure but without rational points");
    return points;
}

PolySystem restrict_to_subspace(const PolySystem& sys, const AffineSubspace& a) {
    std::vector<MultiPoly> restricted;
    restricted.reserve(sys.num_polys());
    for (const MultiPoly& f : sys.polys()) restricted.push_back(substitute_affine(f, a));
    return PolySystem(sys.field(), a.dim(), std::move(restricted));
}

} // namespace varsamp

#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "varsamp/elim.hpp"
#include "varsamp/poly.hpp"
#include "varsamp/rng.hpp"
#include "varsamp/unipoly.hpp"

namespace vstest {

using namespace varsamp;

struct TermSpec {
    std::uint64_t coeff;
    std::vector<std::uint32_t> exps;
};

inline MultiPoly make_poly(const Field& f, std::size_t nv, const std::vector<TermSpec>& specs) {
    std::vector<Term> terms;
    for (const TermSpec& s : specs)
        terms.push_back(Term{Monomial(std::vector<std::uint32_t>(s.exps)), f.element(s.coeff)});
    return MultiPoly(f, nv, std::move(terms));
}

/// Independent oracle: roots of u by trying every field element.
inline std::vector<std::uint64_t> brute_roots(const UniPoly& u, const Field& f) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t v = 0; v < f.modulus(); ++v)
        if (u.eval(f.element(v)).is_zero()) out.push_back(v);
    return out;
}

/// Independent oracle: common zeros by a plain odometer scan of F_q^n.
inline std::vector<std::vector<std::uint64_t>> brute_common_zeros(
    const std::vector<MultiPoly>& polys, const Field& f, std::size_t n) {
    std::vector<std::vector<std::uint64_t>> out;
    std::vector<std::uint64_t> v(n, 0);
    for (;;) {
        std::vector<FieldElement> pt;
        pt.reserve(n);
        for (std::uint64_t c : v) pt.push_back(f.element(c));
        bool zero = true;
        for (const MultiPoly& g : polys)
            if (!g.eval(pt).is_zero()) {
                zero = false;
                break;
            }
        if (zero) out.push_back(v);
        std::size_t i = n;
        while (i-- > 0) {
            if (++v[i] < f.modulus()) break;
            v[i] = 0;
            if (i == 0) return out;
        }
        if (n == 0) return out;
    }
}

inline std::vector<std::uint64_t> key_of(const std::vector<FieldElement>& pt) {
    std::vector<std::uint64_t> k;
    for (FieldElement x : pt) k.push_back(x.value());
    return k;
}

inline UniPoly random_unipoly(const Field& f, std::size_t max_deg, RandomSource& rng,
                              bool force_nonzero = true) {
    std::size_t deg = rng.below(max_deg + 1);
    std::vector<FieldElement> coeffs;
    for (std::size_t i = 0; i <= deg; ++i) coeffs.push_back(rand_element(f, rng));
    UniPoly u(f, std::move(coeffs));
    if (force_nonzero && u.is_zero()) return UniPoly(f, {1});
    return u;
}

inline MultiPoly random_multipoly(const Field& f, std::size_t nv, std::uint32_t max_deg,
                                  std::size_t max_terms, RandomSource& rng,
                                  bool force_nonzero = false) {
    std::size_t nterms = 1 + rng.below(max_terms);
    std::vector<Term> terms;
    for (std::size_t t = 0; t < nterms; ++t) {
        Monomial m(nv);
        std::uint32_t budget = max_deg;
        for (std::size_t v = 0; v < nv; ++v) {
            std::uint32_t e = static_cast<std::uint32_t>(rng.below(budget + 1));
            m[v] = e;
            budget -= e;
        }
        terms.push_back(Term{std::move(m), rand_element(f, rng)});
    }
    MultiPoly p(f, nv, std::move(terms));
    if (force_nonzero && p.is_zero())
        return MultiPoly::constant(f, nv, f.one());
    return p;
}

} // namespace vstest

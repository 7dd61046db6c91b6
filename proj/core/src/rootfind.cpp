#include "varsamp/rootfind.hpp"

#include <algorithm>

namespace varsamp {

UniPoly powmod_x_q(const UniPoly& f, const Field& field) {
    if (f.is_zero() || f.degree() < 1)
        throw ZeroPolynomial("powmod_x_q needs a modulus of degree >= 1");
    if (f.modulus() != field.modulus()) throw MixedFields("polynomial over a different field");
    return powmod(UniPoly::x(field), field.modulus(), f);
}

namespace {

struct SplitState {
    const Field& field;
    RandomSource& rng;
    std::uint64_t redraws_left;
    std::vector<FieldElement> roots;
};

// g is monic, squarefree, and splits into distinct linear factors over F_p.
void split_linear(const UniPoly& g, SplitState& st) {
    if (g.degree() == 0) return;
    if (g.degree() == 1) {
        // monic x + c -> root -c
        st.roots.push_back(-g.coeff(0));
        return;
    }
    const std::uint64_t half = (st.field.modulus() - 1) / 2;
    for (;;) {
        FieldElement delta = rand_element(st.field, st.rng);
        // (x + delta)^((p-1)/2) - 1 captures the roots a with a + delta a
        // nonzero quadratic residue.
        UniPoly probe = powmod(UniPoly::linear_shift(st.field, delta), half, g) -
                        UniPoly::constant(st.field, st.field.one());
        UniPoly h = probe.is_zero() ? g : upoly_gcd(g, probe);
        if (!h.is_zero() && h.degree() > 0 && h.degree() < g.degree()) {
            UniPoly rest = g.divmod(h).first.monic();
            split_linear(h, st);
            split_linear(rest, st);
            return;
        }
        if (st.redraws_left == 0)
            throw SplitStall("equal-degree splitting failed to make progress");
        --st.redraws_left;
    }
}

} // namespace

std::vector<FieldElement> roots_in_field(const UniPoly& f, const Field& field, RandomSource& rng) {
    if (f.is_zero()) throw ZeroPolynomial("roots of the zero polynomial");
    if (f.modulus() != field.modulus()) throw MixedFields("polynomial over a different field");
    if (f.degree() == 0) return {};

    // gcd(f, x^p - x) keeps exactly one linear factor per distinct root.
    UniPoly xq = powmod_x_q(f, field);
    UniPoly g = upoly_gcd(f, xq - UniPoly::x(field));

    SplitState st{field, rng, 64 * static_cast<std::uint64_t>(f.degree()), {}};
    split_linear(g, st);
    std::sort(st.roots.begin(), st.roots.end(),
              [](FieldElement a, FieldElement b) { return a.value() < b.value(); });
    return st.roots;
}

} // namespace varsamp

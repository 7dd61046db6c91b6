#include "varsamp/poly.hpp"

#include <algorithm>

#include "varsamp/geometry.hpp"
#include "varsamp/unipoly.hpp"

namespace varsamp {

Monomial Monomial::operator*(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw DimensionMismatch("monomial variable counts differ");
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] += o.exps_[i];
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (exps_.size() != o.exps_.size()) throw DimensionMismatch("monomial variable counts differ");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > o.exps_[i]) return false;
    return true;
}

Monomial Monomial::divided_by(const Monomial& o) const {
    Monomial r(*this);
    for (std::size_t i = 0; i < exps_.size(); ++i) r.exps_[i] -= o.exps_[i];
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r(a);
    for (std::size_t i = 0; i < r.exps_.size(); ++i) r.exps_[i] = std::max(a.exps_[i], b.exps_[i]);
    return r;
}

MultiPoly::MultiPoly(const Field& field, std::size_t num_vars, std::vector<Term> terms)
    : modulus_(field.modulus()), num_vars_(num_vars), terms_(std::move(terms)) {
    for (const Term& t : terms_) {
        if (t.mono.num_vars() != num_vars_)
            throw DimensionMismatch("term exponent length differs from variable count");
        if (t.coeff.modulus() != modulus_) throw MixedFields("coefficient from a different field");
    }
    normalize();
}

void MultiPoly::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const Term& a, const Term& b) { return Monomial::lex_less(b.mono, a.mono); });
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (Term& t : terms_) {
        if (!out.empty() && out.back().mono == t.mono) {
            out.back().coeff += t.coeff;
            if (out.back().coeff.is_zero()) out.pop_back();
        } else if (!t.coeff.is_zero()) {
            out.push_back(std::move(t));
        }
    }
    terms_ = std::move(out);
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
    if (num_vars_ != o.num_vars_) throw DimensionMismatch("polynomial variable counts differ");
    if (modulus_ != o.modulus_) throw MixedFields("polynomials over different fields");
}

std::uint32_t MultiPoly::total_degree() const noexcept {
    std::uint32_t d = 0;
    for (const Term& t : terms_) d = std::max(d, t.mono.degree());
    return d;
}

const Term& MultiPoly::leading_term() const {
    if (terms_.empty()) throw ZeroPolynomial("leading term of the zero polynomial");
    return terms_.front();
}

FieldElement MultiPoly::eval(const std::vector<FieldElement>& point) const {
    if (point.size() != num_vars_) throw DimensionMismatch("evaluation point has wrong length");
    Field f(modulus_);
    FieldElement acc = f.zero();
    for (const Term& t : terms_) {
        FieldElement m = t.coeff;
        for (std::size_t i = 0; i < num_vars_; ++i) {
            std::uint32_t e = t.mono[i];
            if (e == 0) continue;
            m = m * pow(point[i], e);
        }
        acc += m;
    }
    return acc;
}

MultiPoly MultiPoly::substitute_var(std::size_t var, FieldElement value) const {
    if (var >= num_vars_) throw DimensionMismatch("variable index out of range");
    if (value.modulus() != modulus_) throw MixedFields("substituted value from a different field");
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& t : terms_) {
        Term nt = t;
        std::uint32_t e = nt.mono[var];
        if (e != 0) {
            nt.coeff = nt.coeff * pow(value, e);
            nt.mono[var] = 0;
        }
        out.push_back(std::move(nt));
    }
    return MultiPoly(Field(modulus_), num_vars_, std::move(out));
}

UniPoly MultiPoly::to_unipoly(std::size_t var) const {
    Field f(modulus_);
    std::size_t deg = 0;
    for (const Term& t : terms_) {
        for (std::size_t i = 0; i < num_vars_; ++i)
            if (i != var && t.mono[i] != 0)
                throw DimensionMismatch("polynomial is not univariate in the requested variable");
        deg = std::max<std::size_t>(deg, t.mono[var]);
    }
    std::vector<FieldElement> coeffs(terms_.empty() ? 0 : deg + 1, f.zero());
    for (const Term& t : terms_) coeffs[t.mono[var]] = t.coeff;
    return UniPoly(f, std::move(coeffs));
}

MultiPoly MultiPoly::operator+(const MultiPoly& o) const {
    check_compatible(o);
    std::vector<Term> out = terms_;
    out.insert(out.end(), o.terms_.begin(), o.terms_.end());
    return MultiPoly(Field(modulus_), num_vars_, std::move(out));
}

MultiPoly MultiPoly::operator-(const MultiPoly& o) const { return *this + (-o); }

MultiPoly MultiPoly::operator-() const {
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff = -t.coeff;
    MultiPoly r(Field(modulus_), num_vars_);
    r.terms_ = std::move(out); // already normalized
    return r;
}

MultiPoly MultiPoly::operator*(const MultiPoly& o) const {
    check_compatible(o);
    std::vector<Term> out;
    out.reserve(terms_.size() * o.terms_.size());
    for (const Term& a : terms_)
        for (const Term& b : o.terms_) out.push_back(Term{a.mono * b.mono, a.coeff * b.coeff});
    return MultiPoly(Field(modulus_), num_vars_, std::move(out));
}

MultiPoly MultiPoly::scaled(FieldElement c) const {
    if (c.modulus() != modulus_) throw MixedFields("scalar from a different field");
    if (c.is_zero()) return MultiPoly(Field(modulus_), num_vars_);
    std::vector<Term> out = terms_;
    for (Term& t : out) t.coeff = t.coeff * c;
    MultiPoly r(Field(modulus_), num_vars_);
    r.terms_ = std::move(out);
    return r;
}

MultiPoly MultiPoly::times_term(const Term& t) const {
    if (t.coeff.is_zero()) return MultiPoly(Field(modulus_), num_vars_);
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const Term& a : terms_) out.push_back(Term{a.mono * t.mono, a.coeff * t.coeff});
    MultiPoly r(Field(modulus_), num_vars_);
    r.terms_ = std::move(out); // multiplying by one term preserves order and distinctness
    return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept {
    if (a.modulus_ != b.modulus_ || a.num_vars_ != b.num_vars_ ||
        a.terms_.size() != b.terms_.size())
        return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i)
        if (a.terms_[i].mono != b.terms_[i].mono || a.terms_[i].coeff != b.terms_[i].coeff)
            return false;
    return true;
}

MultiPoly MultiPoly::constant(const Field& field, std::size_t num_vars, FieldElement c) {
    if (c.is_zero()) return MultiPoly(field, num_vars);
    return MultiPoly(field, num_vars, {Term{Monomial(num_vars), c}});
}

MultiPoly MultiPoly::term(const Field& field, std::size_t num_vars, std::size_t var,
                          std::uint32_t e, FieldElement c) {
    Monomial m(num_vars);
    m[var] = e;
    return MultiPoly(field, num_vars, {Term{std::move(m), c}});
}

namespace {

// Horner-style composition over the variables of f: f is viewed as a
// polynomial in its first remaining variable with coefficients handled
// recursively, then evaluated at the corresponding linear form. Keeps
// intermediate term counts near the final size instead of expanding each
// monomial's power products independently.
MultiPoly compose_rec(const std::vector<Term>& terms, std::size_t begin, std::size_t end,
                      std::size_t var, const std::vector<MultiPoly>& linear_forms,
                      const Field& field, std::size_t out_vars) {
    if (begin == end) return MultiPoly::zero(field, out_vars);
    std::size_t n = linear_forms.size();
    if (var == n) {
        // All exponents consumed; the slice is a single constant term.
        return MultiPoly::constant(field, out_vars, terms[begin].coeff);
    }
    // Slice terms by the exponent of `var` (terms are lex-sorted, so exponents
    // of earlier variables are constant within [begin, end) and exponents of
    // `var` are descending).
    MultiPoly acc = MultiPoly::zero(field, out_vars);
    std::uint32_t prev_exp = 0;
    bool first = true;
    std::size_t i = begin;
    while (i < end) {
        std::uint32_t e = terms[i].mono[var];
        std::size_t j = i;
        while (j < end && terms[j].mono[var] == e) ++j;
        MultiPoly coeff = compose_rec(terms, i, j, var + 1, linear_forms, field, out_vars);
        if (first) {
            acc = coeff;
            prev_exp = e;
            first = false;
        } else {
            for (std::uint32_t step = prev_exp; step > e; --step) acc = acc * linear_forms[var];
            acc = acc + coeff;
            prev_exp = e;
        }
        i = j;
    }
    for (std::uint32_t step = prev_exp; step > 0; --step) acc = acc * linear_forms[var];
    return acc;
}

} // namespace

MultiPoly substitute_affine(const MultiPoly& f, const AffineSubspace& a) {
    if (a.ambient_dim() != f.num_vars())
        throw DimensionMismatch("subspace lives in a different ambient space");
    if (a.field_modulus() != f.modulus()) throw MixedFields("subspace over a different field");
    Field field(f.modulus());
    const std::size_t n = f.num_vars();
    const std::size_t k = a.dim();

    // Linear form per ambient coordinate: v0_i + sum_j B[i][j] t_j.
    std::vector<MultiPoly> forms;
    forms.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<Term> ts;
        if (!a.base()[i].is_zero()) ts.push_back(Term{Monomial(k), a.base()[i]});
        for (std::size_t j = 0; j < k; ++j) {
            FieldElement c = a.basis_entry(i, j);
            if (c.is_zero()) continue;
            Monomial m(k);
            m[j] = 1;
            ts.push_back(Term{std::move(m), c});
        }
        forms.emplace_back(field, k, std::move(ts));
    }
    return compose_rec(f.terms(), 0, f.terms().size(), 0, forms, field, k);
}

} // namespace varsamp

#include "varsamp/unipoly.hpp"

#include <algorithm>

namespace varsamp {

UniPoly::UniPoly(const Field& field, std::vector<FieldElement> coeffs)
    : modulus_(field.modulus()), coeffs_(std::move(coeffs)) {
    for (FieldElement c : coeffs_)
        if (c.modulus() != modulus_) throw MixedFields("coefficient from a different field");
    trim();
}

UniPoly::UniPoly(const Field& field, std::initializer_list<std::uint64_t> coeffs)
    : modulus_(field.modulus()) {
    coeffs_.reserve(coeffs.size());
    for (std::uint64_t c : coeffs) coeffs_.push_back(field.element(c));
    trim();
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

FieldElement UniPoly::coeff(std::size_t i) const {
    return i < coeffs_.size() ? coeffs_[i] : Field(modulus_).zero();
}

FieldElement UniPoly::leading_coeff() const {
    if (coeffs_.empty()) throw ZeroPolynomial("leading coefficient of the zero polynomial");
    return coeffs_.back();
}

FieldElement UniPoly::eval(FieldElement x) const {
    Field f(modulus_);
    FieldElement acc = f.zero();
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    if (modulus_ != o.modulus_) throw MixedFields("polynomials over different fields");
    Field f(modulus_);
    std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) + o.coeff(i);
    return UniPoly(f, std::move(out));
}

UniPoly UniPoly::operator-(const UniPoly& o) const {
    if (modulus_ != o.modulus_) throw MixedFields("polynomials over different fields");
    Field f(modulus_);
    std::vector<FieldElement> out(std::max(coeffs_.size(), o.coeffs_.size()), f.zero());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = coeff(i) - o.coeff(i);
    return UniPoly(f, std::move(out));
}

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (modulus_ != o.modulus_) throw MixedFields("polynomials over different fields");
    Field f(modulus_);
    if (is_zero() || o.is_zero()) return UniPoly(f);
    std::vector<FieldElement> out(coeffs_.size() + o.coeffs_.size() - 1, f.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(f, std::move(out));
}

UniPoly UniPoly::scaled(FieldElement c) const {
    Field f(modulus_);
    if (c.is_zero()) return UniPoly(f);
    std::vector<FieldElement> out = coeffs_;
    for (FieldElement& x : out) x = x * c;
    return UniPoly(f, std::move(out));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return scaled(inv(leading_coeff()));
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& g) const {
    if (modulus_ != g.modulus_) throw MixedFields("polynomials over different fields");
    if (g.is_zero()) throw DivisionByZero("polynomial division by zero");
    Field f(modulus_);
    if (coeffs_.size() < g.coeffs_.size()) return {UniPoly(f), *this};

    std::vector<FieldElement> rem = coeffs_;
    const std::size_t dg = g.coeffs_.size() - 1;
    std::vector<FieldElement> quot(coeffs_.size() - dg, f.zero());
    FieldElement lead_inv = inv(g.coeffs_.back());
    for (std::size_t k = quot.size(); k-- > 0;) {
        FieldElement factor = rem[k + dg] * lead_inv;
        if (factor.is_zero()) continue;
        quot[k] = factor;
        for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= factor * g.coeffs_[j];
    }
    rem.resize(dg, f.zero());
    return {UniPoly(f, std::move(quot)), UniPoly(f, std::move(rem))};
}

UniPoly UniPoly::constant(const Field& field, FieldElement c) {
    return UniPoly(field, std::vector<FieldElement>{c});
}

UniPoly UniPoly::linear_shift(const Field& field, FieldElement shift) {
    return UniPoly(field, std::vector<FieldElement>{shift, field.one()});
}

UniPoly upoly_gcd(const UniPoly& a, const UniPoly& b) {
    if (a.modulus() != b.modulus()) throw MixedFields("polynomials over different fields");
    if (a.is_zero() && b.is_zero()) throw BothZero("gcd of two zero polynomials");
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& f) {
    return (a * b).divmod(f).second;
}

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& f) {
    if (f.is_zero() || f.degree() == 0)
        throw DivisionByZero("powmod modulus must have positive degree");
    Field fd(f.field());
    UniPoly result = UniPoly::constant(fd, fd.one()).divmod(f).second;
    UniPoly acc = base.divmod(f).second;
    while (e) {
        if (e & 1) result = mulmod(result, acc, f);
        acc = mulmod(acc, acc, f);
        e >>= 1;
    }
    return result;
}

} // namespace varsamp

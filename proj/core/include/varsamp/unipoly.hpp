#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "varsamp/field.hpp"

namespace varsamp {

/// Dense univariate polynomial over a prime field, coefficients lowest degree
/// first. The zero polynomial is the empty vector; otherwise the leading
/// coefficient is nonzero.
class UniPoly {
public:
    explicit UniPoly(const Field& field) : modulus_(field.modulus()) {}
    UniPoly(const Field& field, std::vector<FieldElement> coeffs);
    /// Convenience: coefficients as integers, reduced mod p.
    UniPoly(const Field& field, std::initializer_list<std::uint64_t> coeffs);

    std::uint64_t modulus() const noexcept { return modulus_; }
    Field field() const { return Field(modulus_); }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// Degree of the zero polynomial is 0 by the project-wide convention;
    /// callers test is_zero() first where the distinction matters.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    const std::vector<FieldElement>& coeffs() const noexcept { return coeffs_; }
    FieldElement coeff(std::size_t i) const;
    FieldElement leading_coeff() const;

    FieldElement eval(FieldElement x) const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly scaled(FieldElement c) const;
    UniPoly monic() const;

    /// Euclidean division: *this = q*g + r with deg r < deg g.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& g) const;

    friend bool operator==(const UniPoly& a, const UniPoly& b) noexcept {
        return a.modulus_ == b.modulus_ && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const UniPoly& a, const UniPoly& b) noexcept { return !(a == b); }

    static UniPoly zero(const Field& field) { return UniPoly(field); }
    static UniPoly constant(const Field& field, FieldElement c);
    /// x + shift
    static UniPoly linear_shift(const Field& field, FieldElement shift);
    static UniPoly x(const Field& field) { return linear_shift(field, field.zero()); }

private:
    void trim();

    std::uint64_t modulus_;
    std::vector<FieldElement> coeffs_;
};

/// Monic gcd; gcd(f, 0) is the monic scaling of f. Throws BothZero when both
/// inputs vanish.
UniPoly upoly_gcd(const UniPoly& a, const UniPoly& b);

/// a*b mod f (f nonconstant).
UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& f);

/// base^e mod f by square-and-multiply in the quotient ring.
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& f);

} // namespace varsamp

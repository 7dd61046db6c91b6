#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "varsamp/field.hpp"

namespace varsamp {

class AffineSubspace;
class UniPoly;

/// Exponent vector of one monomial. The length always equals the owning
/// polynomial's variable count.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::size_t num_vars) : exps_(num_vars, 0) {}
    Monomial(std::initializer_list<std::uint32_t> exps) : exps_(exps) {}
    explicit Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {}

    std::size_t num_vars() const noexcept { return exps_.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps_[i]; }
    std::uint32_t& operator[](std::size_t i) { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const noexcept { return exps_; }

    std::uint32_t degree() const noexcept {
        std::uint32_t d = 0;
        for (auto e : exps_) d += e;
        return d;
    }

    bool is_constant() const noexcept { return degree() == 0; }

    Monomial operator*(const Monomial& o) const;
    bool divides(const Monomial& o) const;
    /// Quotient o.divides(*this) must hold.
    Monomial divided_by(const Monomial& o) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    friend bool operator==(const Monomial& a, const Monomial& b) noexcept { return a.exps_ == b.exps_; }
    friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }

    /// Lexicographic order with variable 0 most significant.
    static bool lex_less(const Monomial& a, const Monomial& b) noexcept { return a.exps_ < b.exps_; }

private:
    std::vector<std::uint32_t> exps_;
};

struct Term {
    Monomial mono;
    FieldElement coeff;
};

/// Sparse n-variate polynomial over a prime field: a normalized list of
/// nonzero terms with distinct exponent vectors, kept sorted lex-descending
/// so the leading term is terms().front().
class MultiPoly {
public:
    MultiPoly(const Field& field, std::size_t num_vars)
        : modulus_(field.modulus()), num_vars_(num_vars) {}

    /// Builds and normalizes (merges duplicate monomials, drops zeros).
    MultiPoly(const Field& field, std::size_t num_vars, std::vector<Term> terms);

    std::size_t num_vars() const noexcept { return num_vars_; }
    std::uint64_t modulus() const noexcept { return modulus_; }
    Field field() const { return Field(modulus_); }
    bool is_zero() const noexcept { return terms_.empty(); }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    /// Zero polynomial has degree 0 by convention.
    std::uint32_t total_degree() const noexcept;

    const Term& leading_term() const;
    bool is_nonzero_constant() const noexcept {
        return terms_.size() == 1 && terms_[0].mono.is_constant();
    }

    FieldElement eval(const std::vector<FieldElement>& point) const;

    /// Fixes variable `var` to `value`; the result keeps the same variable
    /// count with exponent 0 in that slot.
    MultiPoly substitute_var(std::size_t var, FieldElement value) const;

    /// Conversion to a dense univariate polynomial; every term may use at most
    /// the single variable `var`.
    UniPoly to_unipoly(std::size_t var) const;

    MultiPoly operator+(const MultiPoly& o) const;
    MultiPoly operator-(const MultiPoly& o) const;
    MultiPoly operator*(const MultiPoly& o) const;
    MultiPoly operator-() const;
    MultiPoly scaled(FieldElement c) const;
    /// Multiplication by a single term (used heavily by elimination).
    MultiPoly times_term(const Term& t) const;

    friend bool operator==(const MultiPoly& a, const MultiPoly& b) noexcept;
    friend bool operator!=(const MultiPoly& a, const MultiPoly& b) noexcept { return !(a == b); }

    static MultiPoly zero(const Field& field, std::size_t num_vars) { return MultiPoly(field, num_vars); }
    static MultiPoly constant(const Field& field, std::size_t num_vars, FieldElement c);
    /// c * x_var^e
    static MultiPoly term(const Field& field, std::size_t num_vars, std::size_t var,
                          std::uint32_t e, FieldElement c);

private:
    void normalize();
    void check_compatible(const MultiPoly& o) const;

    std::uint64_t modulus_;
    std::size_t num_vars_;
    std::vector<Term> terms_;
};

/// g(t) = f(v0 + B t) for the subspace's parametrization; the result lives in
/// k variables (k = subspace dimension) and never gains total degree.
MultiPoly substitute_affine(const MultiPoly& f, const AffineSubspace& a);

} // namespace varsamp

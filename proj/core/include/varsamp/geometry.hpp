#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "varsamp/field.hpp"
#include "varsamp/rng.hpp"

namespace varsamp {

using BigInt = boost::multiprecision::cpp_int;

/// Parametrized k-dimensional affine subspace of F_q^n: the point set
/// { base + basis * t : t in F_q^k }. The basis columns are checked for
/// linear independence at construction. Distinct (base, basis) pairs may
/// describe the same point set; canonical_key() collapses that ambiguity.
class AffineSubspace {
public:
    AffineSubspace(std::vector<FieldElement> base, std::vector<std::vector<FieldElement>> basis_columns);

    std::size_t ambient_dim() const noexcept { return base_.size(); }
    std::size_t dim() const noexcept { return columns_.size(); }
    std::uint64_t field_modulus() const noexcept { return base_.empty() ? 0 : base_[0].modulus(); }

    const std::vector<FieldElement>& base() const noexcept { return base_; }
    const std::vector<FieldElement>& column(std::size_t j) const { return columns_[j]; }
    FieldElement basis_entry(std::size_t row, std::size_t col) const { return columns_[col][row]; }

    /// base + basis * t.
    std::vector<FieldElement> point_at(const std::vector<FieldElement>& t) const;

    /// Flattened reduced-column-echelon basis plus the lexicographically
    /// smallest coset representative; equal keys iff equal point sets.
    std::vector<std::uint64_t> canonical_key() const;

private:
    std::vector<FieldElement> base_;
    std::vector<std::vector<FieldElement>> columns_; // columns_[j][i] = B[i][j]
};

/// True iff x - base lies in the column span of the basis.
bool contains(const AffineSubspace& a, const std::vector<FieldElement>& x);

/// Uniformly random k-dimensional affine subspace (uniform over point sets).
/// Basis columns are drawn as a whole tuple and rejected until they are
/// linearly independent; the base point is uniform.
AffineSubspace sample_affine_subspace(const Field& field, std::size_t n, std::size_t k,
                                      RandomSource& rng);

/// Gaussian binomial: number of k-dimensional linear subspaces of F_q^n.
BigInt count_linear_subspaces(std::size_t n, std::size_t k, std::uint64_t q);

/// count_linear_subspaces(n, k, q) * q^(n-k).
BigInt count_affine_subspaces(std::size_t n, std::size_t k, std::uint64_t q);

/// Every affine k-subspace of F_q^n exactly once, in canonical form.
/// Guarded by the documented q^((k+1)n) <= cap bound.
std::vector<AffineSubspace> enumerate_affine_subspaces(const Field& field, std::size_t n,
                                                       std::size_t k,
                                                       std::uint64_t cap = (1ull << 27));

} // namespace varsamp

#pragma once

#include <cstdint>
#include <vector>

#include "varsamp/geometry.hpp"
#include "varsamp/poly.hpp"
#include "varsamp/rng.hpp"

namespace varsamp {

/// Hard cap on the number of defining polynomials; solving cost is
/// exponential in this co-dimension.
inline constexpr std::size_t MAX_K = 4;

/// Default cap on S-pair reductions per Groebner-basis run.
inline constexpr std::uint64_t DEFAULT_ELIMINATION_BUDGET = 1'000'000;

/// A system of k polynomials in n variables over one prime field,
/// 1 <= k <= n and k <= MAX_K.
class PolySystem {
public:
    PolySystem(const Field& field, std::size_t num_vars, std::vector<MultiPoly> polys);

    const Field& field() const noexcept { return field_; }
    std::size_t num_vars() const noexcept { return num_vars_; }
    std::size_t num_polys() const noexcept { return polys_.size(); }
    const std::vector<MultiPoly>& polys() const noexcept { return polys_; }
    /// Max total degree across the polynomials (0 when all are zero).
    std::uint32_t degree_bound() const noexcept { return degree_bound_; }

private:
    Field field_;
    std::size_t num_vars_;
    std::vector<MultiPoly> polys_;
    std::uint32_t degree_bound_;
};

struct IntersectionClass {
    enum class Kind { Empty, ZeroDim, PositiveDim };
    Kind kind;
    /// Populated only for ZeroDim: all rational common zeros, each verified
    /// against every input polynomial.
    std::vector<std::vector<FieldElement>> points;

    bool is_empty() const noexcept { return kind == Kind::Empty; }
    bool is_zero_dim() const noexcept { return kind == Kind::ZeroDim; }
    bool is_positive_dim() const noexcept { return kind == Kind::PositiveDim; }
};

/// Reduced, monic lexicographic Groebner basis (t_1 > t_2 > ... > t_k) of the
/// ideal generated by the system. The unit ideal yields {1}; the zero ideal
/// yields {}. Requires the system to already live in its own k coordinates
/// (num_vars == num_polys). Aborts with EliminationBudgetExceeded past the
/// S-pair budget.
std::vector<MultiPoly> lex_groebner(const PolySystem& sys,
                                    std::uint64_t budget = DEFAULT_ELIMINATION_BUDGET);

/// Zero-dimensionality test on a reduced lex basis: every variable must own a
/// basis element whose leading monomial is a pure power of it.
bool basis_is_zero_dimensional(const std::vector<MultiPoly>& basis, std::size_t num_vars);

/// Trichotomy for a k-polynomial, k-unknown system: no rational solutions
/// (Empty), finitely many over the closure with at least one rational point
/// (ZeroDim, with the full list), or positive-dimensional (PositiveDim).
IntersectionClass classify_intersection(const PolySystem& sys, RandomSource& rng,
                                        std::uint64_t budget = DEFAULT_ELIMINATION_BUDGET);
/// Same, with an internal fixed-seed source (the result is seed-independent).
IntersectionClass classify_intersection(const PolySystem& sys,
                                        std::uint64_t budget = DEFAULT_ELIMINATION_BUDGET);

/// All rational common zeros of a zero-dimensional system via back
/// substitution over the lex basis (t_k first), cross-checking every
/// completed candidate against the original polynomials. Throws
/// NotZeroDimensional when the system is not zero-dimensional with at least
/// one rational point.
std::vector<std::vector<FieldElement>> enumerate_solutions(
    const PolySystem& sys, RandomSource& rng,
    std::uint64_t budget = DEFAULT_ELIMINATION_BUDGET);

/// The k-variate system obtained by restricting every polynomial to the
/// subspace's parameter coordinates.
PolySystem restrict_to_subspace(const PolySystem& sys, const AffineSubspace& a);

} // namespace varsamp

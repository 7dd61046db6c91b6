#pragma once

#include <vector>

#include "varsamp/rng.hpp"
#include "varsamp/unipoly.hpp"

namespace varsamp {

/// x^p mod f, computed by square-and-multiply in F_p[x]/(f). Requires
/// deg(f) >= 1.
UniPoly powmod_x_q(const UniPoly& f, const Field& field);

/// The set of roots of f in F_p, each exactly once (multiplicities
/// discarded), returned sorted by value. First isolates the distinct-root
/// part via gcd(f, x^p - x), then splits it with random quadratic-residue
/// probes; odd p makes the exponent (p-1)/2 available.
///
/// Deterministic result for any seed; the rng only steers the internal
/// splitting order. Throws SplitStall if 64*deg(f) probe redraws all fail
/// to split (probability ~ 2^(-64 deg f)).
std::vector<FieldElement> roots_in_field(const UniPoly& f, const Field& field, RandomSource& rng);

} // namespace varsamp

#ifndef MAXPLUS_REPRESENTATION_HPP
#define MAXPLUS_REPRESENTATION_HPP

#include <optional>
#include <utility>

#include "maxplus/capacity.hpp"
#include "maxplus/functional.hpp"
#include "maxplus/integral.hpp"

namespace maxplus {

/// Largest M probed by reconstruct_capacity. e^{-64} sits far below every
/// tolerance in use; failure to stabilize by then is reported, never
/// silently truncated.
inline constexpr double kReconstructionMCap = 64.0;

/// The capacity-backed functional phi |-> maxplus_integral(c, phi). It is
/// normalized, monotone, comonotonically maxitive and plus-homogeneous.
Functional integral_functional(const Capacity& c);

/// Recovers the set function behind a functional: for each nonempty proper
/// subset A the infimum of e^{I(phi)} over functions that vanish on A and
/// stay below 0 is approached along the canonical two-valued members with
/// depth M doubling 1, 2, 4, ... until consecutive values differ by less
/// than tol. Values stabilizing below tol snap to 0; the empty and full
/// sets carry 0 and 1. Intended for functionals satisfying the four
/// functional axioms (not verified here; run property_report separately).
/// Throws ReconstructionError on non-stabilization at the M cap or when
/// the finished table is not monotone.
Capacity reconstruct_capacity(const Functional& i, double tol);

/// Max over subsets of |reconstruct(integral_functional(c)) - c|; the
/// round-trip deviation that witnesses uniqueness of the representing
/// capacity.
double roundtrip_check(const Capacity& c, double tol);

/// For a non-possibility capacity, a pair of two-valued functions whose
/// pointwise maximum integrates to strictly more than either integral,
/// certifying that the backed functional is not fully maxitive. Returns
/// nothing for possibility capacities.
std::optional<std::pair<RealFunction, RealFunction>> maxitivity_witness(const Capacity& c);

}  // namespace maxplus

#endif

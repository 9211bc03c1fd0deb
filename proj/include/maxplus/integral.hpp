#ifndef MAXPLUS_INTEGRAL_HPP
#define MAXPLUS_INTEGRAL_HPP

#include "maxplus/capacity.hpp"
#include "maxplus/space.hpp"

namespace maxplus {

/// The max-plus integral: max over t of ln(c(phi_t)) + t, with
/// ln(0) + t = NEG_INF. Since c(phi_t) is constant between consecutive
/// values of phi and each candidate grows with t, the maximum over all real
/// t is attained at a value phi takes, so only distinct values are scanned.
/// The result is always finite: t = min phi contributes ln(1) + min phi.
double maxplus_integral(const Capacity& c, const RealFunction& phi);

/// Brute-force check of the candidate-set reduction: the same maximum taken
/// over the grid {min phi, min phi + step, ..., max phi}, each level set
/// computed from scratch. Within `step` of maxplus_integral.
double maxplus_integral_grid_oracle(const Capacity& c, const RealFunction& phi, double step);

/// Choquet integral, exact over the sorted distinct values:
/// min phi + integral of c(phi_t) dt over [min phi, max phi].
double choquet_integral(const Capacity& c, const RealFunction& phi);

/// Sugeno integral for phi with values in [0,1]:
/// max over t in distinct values and 0 of min(t, c(phi_t)).
/// Throws RangeError when phi leaves [0,1].
double sugeno_integral(const Capacity& c, const RealFunction& phi);

}  // namespace maxplus

#endif

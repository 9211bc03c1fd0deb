#include "maxplus/integral.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>

namespace maxplus {

double maxplus_integral(const Capacity& c, const RealFunction& phi) {
    require_same_space(c.space(), phi.space(), "maxplus_integral");
    ExtendedReal best = ExtendedReal::neg_inf();
    for (double t : distinct_values(phi)) {
        const ExtendedReal candidate = log_extended(c(level_set(phi, t))) + t;
        best = max(best, candidate);
    }
    assert(best.is_finite());  // t = min phi always yields ln(1) + min phi
    return best.value();
}

double maxplus_integral_grid_oracle(const Capacity& c, const RealFunction& phi, double step) {
    require_same_space(c.space(), phi.space(), "maxplus_integral_grid_oracle");
    if (!(step > 0.0)) throw Error("maxplus_integral_grid_oracle: step must be positive");
    const double lo = phi.min_value();
    const double hi = phi.max_value();
    ExtendedReal best = ExtendedReal::neg_inf();
    long k = 0;
    for (;; ++k) {
        const double t = lo + static_cast<double>(k) * step;
        if (t > hi) break;
        best = max(best, log_extended(c(level_set(phi, t))) + t);
    }
    best = max(best, log_extended(c(level_set(phi, hi))) + hi);
    return best.value();
}

double choquet_integral(const Capacity& c, const RealFunction& phi) {
    require_same_space(c.space(), phi.space(), "choquet_integral");
    const std::vector<double> values = distinct_values(phi);
    // c(phi_t) equals c(phi_{v_{i+1}}) on (v_i, v_{i+1}], so the integral is
    // a finite sum.
    double total = values.front();
    for (std::size_t i = 0; i + 1 < values.size(); ++i)
        total += (values[i + 1] - values[i]) * c(level_set(phi, values[i + 1]));
    return total;
}

double sugeno_integral(const Capacity& c, const RealFunction& phi) {
    require_same_space(c.space(), phi.space(), "sugeno_integral");
    for (int x = 0; x < phi.size(); ++x)
        if (phi.value(x) < 0.0 || phi.value(x) > 1.0)
            throw RangeError("sugeno_integral: value at point " + std::to_string(x) +
                                 " outside [0,1]",
                             x);
    double best = 0.0;  // the t = 0 candidate: min(0, c(full)) = 0
    for (double t : distinct_values(phi))
        best = std::max(best, std::min(t, c(level_set(phi, t))));
    return best;
}

}  // namespace maxplus

#include "maxplus/representation.hpp"

#include <algorithm>
#include <cmath>

namespace maxplus {

Functional integral_functional(const Capacity& c) {
    return Functional(c.space(), FunctionalKind::capacity_backed, "maxplus-integral",
                      [c](const RealFunction& phi) { return maxplus_integral(c, phi); });
}

Capacity reconstruct_capacity(const Functional& i, double tol) {
    if (!(tol > 0.0)) throw Error("reconstruct_capacity: tol must be positive");
    const FiniteSpace& space = i.space();
    const std::uint32_t full = space.full_bits();
    std::vector<double> table(std::size_t{1} << space.size(), 0.0);
    table[full] = 1.0;
    for (std::uint32_t s = 1; s < full; ++s) {
        const Subset a(space, s);
        const auto sweep_value = [&](double m) { return std::exp(i(upsilon_member(a, 0.0, m))); };
        double previous = sweep_value(1.0);
        double current = previous;
        bool stabilized = false;
        for (double m = 2.0; m <= kReconstructionMCap; m *= 2.0) {
            current = sweep_value(m);
            if (std::abs(current - previous) < tol) {
                stabilized = true;
                break;
            }
            if (m < kReconstructionMCap) previous = current;
        }
        if (!stabilized)
            throw ReconstructionError(
                ReconstructionError::Kind::non_stabilization,
                "reconstruct_capacity: no stabilization at M cap for subset mask " +
                    std::to_string(s) + " (last values " + std::to_string(previous) + ", " +
                    std::to_string(current) + ")",
                s, 0, previous, current);
        if (current < tol) current = 0.0;  // detected c(A) = 0
        table[s] = std::clamp(current, 0.0, 1.0);
    }
    // A monotone functional yields a monotone table; anything else is
    // reported with the offending cover pair rather than returned.
    for (std::uint32_t s = 0; s <= full; ++s) {
        for (int x = 0; x < space.size(); ++x) {
            const std::uint32_t bit = 1u << x;
            if (s & bit) continue;
            if (table[s] > table[s | bit])
                throw ReconstructionError(
                    ReconstructionError::Kind::invalid_functional,
                    "reconstruct_capacity: reconstructed table not monotone between masks " +
                        std::to_string(s) + " and " + std::to_string(s | bit),
                    s, s | bit, table[s], table[s | bit]);
        }
    }
    return Capacity(space, std::move(table));
}

double roundtrip_check(const Capacity& c, double tol) {
    const Capacity back = reconstruct_capacity(integral_functional(c), tol);
    double worst = 0.0;
    for (std::uint32_t s = 0; s <= c.space().full_bits(); ++s)
        worst = std::max(worst, std::abs(back.at_bits(s) - c.at_bits(s)));
    return worst;
}

std::optional<std::pair<RealFunction, RealFunction>> maxitivity_witness(const Capacity& c) {
    const PossibilityCheck check = is_possibility(c);
    if (check.possibility) return std::nullopt;
    const auto& [a, b] = *check.witness;
    double min_positive = 1.0;
    for (std::uint32_t s = 1; s <= c.space().full_bits(); ++s)
        if (c.at_bits(s) > 0.0) min_positive = std::min(min_positive, c.at_bits(s));
    // Deep enough that the off-set value never competes with any positive
    // capacity value in the integrals.
    const double m = -std::log(std::max(1e-12, min_positive)) + 1.0;
    return std::make_pair(upsilon_member(a, 0.0, m), upsilon_member(b, 0.0, m));
}

}  // namespace maxplus

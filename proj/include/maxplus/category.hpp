#ifndef MAXPLUS_CATEGORY_HPP
#define MAXPLUS_CATEGORY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "maxplus/capacity.hpp"
#include "maxplus/functional.hpp"

namespace maxplus {

/// A finitely supported possibility capacity over densities on one base
/// space: weights in [0,1] with maximum exactly 1, one per support.
class FiniteSupportOuter {
public:
    FiniteSupportOuter(std::vector<double> weights, std::vector<PossibilityDensity> supports);

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<PossibilityDensity>& supports() const { return supports_; }
    const FiniteSpace& base_space() const { return supports_.front().space(); }
    std::size_t size() const { return supports_.size(); }

private:
    std::vector<double> weights_;
    std::vector<PossibilityDensity> supports_;
};

/// Depth-2 nesting: a finitely supported possibility capacity whose
/// supports are themselves finitely supported outers. Depth 2 is all the
/// associativity harness needs; deeper nests reduce to it.
class NestedSupportOuter {
public:
    NestedSupportOuter(std::vector<double> weights, std::vector<FiniteSupportOuter> supports);

    const std::vector<double>& weights() const { return weights_; }
    const std::vector<FiniteSupportOuter>& supports() const { return supports_; }
    const FiniteSpace& base_space() const { return supports_.front().base_space(); }
    std::size_t size() const { return supports_.size(); }

private:
    std::vector<double> weights_;
    std::vector<FiniteSupportOuter> supports_;
};

/// The functor action on functionals: psi |-> I(psi o f). Preserves the
/// four functional axioms.
Functional functional_pushforward(const Functional& i, const SpaceMap& f);

/// Composition psi o f as a function on f's domain.
RealFunction compose_with_map(const RealFunction& psi, const SpaceMap& f);

/// Max over sampled codomain functions psi of
/// |integral(pushforward(c,f), psi) - integral(c, psi o f)|. Zero when the
/// integral transform commutes with pushforward, which is the naturality
/// square for the capacity-to-functional map.
double naturality_check(const Capacity& c, const SpaceMap& f, long trials, std::uint64_t seed);

/// Monad multiplication on finite supports, closed form
/// F |-> max_i weight_i * c_i(F); equals the threshold form
/// max{ C(F_t) * t | t in (0,1] } because that max is attained at
/// t = c_i(F). The result is again a possibility capacity.
Capacity mu_possibility(const FiniteSupportOuter& outer);

/// Direct evaluation of the threshold form over the grid
/// {step, 2*step, ..., 1}: F_t collects the supports with c_i(F) >= t, the
/// outer weight of that set is maxed with t scaling. Within step of the
/// closed form; exact when the grid contains every c_i(F).
double mu_bruteforce_oracle(const FiniteSupportOuter& outer, const Subset& f, double grid_step);

/// Outer-level flattening: one layer with supports c_ji and merged weights
/// w_j * v_ji.
FiniteSupportOuter flatten_product(const NestedSupportOuter& nested);

/// Inner-level flattening: apply mu_possibility to each inner outer and
/// keep the outer weights.
FiniteSupportOuter collapse_inner(const NestedSupportOuter& nested);

struct LawCheck {
    std::string law;
    bool passed = true;
    long trials = 0;
    double max_deviation = 0.0;
    std::optional<long> failing_trial;
};

struct MonadLawReport {
    std::uint64_t seed = 0;
    long trials = 0;
    double tol = 0.0;
    LawCheck left_unit;
    LawCheck right_unit;
    LawCheck associativity;
    /// Nested structure behind the first associativity failure.
    std::optional<NestedSupportOuter> witness_outer;
    /// Flat structure behind the first unit-law failure.
    std::optional<FiniteSupportOuter> witness_flat;
    std::uint32_t witness_subset_bits = 0;

    bool all_passed() const {
        return left_unit.passed && right_unit.passed && associativity.passed;
    }
};

/// Seeded verification of the monad laws on finitely supported elements:
/// collapsing a one-support outer or the pointwise Dirac image of a density
/// returns that density's capacity, and the two ways of flattening a
/// depth-2 nest agree within 1e-12.
MonadLawReport monad_law_harness(const FiniteSpace& space, std::uint64_t seed, long trials);

}  // namespace maxplus

#endif

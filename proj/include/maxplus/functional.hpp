#ifndef MAXPLUS_FUNCTIONAL_HPP
#define MAXPLUS_FUNCTIONAL_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "maxplus/space.hpp"

namespace maxplus {

enum class FunctionalKind { capacity_backed, pushforward_composed, black_box };

/// A deterministic evaluator from functions on a fixed space to reals.
/// Capacity-backed and pushforward-composed functionals come from the
/// integral machinery; black boxes exist so the property checkers have
/// something to falsify.
class Functional {
public:
    Functional(FiniteSpace space, FunctionalKind kind, std::string label,
               std::function<double(const RealFunction&)> eval);

    double operator()(const RealFunction& phi) const;

    const FiniteSpace& space() const { return space_; }
    FunctionalKind kind() const { return kind_; }
    const std::string& label() const { return label_; }

private:
    FiniteSpace space_;
    FunctionalKind kind_;
    std::string label_;
    std::function<double(const RealFunction&)> eval_;
};

/// Canonical member of Upsilon^t_A, the functions bounded above by t that
/// equal t on A: value t on A and t - M elsewhere. For empty A the family
/// is unconstrained and the constant t - M is returned. It lies below every
/// member of the family that stays above t - M.
RealFunction upsilon_member(const Subset& a, double t, double m);

/// Lowers psi in Upsilon^t_{phi_t} to psi'(x) = min{psi(y) | phi(y) >= phi(x)}.
/// The result stays in the family, drops below psi, is comonotone with phi
/// and is constant wherever phi is constant. Preconditions (t a value of
/// phi; psi <= t everywhere and = t on the level set) are checked and
/// violations throw PreconditionError with the offending point.
RealFunction refine_comonotone(const RealFunction& phi, double t, const RealFunction& psi);

/// Seeded comonotone pair: a random weak order on points (integer draws,
/// so ties occur), then two functions nondecreasing with respect to it,
/// each built by sorting independent uniforms.
std::pair<RealFunction, RealFunction> generate_comonotone_pair(const FiniteSpace& space,
                                                               std::uint64_t seed);

/// Seeded function with independent uniform values in [lo, hi).
RealFunction random_function(const FiniteSpace& space, std::uint64_t seed, double lo, double hi);

/// Concrete inputs that re-evaluate as a violation of a failed property.
struct PropertyWitness {
    long trial = 0;
    std::vector<RealFunction> inputs;
    std::optional<double> shift;
    double lhs = 0.0;
    double rhs = 0.0;
    double deviation = 0.0;
};

struct PropertyCheck {
    std::string property;
    bool passed = true;
    long trials = 0;
    double max_deviation = 0.0;
    std::optional<PropertyWitness> witness;
};

/// Verdicts for the four functional axioms plus full maxitivity, which is
/// reported separately: it holds exactly for possibility capacities and is
/// not part of the axiom set.
struct PropertyReport {
    std::uint64_t seed = 0;
    long trials = 0;
    double tol = 0.0;
    PropertyCheck normalized;
    PropertyCheck monotone;
    PropertyCheck plus_homogeneous;
    PropertyCheck comonotone_maxitive;
    PropertyCheck fully_maxitive;

    bool axioms_pass() const {
        return normalized.passed && monotone.passed && plus_homogeneous.passed &&
               comonotone_maxitive.passed;
    }
};

/// Samples seeded inputs and checks each property at absolute tolerance
/// `tol`. Failures are verdicts carrying the first failing trial's inputs,
/// not errors.
PropertyReport property_report(const Functional& i, long trials, std::uint64_t seed, double tol);

/// Value grid for exhaustive sweeps on small spaces.
inline constexpr std::array<double, 5> kSmallValueGrid{-1.0, -0.5, 0.0, 0.5, 1.0};

/// Every function on `space` with values from kSmallValueGrid. Meant for
/// spaces of size <= 3 (125 functions); larger spaces are refused.
std::vector<RealFunction> all_grid_functions(const FiniteSpace& space);

}  // namespace maxplus

#endif

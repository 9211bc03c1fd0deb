#include "maxplus/category.hpp"

#include <algorithm>
#include <cmath>

#include "maxplus/integral.hpp"
#include "maxplus/rng.hpp"

namespace maxplus {

namespace {

void check_outer_weights(const std::vector<double>& weights, std::size_t supports) {
    if (supports == 0) throw Error("outer: supports must be nonempty");
    if (weights.size() != supports) throw Error("outer: expected one weight per support");
    double top = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0 && w <= 1.0)) throw Error("outer: weight outside [0,1]");
        top = std::max(top, w);
    }
    if (top != 1.0) throw Error("outer: maximum weight must equal 1 exactly");
}

}  // namespace

FiniteSupportOuter::FiniteSupportOuter(std::vector<double> weights,
                                       std::vector<PossibilityDensity> supports)
    : weights_(std::move(weights)), supports_(std::move(supports)) {
    check_outer_weights(weights_, supports_.size());
    for (const PossibilityDensity& d : supports_)
        require_same_space(supports_.front().space(), d.space(), "FiniteSupportOuter");
}

NestedSupportOuter::NestedSupportOuter(std::vector<double> weights,
                                       std::vector<FiniteSupportOuter> supports)
    : weights_(std::move(weights)), supports_(std::move(supports)) {
    check_outer_weights(weights_, supports_.size());
    for (const FiniteSupportOuter& o : supports_)
        require_same_space(supports_.front().base_space(), o.base_space(), "NestedSupportOuter");
}

RealFunction compose_with_map(const RealFunction& psi, const SpaceMap& f) {
    require_same_space(psi.space(), f.codomain(), "compose_with_map");
    std::vector<double> values(static_cast<std::size_t>(f.domain().size()));
    for (int x = 0; x < f.domain().size(); ++x)
        values[static_cast<std::size_t>(x)] = psi.value(f(x));
    return RealFunction(f.domain(), std::move(values));
}

Functional functional_pushforward(const Functional& i, const SpaceMap& f) {
    require_same_space(i.space(), f.domain(), "functional_pushforward");
    return Functional(f.codomain(), FunctionalKind::pushforward_composed,
                      i.label() + " o (- o f)", [i, f](const RealFunction& psi) {
                          return i(compose_with_map(psi, f));
                      });
}

double naturality_check(const Capacity& c, const SpaceMap& f, long trials, std::uint64_t seed) {
    require_same_space(c.space(), f.domain(), "naturality_check");
    const Capacity pushed = pushforward(c, f);
    double worst = 0.0;
    for (long trial = 0; trial < trials; ++trial) {
        const RealFunction psi =
            random_function(f.codomain(), mix_seed(seed, static_cast<std::uint64_t>(trial)),
                            -2.0, 2.0);
        const double lhs = maxplus_integral(pushed, psi);
        const double rhs = maxplus_integral(c, compose_with_map(psi, f));
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

Capacity mu_possibility(const FiniteSupportOuter& outer) {
    const FiniteSpace& space = outer.base_space();
    std::vector<Capacity> inner;
    inner.reserve(outer.size());
    for (const PossibilityDensity& d : outer.supports()) inner.push_back(possibility_capacity(d));
    const std::size_t entries = std::size_t{1} << space.size();
    std::vector<double> table(entries, 0.0);
    for (std::uint32_t s = 0; s < entries; ++s) {
        double v = 0.0;
        for (std::size_t j = 0; j < inner.size(); ++j)
            v = std::max(v, outer.weights()[j] * inner[j].at_bits(s));
        table[s] = v;
    }
    return Capacity(space, std::move(table));
}

double mu_bruteforce_oracle(const FiniteSupportOuter& outer, const Subset& f, double grid_step) {
    require_same_space(outer.base_space(), f.space(), "mu_bruteforce_oracle");
    if (!(grid_step > 0.0)) throw Error("mu_bruteforce_oracle: grid step must be positive");
    std::vector<double> member_values(outer.size());
    for (std::size_t j = 0; j < outer.size(); ++j)
        member_values[j] = possibility_capacity(outer.supports()[j])(f);
    const auto threshold_candidate = [&](double t) {
        double outer_weight = 0.0;  // outer capacity of {c_j | c_j(F) >= t}
        for (std::size_t j = 0; j < outer.size(); ++j)
            if (member_values[j] >= t) outer_weight = std::max(outer_weight, outer.weights()[j]);
        return outer_weight * t;
    };
    double best = 0.0;
    for (long k = 1;; ++k) {
        const double t = static_cast<double>(k) * grid_step;
        if (t > 1.0) break;
        best = std::max(best, threshold_candidate(t));
    }
    best = std::max(best, threshold_candidate(1.0));
    return best;
}

FiniteSupportOuter flatten_product(const NestedSupportOuter& nested) {
    std::vector<double> weights;
    std::vector<PossibilityDensity> supports;
    for (std::size_t j = 0; j < nested.size(); ++j) {
        const FiniteSupportOuter& inner = nested.supports()[j];
        for (std::size_t i = 0; i < inner.size(); ++i) {
            weights.push_back(nested.weights()[j] * inner.weights()[i]);
            supports.push_back(inner.supports()[i]);
        }
    }
    return FiniteSupportOuter(std::move(weights), std::move(supports));
}

FiniteSupportOuter collapse_inner(const NestedSupportOuter& nested) {
    std::vector<PossibilityDensity> supports;
    supports.reserve(nested.size());
    for (const FiniteSupportOuter& inner : nested.supports())
        supports.push_back(density_of(mu_possibility(inner)));
    return FiniteSupportOuter(nested.weights(), std::move(supports));
}

namespace {

void record_law(LawCheck& check, long trial, double deviation, double tol) {
    ++check.trials;
    check.max_deviation = std::max(check.max_deviation, deviation);
    if (deviation > tol && !check.failing_trial) {
        check.passed = false;
        check.failing_trial = trial;
    }
}

PossibilityDensity dyadic_density(const FiniteSpace& space, Rng& rng) {
    // Weights on the 1/8 lattice so every product in the laws is exact.
    std::vector<double> weights(static_cast<std::size_t>(space.size()));
    for (double& w : weights) w = static_cast<double>(rng.uniform_int(9)) / 8.0;
    weights[static_cast<std::size_t>(rng.uniform_int(space.size()))] = 1.0;
    return PossibilityDensity(space, std::move(weights));
}

std::vector<double> outer_weights(std::size_t count, Rng& rng) {
    std::vector<double> weights(count);
    for (double& w : weights) w = static_cast<double>(rng.uniform_int(9)) / 8.0;
    weights[static_cast<std::size_t>(rng.uniform_int(static_cast<int>(count)))] = 1.0;
    return weights;
}

}  // namespace

MonadLawReport monad_law_harness(const FiniteSpace& space, std::uint64_t seed, long trials) {
    if (trials < 1) throw Error("monad_law_harness: trials must be at least 1");
    MonadLawReport report;
    report.seed = seed;
    report.trials = trials;
    report.tol = 1e-12;
    report.left_unit.law = "left_unit";
    report.right_unit.law = "right_unit";
    report.associativity.law = "associativity";

    const std::uint32_t full = space.full_bits();
    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));
        const PossibilityDensity d = dyadic_density(space, rng);
        const Capacity direct = possibility_capacity(d);

        // Left unit: the one-point outer concentrated on d collapses to d.
        {
            FiniteSupportOuter eta_outer({1.0}, {d});
            const Capacity collapsed = mu_possibility(eta_outer);
            double deviation = 0.0;
            for (std::uint32_t s = 0; s <= full; ++s)
                deviation = std::max(deviation, std::abs(collapsed.at_bits(s) - direct.at_bits(s)));
            record_law(report.left_unit, trial, deviation, report.tol);
            if (!report.left_unit.passed && !report.witness_flat)
                report.witness_flat = std::move(eta_outer);
        }

        // Right unit: the image of d under the pointwise Dirac embedding
        // collapses back to d.
        {
            std::vector<double> weights(d.weights());
            std::vector<PossibilityDensity> supports;
            for (int x = 0; x < space.size(); ++x) {
                std::vector<double> indicator(static_cast<std::size_t>(space.size()), 0.0);
                indicator[static_cast<std::size_t>(x)] = 1.0;
                supports.emplace_back(space, std::move(indicator));
            }
            FiniteSupportOuter eta_image(std::move(weights), std::move(supports));
            const Capacity collapsed = mu_possibility(eta_image);
            double deviation = 0.0;
            for (std::uint32_t s = 0; s <= full; ++s)
                deviation = std::max(deviation, std::abs(collapsed.at_bits(s) - direct.at_bits(s)));
            record_law(report.right_unit, trial, deviation, report.tol);
            if (!report.right_unit.passed && !report.witness_flat)
                report.witness_flat = std::move(eta_image);
        }

        // Associativity on a random depth-2 nest: collapsing inner levels
        // first agrees with flattening the outer level first.
        {
            const int outer_count = 1 + rng.uniform_int(4);
            std::vector<FiniteSupportOuter> inners;
            for (int j = 0; j < outer_count; ++j) {
                const int inner_count = 1 + rng.uniform_int(4);
                std::vector<PossibilityDensity> densities;
                for (int i = 0; i < inner_count; ++i) densities.push_back(dyadic_density(space, rng));
                std::vector<double> inner_weights = outer_weights(densities.size(), rng);
                inners.emplace_back(std::move(inner_weights), std::move(densities));
            }
            std::vector<double> nest_weights = outer_weights(inners.size(), rng);
            NestedSupportOuter nested(std::move(nest_weights), std::move(inners));
            const Capacity via_inner = mu_possibility(collapse_inner(nested));
            const Capacity via_outer = mu_possibility(flatten_product(nested));
            double deviation = 0.0;
            std::uint32_t worst_bits = 0;
            for (std::uint32_t s = 0; s <= full; ++s) {
                const double gap = std::abs(via_inner.at_bits(s) - via_outer.at_bits(s));
                if (gap > deviation) {
                    deviation = gap;
                    worst_bits = s;
                }
            }
            record_law(report.associativity, trial, deviation, report.tol);
            if (!report.associativity.passed && !report.witness_outer) {
                report.witness_outer = std::move(nested);
                report.witness_subset_bits = worst_bits;
            }
        }
    }
    return report;
}

}  // namespace maxplus

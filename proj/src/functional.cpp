#include "maxplus/functional.hpp"

#include <algorithm>
#include <cmath>

#include "maxplus/rng.hpp"

namespace maxplus {

Functional::Functional(FiniteSpace space, FunctionalKind kind, std::string label,
                       std::function<double(const RealFunction&)> eval)
    : space_(std::move(space)), kind_(kind), label_(std::move(label)), eval_(std::move(eval)) {
    if (!eval_) throw Error("Functional: missing evaluator");
}

double Functional::operator()(const RealFunction& phi) const {
    require_same_space(space_, phi.space(), "Functional::operator()");
    return eval_(phi);
}

RealFunction upsilon_member(const Subset& a, double t, double m) {
    if (!(m > 0.0)) throw Error("upsilon_member: M must be positive");
    const FiniteSpace& space = a.space();
    std::vector<double> values(static_cast<std::size_t>(space.size()), t - m);
    for (int x = 0; x < space.size(); ++x)
        if (a.contains(x)) values[static_cast<std::size_t>(x)] = t;
    return RealFunction(space, std::move(values));
}

RealFunction refine_comonotone(const RealFunction& phi, double t, const RealFunction& psi) {
    require_same_space(phi.space(), psi.space(), "refine_comonotone");
    const int n = phi.size();
    bool t_attained = false;
    for (int x = 0; x < n; ++x) t_attained = t_attained || phi.value(x) == t;
    if (!t_attained)
        throw PreconditionError("refine_comonotone: t is not a value of phi");
    for (int x = 0; x < n; ++x) {
        if (psi.value(x) > t)
            throw PreconditionError("refine_comonotone: psi exceeds t at point " +
                                        std::to_string(x),
                                    x);
        if (phi.value(x) >= t && psi.value(x) != t)
            throw PreconditionError(
                "refine_comonotone: psi must equal t on the level set, point " +
                    std::to_string(x),
                x);
    }
    std::vector<double> values(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x) {
        double lowest = psi.value(x);  // x belongs to its own upper set
        for (int y = 0; y < n; ++y)
            if (phi.value(y) >= phi.value(x)) lowest = std::min(lowest, psi.value(y));
        values[static_cast<std::size_t>(x)] = lowest;
    }
    return RealFunction(phi.space(), std::move(values));
}

namespace {

RealFunction draw_on_ranks(const FiniteSpace& space, const std::vector<int>& rank,
                           int classes, Rng& rng) {
    std::vector<double> levels(static_cast<std::size_t>(classes));
    for (double& v : levels) v = rng.uniform(-1.0, 1.0);
    std::sort(levels.begin(), levels.end());
    std::vector<double> values(static_cast<std::size_t>(space.size()));
    for (int x = 0; x < space.size(); ++x)
        values[static_cast<std::size_t>(x)] = levels[static_cast<std::size_t>(rank[x])];
    return RealFunction(space, std::move(values));
}

}  // namespace

std::pair<RealFunction, RealFunction> generate_comonotone_pair(const FiniteSpace& space,
                                                               std::uint64_t seed) {
    Rng rng(seed);
    const int n = space.size();
    // Integer draws over 0..n-1 make tied classes common, so the emitted
    // functions are non-injective with positive frequency.
    std::vector<int> base(static_cast<std::size_t>(n));
    for (int& b : base) b = rng.uniform_int(n);
    std::vector<int> order(base);
    std::sort(order.begin(), order.end());
    order.erase(std::unique(order.begin(), order.end()), order.end());
    std::vector<int> rank(static_cast<std::size_t>(n));
    for (int x = 0; x < n; ++x)
        rank[x] = static_cast<int>(std::lower_bound(order.begin(), order.end(), base[x]) -
                                   order.begin());
    const int classes = static_cast<int>(order.size());
    RealFunction first = draw_on_ranks(space, rank, classes, rng);
    RealFunction second = draw_on_ranks(space, rank, classes, rng);
    // the common weak order guarantees this; enforce it on every pair anyway
    if (!comonotonic(first, second))
        throw Error("generate_comonotone_pair: emitted a non-comonotone pair");
    return {std::move(first), std::move(second)};
}

RealFunction random_function(const FiniteSpace& space, std::uint64_t seed, double lo, double hi) {
    Rng rng(seed);
    std::vector<double> values(static_cast<std::size_t>(space.size()));
    for (double& v : values) v = rng.uniform(lo, hi);
    return RealFunction(space, std::move(values));
}

namespace {

void record(PropertyCheck& check, long trial, double lhs, double rhs, double deviation,
            double tol, std::vector<RealFunction> inputs, std::optional<double> shift) {
    ++check.trials;
    check.max_deviation = std::max(check.max_deviation, deviation);
    if (deviation > tol && !check.witness) {
        check.passed = false;
        check.witness = PropertyWitness{trial, std::move(inputs), shift, lhs, rhs, deviation};
    }
}

}  // namespace

PropertyReport property_report(const Functional& i, long trials, std::uint64_t seed, double tol) {
    if (trials < 1) throw Error("property_report: trials must be at least 1");
    const FiniteSpace& space = i.space();
    PropertyReport report;
    report.seed = seed;
    report.trials = trials;
    report.tol = tol;
    report.normalized.property = "normalized";
    report.monotone.property = "monotone";
    report.plus_homogeneous.property = "plus_homogeneous";
    report.comonotone_maxitive.property = "comonotone_maxitive";
    report.fully_maxitive.property = "fully_maxitive";

    for (long trial = 0; trial < trials; ++trial) {
        Rng rng(mix_seed(seed, static_cast<std::uint64_t>(trial)));

        {
            const double gamma = rng.uniform(-5.0, 5.0);
            const RealFunction constant = RealFunction::constant(space, gamma);
            const double lhs = i(constant);
            record(report.normalized, trial, lhs, gamma, std::abs(lhs - gamma), tol, {constant},
                   gamma);
        }
        {
            RealFunction f = random_function(space, rng.next(), -2.0, 2.0);
            std::vector<double> raised(f.values());
            for (double& v : raised) v += rng.uniform(0.0, 2.0);
            RealFunction g(space, std::move(raised));
            const double lhs = i(f);
            const double rhs = i(g);
            record(report.monotone, trial, lhs, rhs, std::max(0.0, lhs - rhs), tol,
                   {std::move(f), std::move(g)}, std::nullopt);
        }
        {
            RealFunction f = random_function(space, rng.next(), -2.0, 2.0);
            const double gamma = rng.uniform(-5.0, 5.0);
            const double lhs = i(f.shifted(gamma));
            const double rhs = i(f) + gamma;
            record(report.plus_homogeneous, trial, lhs, rhs, std::abs(lhs - rhs), tol,
                   {std::move(f)}, gamma);
        }
        {
            auto [phi, psi] = generate_comonotone_pair(space, rng.next());
            const double lhs = i(pointwise_max(phi, psi));
            const double rhs = std::max(i(phi), i(psi));
            record(report.comonotone_maxitive, trial, lhs, rhs, std::abs(lhs - rhs), tol,
                   {std::move(phi), std::move(psi)}, std::nullopt);
        }
        {
            RealFunction f = random_function(space, rng.next(), -2.0, 2.0);
            RealFunction g = random_function(space, rng.next(), -2.0, 2.0);
            const double lhs = i(pointwise_max(f, g));
            const double rhs = std::max(i(f), i(g));
            record(report.fully_maxitive, trial, lhs, rhs, std::abs(lhs - rhs), tol,
                   {std::move(f), std::move(g)}, std::nullopt);
        }
    }
    return report;
}

std::vector<RealFunction> all_grid_functions(const FiniteSpace& space) {
    if (space.size() > 3) throw Error("all_grid_functions: space too large for exhaustion");
    const int n = space.size();
    const int grid = static_cast<int>(kSmallValueGrid.size());
    long total = 1;
    for (int x = 0; x < n; ++x) total *= grid;
    std::vector<RealFunction> out;
    out.reserve(static_cast<std::size_t>(total));
    for (long code = 0; code < total; ++code) {
        long rest = code;
        std::vector<double> values(static_cast<std::size_t>(n));
        for (int x = 0; x < n; ++x) {
            values[static_cast<std::size_t>(x)] = kSmallValueGrid[rest % grid];
            rest /= grid;
        }
        out.emplace_back(space, std::move(values));
    }
    return out;
}

}  // namespace maxplus

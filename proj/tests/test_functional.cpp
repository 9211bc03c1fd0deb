#include <doctest.h>

#include <cmath>
#include <set>

#include "maxplus/functional.hpp"
#include "maxplus/integral.hpp"
#include "maxplus/representation.hpp"
#include "maxplus/rng.hpp"

using namespace maxplus;

namespace {

bool refines(const RealFunction& coarse, const RealFunction& fine) {
    // constant wherever `fine` is constant
    for (int x = 0; x < fine.size(); ++x)
        for (int y = 0; y < fine.size(); ++y)
            if (fine.value(x) == fine.value(y) && coarse.value(x) != coarse.value(y)) return false;
    return true;
}

void check_refinement_postconditions(const RealFunction& phi, double t,
                                     const RealFunction& psi) {
    const RealFunction refined = refine_comonotone(phi, t, psi);
    REQUIRE(pointwise_leq(refined, psi));
    const Subset level = level_set(phi, t);
    for (int x = 0; x < phi.size(); ++x) {
        REQUIRE(refined.value(x) <= t);
        if (level.contains(x)) REQUIRE(refined.value(x) == t);
    }
    REQUIRE(comonotonic(refined, phi));
    REQUIRE(refines(refined, phi));
}

}  // namespace

TEST_CASE("upsilon_member construction") {
    FiniteSpace two(2);
    CHECK(upsilon_member(Subset::full(two), 0.3, 5.0) == RealFunction::constant(two, 0.3));
    CHECK(upsilon_member(Subset::singleton(two, 0), 0.0, 10.0) ==
          RealFunction(two, {0.0, -10.0}));
    CHECK(upsilon_member(Subset::empty(two), 1.0, 4.0) == RealFunction::constant(two, -3.0));
    CHECK_THROWS_AS(upsilon_member(Subset::full(two), 0.0, 0.0), Error);

    FiniteSpace space(5);
    Rng rng(99);
    for (int trial = 0; trial < 200; ++trial) {
        Subset a(space, static_cast<std::uint32_t>(rng.next()) & space.full_bits());
        const double t = rng.uniform(-2.0, 2.0);
        const double m = rng.uniform(0.5, 8.0);
        RealFunction member = upsilon_member(a, t, m);
        for (int x = 0; x < space.size(); ++x) {
            CHECK(member.value(x) <= t);
            if (a.contains(x)) CHECK(member.value(x) == t);
        }
        // pointwise nonincreasing in M
        CHECK(pointwise_leq(upsilon_member(a, t, m + 1.0), member));
    }
}

TEST_CASE("integral of upsilon members stabilizes at ln c(A)") {
    FiniteSpace space(4);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Capacity c = random_capacity(space, mix_seed(500, seed));
        Functional i = integral_functional(c);
        Rng rng(mix_seed(501, seed));
        Subset a(space, 1u + static_cast<std::uint32_t>(rng.next()) % space.full_bits());
        double previous = i(upsilon_member(a, 0.0, 1.0));
        for (double m = 2.0; m <= 64.0; m *= 2.0) {
            const double current = i(upsilon_member(a, 0.0, m));
            CHECK(current <= previous + 1e-15);
            previous = current;
        }
        const double ca = c(a);
        if (ca > 0.0) {
            const double deep = -std::log(ca) + 1.0;
            CHECK(i(upsilon_member(a, 0.0, deep)) == doctest::Approx(std::log(ca)).epsilon(1e-12));
            CHECK(i(upsilon_member(a, 0.0, 2.0 * deep)) ==
                  doctest::Approx(std::log(ca)).epsilon(1e-12));
        }
    }
}

TEST_CASE("refine_comonotone worked example") {
    FiniteSpace three(3);
    RealFunction phi(three, {0.0, 1.0, 2.0});
    RealFunction psi(three, {1.5, 0.5, 2.0});
    CHECK(refine_comonotone(phi, 2.0, psi) == RealFunction(three, {0.5, 0.5, 2.0}));

    // already comonotone and refining: the operation is the identity
    RealFunction tame(three, {-1.0, -1.0, 2.0});
    CHECK(refine_comonotone(phi, 2.0, tame) == tame);
    RealFunction once = refine_comonotone(phi, 2.0, psi);
    CHECK(refine_comonotone(phi, 2.0, once) == once);

    // constant phi forces psi == t, and the refinement stays there
    RealFunction flat = RealFunction::constant(three, 0.5);
    CHECK(refine_comonotone(flat, 0.5, flat) == flat);
}

TEST_CASE("refine_comonotone preconditions") {
    FiniteSpace three(3);
    RealFunction phi(three, {0.0, 1.0, 2.0});
    CHECK_THROWS_AS(refine_comonotone(phi, 1.5, RealFunction(three, {0.0, 0.0, 1.5})),
                    PreconditionError);  // t not a value of phi
    try {
        refine_comonotone(phi, 2.0, RealFunction(three, {2.5, 0.0, 2.0}));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(e.point == 0);  // psi exceeds t there
    }
    try {
        refine_comonotone(phi, 1.0, RealFunction(three, {0.0, 1.0, 0.5}));
        FAIL("expected a precondition error");
    } catch (const PreconditionError& e) {
        CHECK(e.point == 2);  // on the level set but psi != t
    }
}

TEST_CASE("refine_comonotone postconditions on random inputs") {
    for (int size = 2; size <= 6; ++size) {
        FiniteSpace space(size);
        for (std::uint64_t seed = 0; seed < 400; ++seed) {
            RealFunction phi = random_function(space, mix_seed(600 + size, seed), -2.0, 2.0);
            Rng rng(mix_seed(700 + size, seed));
            const double t = phi.value(rng.uniform_int(size));
            const Subset level = level_set(phi, t);
            std::vector<double> psi_values(static_cast<std::size_t>(size));
            for (int x = 0; x < size; ++x)
                psi_values[static_cast<std::size_t>(x)] =
                    level.contains(x) ? t : t - rng.uniform(0.0, 3.0);
            check_refinement_postconditions(phi, t, RealFunction(space, psi_values));
        }
    }
}

TEST_CASE("refine_comonotone exhaustive on a size-3 grid") {
    FiniteSpace three(3);
    for (const RealFunction& phi : all_grid_functions(three)) {
        for (double t : distinct_values(phi)) {
            const Subset level = level_set(phi, t);
            // enumerate psi in the family with off-level values on the grid
            std::vector<int> free_points;
            for (int x = 0; x < 3; ++x)
                if (!level.contains(x)) free_points.push_back(x);
            std::vector<double> options;
            for (double v : kSmallValueGrid)
                if (v <= t) options.push_back(v);
            std::size_t combos = 1;
            for (std::size_t k = 0; k < free_points.size(); ++k) combos *= options.size();
            for (std::size_t code = 0; code < combos; ++code) {
                std::vector<double> psi_values(3, t);
                std::size_t rest = code;
                for (int x : free_points) {
                    psi_values[static_cast<std::size_t>(x)] = options[rest % options.size()];
                    rest /= options.size();
                }
                check_refinement_postconditions(phi, t, RealFunction(three, psi_values));
            }
        }
    }
}

TEST_CASE("generate_comonotone_pair") {
    long tied = 0;
    for (int size = 2; size <= 6; ++size) {
        FiniteSpace space(size);
        for (std::uint64_t seed = 0; seed < 2000; ++seed) {
            auto [phi, psi] = generate_comonotone_pair(space, mix_seed(800 + size, seed));
            CHECK(comonotonic(phi, psi));
            if (static_cast<int>(distinct_values(phi).size()) < size) ++tied;
        }
    }
    CHECK(tied > 0);  // ties occur with positive frequency

    FiniteSpace four(4);
    auto [a1, a2] = generate_comonotone_pair(four, 123);
    auto [b1, b2] = generate_comonotone_pair(four, 123);
    CHECK(a1 == b1);
    CHECK(a2 == b2);
}

TEST_CASE("property_report passes the axioms for integral functionals") {
    for (int size = 2; size <= 4; ++size) {
        FiniteSpace space(size);
        for (std::uint64_t seed = 0; seed < 10; ++seed) {
            Capacity c = random_capacity(space, mix_seed(900 + size, seed));
            PropertyReport report = property_report(integral_functional(c), 300, seed, 1e-9);
            CHECK(report.normalized.passed);
            CHECK(report.monotone.passed);
            CHECK(report.plus_homogeneous.passed);
            CHECK(report.comonotone_maxitive.passed);
            CHECK(report.axioms_pass());
        }
    }
}

TEST_CASE("full maxitivity is reported separately and tracks possibility") {
    FiniteSpace two(2);
    Capacity possibility = possibility_capacity(PossibilityDensity(two, {1.0, 0.25}));
    PropertyReport on_possibility =
        property_report(integral_functional(possibility), 1000, 4, 1e-9);
    CHECK(on_possibility.fully_maxitive.passed);

    Capacity plain = validate_capacity(two, {0.0, 0.5, 0.25, 1.0});
    PropertyReport on_plain = property_report(integral_functional(plain), 1000, 4, 1e-9);
    CHECK(on_plain.axioms_pass());  // failing full maxitivity is not an axiom violation
    CHECK_FALSE(on_plain.fully_maxitive.passed);
    REQUIRE(on_plain.fully_maxitive.witness.has_value());
    const PropertyWitness& w = *on_plain.fully_maxitive.witness;
    Functional i = integral_functional(plain);
    CHECK(std::abs(i(pointwise_max(w.inputs[0], w.inputs[1])) -
                   std::max(i(w.inputs[0]), i(w.inputs[1]))) > 1e-9);
}

TEST_CASE("black box max+min fails plus-homogeneity with a live witness") {
    FiniteSpace three(3);
    Functional box(three, FunctionalKind::black_box, "max_plus_min",
                   [](const RealFunction& phi) { return phi.max_value() + phi.min_value(); });
    PropertyReport report = property_report(box, 200, 7, 1e-9);
    CHECK_FALSE(report.plus_homogeneous.passed);
    CHECK_FALSE(report.axioms_pass());
    REQUIRE(report.plus_homogeneous.witness.has_value());
    const PropertyWitness& w = *report.plus_homogeneous.witness;
    REQUIRE(w.shift.has_value());
    // adding gamma moves the value by 2 * gamma, so the witness re-fires
    CHECK(std::abs(box(w.inputs[0].shifted(*w.shift)) - box(w.inputs[0]) - *w.shift) > 1e-9);
}

TEST_CASE("black box scaled evaluation fails normalization") {
    FiniteSpace two(2);
    Functional box(two, FunctionalKind::black_box, "scaled_point",
                   [](const RealFunction& phi) { return 2.0 * phi.value(0); });
    PropertyReport report = property_report(box, 200, 7, 1e-9);
    CHECK_FALSE(report.normalized.passed);
    REQUIRE(report.normalized.witness.has_value());
    const PropertyWitness& w = *report.normalized.witness;
    CHECK(std::abs(box(w.inputs[0]) - *w.shift) > 1e-9);
}

TEST_CASE("black box mean fails exactly comonotone maxitivity") {
    FiniteSpace three(3);
    Functional box(three, FunctionalKind::black_box, "mean", [](const RealFunction& phi) {
        double total = 0.0;
        for (double v : phi.values()) total += v;
        return total / static_cast<double>(phi.size());
    });
    PropertyReport report = property_report(box, 500, 11, 1e-9);
    CHECK(report.normalized.passed);
    CHECK(report.monotone.passed);
    CHECK(report.plus_homogeneous.passed);
    CHECK_FALSE(report.comonotone_maxitive.passed);
    CHECK_FALSE(report.fully_maxitive.passed);
}

TEST_CASE("all_grid_functions enumerates the cube") {
    FiniteSpace three(3);
    std::vector<RealFunction> all = all_grid_functions(three);
    CHECK(all.size() == 125);
    std::set<std::vector<double>> seen;
    for (const RealFunction& f : all) seen.insert(f.values());
    CHECK(seen.size() == 125);
    CHECK_THROWS_AS(all_grid_functions(FiniteSpace(4)), Error);
}

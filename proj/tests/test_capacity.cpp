#include <doctest.h>

#include "maxplus/capacity.hpp"
#include "maxplus/json_io.hpp"
#include "maxplus/rng.hpp"

using namespace maxplus;

namespace {

// Independent oracle for the possibility property: scan every pair of
// subsets for the max rule instead of reducing to singletons.
bool possibility_all_pairs(const Capacity& c) {
    const std::uint32_t full = c.space().full_bits();
    for (std::uint32_t a = 0; a <= full; ++a)
        for (std::uint32_t b = 0; b <= full; ++b)
            if (c.at_bits(a | b) != std::max(c.at_bits(a), c.at_bits(b))) return false;
    return true;
}

}  // namespace

TEST_CASE("validate_capacity accepts and rejects") {
    FiniteSpace one(1);
    CHECK_NOTHROW(validate_capacity(one, {0.0, 1.0}));

    FiniteSpace two(2);
    CHECK_NOTHROW(validate_capacity(two, {0.0, 0.5, 0.25, 1.0}));

    // c({0}) = 0.7 above c(X) = 0.6: flagged as a monotonicity violation
    // with the cover pair ({0}, X) as witness.
    try {
        validate_capacity(two, {0.0, 0.7, 0.25, 0.6});
        FAIL("expected a validation error");
    } catch (const CapacityValidationError& e) {
        CHECK(e.kind == CapacityValidationError::Kind::monotonicity);
        CHECK(e.witness_small == 0b01u);
        CHECK(e.witness_large == 0b11u);
    }

    try {
        validate_capacity(two, {0.0, 1.2, 0.25, 1.0});
        FAIL("expected a validation error");
    } catch (const CapacityValidationError& e) {
        CHECK(e.kind == CapacityValidationError::Kind::out_of_range);
        CHECK(e.witness_small == 0b01u);
    }

    try {
        validate_capacity(two, {0.0, 0.5, 0.25, 0.9});
        FAIL("expected a validation error");
    } catch (const CapacityValidationError& e) {
        CHECK(e.kind == CapacityValidationError::Kind::boundary);
    }

    CHECK_THROWS_AS(validate_capacity(two, {0.0, 1.0}), CapacityValidationError);
}

TEST_CASE("possibility_capacity from densities") {
    FiniteSpace two(2);
    Capacity c = possibility_capacity(PossibilityDensity(two, {1.0, 0.25}));
    CHECK(c(Subset::singleton(two, 1)) == 0.25);
    CHECK(c(Subset::singleton(two, 0)) == 1.0);
    CHECK(c(Subset::full(two)) == 1.0);
    CHECK(is_possibility(c).possibility);

    Capacity all_one = possibility_capacity(PossibilityDensity(two, {1.0, 1.0}));
    for (std::uint32_t s = 1; s <= two.full_bits(); ++s) CHECK(all_one.at_bits(s) == 1.0);

    FiniteSpace three(3);
    Capacity c3 = possibility_capacity(PossibilityDensity(three, {1.0, 0.5, 0.5}));
    CHECK(c3(Subset(three, 0b110u)) == 0.5);  // max over the pair

    CHECK_THROWS_AS(PossibilityDensity(two, {0.5, 0.25}), Error);  // max weight must be 1
}

TEST_CASE("is_possibility witness") {
    FiniteSpace two(2);
    CHECK(is_possibility(dirac(two, 0)).possibility);

    Capacity c = validate_capacity(two, {0.0, 0.5, 0.25, 1.0});
    PossibilityCheck check = is_possibility(c);
    REQUIRE_FALSE(check.possibility);
    REQUIRE(check.witness.has_value());
    auto [a, b] = *check.witness;
    CHECK(a == Subset::singleton(two, 0));
    CHECK(b == Subset::singleton(two, 1));
    // the witness really violates the max rule
    CHECK(c(a.union_with(b)) > std::max(c(a), c(b)));

    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        Capacity d = possibility_capacity(random_density(FiniteSpace(4), seed));
        CHECK(is_possibility(d).possibility);
    }
}

TEST_CASE("is_possibility agrees with the all-pairs oracle") {
    for (int size = 2; size <= 5; ++size) {
        FiniteSpace space(size);
        for (std::uint64_t seed = 0; seed < 200; ++seed) {
            Capacity c = random_capacity(space, mix_seed(400 + size, seed));
            PossibilityCheck check = is_possibility(c);
            CHECK(check.possibility == possibility_all_pairs(c));
            if (!check.possibility) {
                auto [a, b] = *check.witness;
                CHECK(c(a.union_with(b)) > std::max(c(a), c(b)));
            }
        }
    }
}

TEST_CASE("dirac capacities") {
    FiniteSpace two(2);
    Capacity c = dirac(two, 0);
    CHECK(c.at_bits(0b01u) == 1.0);
    CHECK(c.at_bits(0b11u) == 1.0);
    CHECK(c.at_bits(0b10u) == 0.0);
    CHECK(c.at_bits(0b00u) == 0.0);
    CHECK(is_possibility(c).possibility);

    FiniteSpace one(1);
    CHECK(dirac(one, 0).table() == std::vector<double>{0.0, 1.0});

    // agreement with the indicator density
    Capacity via_density = possibility_capacity(PossibilityDensity(two, {1.0, 0.0}));
    CHECK(c.table() == via_density.table());
}

TEST_CASE("pushforward") {
    FiniteSpace four(4);
    FiniteSpace three(3);
    Capacity c = random_capacity(four, 11);

    CHECK(pushforward(c, SpaceMap::identity(four)).table() == c.table());

    FiniteSpace one(1);
    Capacity collapsed = pushforward(c, SpaceMap(four, one, {0, 0, 0, 0}));
    CHECK(collapsed.table() == std::vector<double>{0.0, 1.0});

    SpaceMap f(four, three, {2, 0, 2, 1});
    CHECK(pushforward(dirac(four, 2), f).table() == dirac(three, 2).table());

    // functoriality: (g o f)# = g# o f#
    FiniteSpace two(2);
    SpaceMap g(three, two, {1, 0, 1});
    Capacity lhs = pushforward(c, compose(g, f));
    Capacity rhs = pushforward(pushforward(c, f), g);
    CHECK(lhs.table() == rhs.table());

    // possibility is preserved
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        Capacity p = possibility_capacity(random_density(four, seed));
        CHECK(is_possibility(pushforward(p, f)).possibility);
    }
}

TEST_CASE("random generators are valid and deterministic") {
    FiniteSpace four(4);
    Capacity a = random_capacity(four, 42);
    Capacity b = random_capacity(four, 42);
    CHECK(a.table() == b.table());
    CHECK(random_capacity(four, 43).table() != a.table());

    for (std::uint64_t seed = 0; seed < 1000; ++seed)
        CHECK_NOTHROW(validate_capacity(four, random_capacity(four, seed).table()));

    PossibilityDensity d = random_density(four, 7);
    CHECK(d.weights() == random_density(four, 7).weights());
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        PossibilityDensity sample = random_density(four, seed);
        double top = 0.0;
        for (double w : sample.weights()) top = std::max(top, w);
        CHECK(top == 1.0);
    }
}

TEST_CASE("capacity json round-trip and sparse completion") {
    FiniteSpace three(3);
    Capacity c = random_capacity(three, 5);
    Capacity back = capacity_from_json(capacity_to_json(c));
    CHECK(back.table() == c.table());

    // sparse: unlisted subsets fill by monotone closure over listed ones
    nlohmann::json sparse = {
        {"size", 2},
        {"values",
         {{{"set", {0}}, {"value", 0.5}}, {{"set", {0, 1}}, {"value", 1.0}}}}};
    Capacity completed = capacity_from_json(sparse);
    CHECK(completed.at_bits(0b00u) == 0.0);
    CHECK(completed.at_bits(0b01u) == 0.5);
    CHECK(completed.at_bits(0b10u) == 0.0);  // no listed subset inside {1}
    CHECK(completed.at_bits(0b11u) == 1.0);

    nlohmann::json bad = {{"size", 2},
                          {"values", {{{"set", {0, 1}}, {"value", 0.25}}}}};
    CHECK_THROWS_AS(capacity_from_json(bad), CapacityValidationError);  // c(X) != 1

    // function and subset formats
    RealFunction f = function_from_json(nlohmann::json::parse("[3.0,-2.0]"));
    CHECK(f.values() == std::vector<double>{3.0, -2.0});
    CHECK(function_to_json(f).dump() == "[3.0,-2.0]");
    Subset s = subset_from_json(nlohmann::json::parse("[0,2]"), three);
    CHECK(s.bits() == 0b101u);
    CHECK(subset_to_json(s).dump() == "[0,2]");
}

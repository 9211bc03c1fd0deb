#include <doctest.h>

#include "maxplus/functional.hpp"
#include "maxplus/rng.hpp"
#include "maxplus/space.hpp"

using namespace maxplus;

TEST_CASE("level_set thresholds") {
    FiniteSpace two(2);
    RealFunction phi(two, {3.0, -2.0});
    CHECK(level_set(phi, 0.0) == Subset::singleton(two, 0));
    CHECK(level_set(phi, -2.0) == Subset::full(two));  // t equals the minimum
    CHECK(level_set(phi, 3.5) == Subset::empty(two));
}

TEST_CASE("level_set is antitone in t") {
    FiniteSpace space(5);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RealFunction phi = random_function(space, seed, -3.0, 3.0);
        Rng rng(mix_seed(seed, 77));
        double s = rng.uniform(-3.0, 3.0);
        double t = rng.uniform(-3.0, 3.0);
        if (s > t) std::swap(s, t);
        CHECK(level_set(phi, t).subset_of(level_set(phi, s)));
    }
}

TEST_CASE("comonotonic basics") {
    FiniteSpace two(2);
    CHECK(comonotonic(RealFunction(two, {1.0, 2.0}), RealFunction(two, {5.0, 5.0})));
    CHECK_FALSE(comonotonic(RealFunction(two, {1.0, 2.0}), RealFunction(two, {2.0, 1.0})));
    FiniteSpace three(3);
    // pairwise products: (1-2)(0-7)=7, (1-2)(0-3)=3, (2-2)(7-3)=0
    CHECK(comonotonic(RealFunction(three, {1.0, 2.0, 2.0}), RealFunction(three, {0.0, 7.0, 3.0})));
    CHECK_THROWS_AS(comonotonic(RealFunction(two, {0.0, 0.0}), RealFunction(three, {0.0, 0.0, 0.0})),
                    DomainMismatchError);
}

TEST_CASE("comonotonic is symmetric and shift-invariant") {
    FiniteSpace space(4);
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        RealFunction f = random_function(space, mix_seed(seed, 0), -1.0, 1.0);
        RealFunction g = random_function(space, mix_seed(seed, 1), -1.0, 1.0);
        CHECK(comonotonic(f, g) == comonotonic(g, f));
        CHECK(comonotonic(f, f.shifted(0.75)));
    }
}

TEST_CASE("level sets of comonotone functions nest") {
    // For every threshold, one of the two level sets contains the other.
    for (int size = 2; size <= 6; ++size) {
        FiniteSpace space(size);
        for (std::uint64_t seed = 0; seed < 300; ++seed) {
            auto [phi, psi] = generate_comonotone_pair(space, mix_seed(9000 + size, seed));
            REQUIRE(comonotonic(phi, psi));
            std::vector<double> thresholds = distinct_values(phi);
            for (double t : distinct_values(psi)) thresholds.push_back(t);
            for (double t : thresholds) {
                Subset a = level_set(phi, t);
                Subset b = level_set(psi, t);
                CHECK((a.subset_of(b) || b.subset_of(a)));
            }
        }
    }
}

TEST_CASE("distinct_values sorts and dedupes") {
    FiniteSpace three(3);
    CHECK(distinct_values(RealFunction(three, {3.0, -2.0, 3.0})) ==
          std::vector<double>{-2.0, 3.0});
    CHECK(distinct_values(RealFunction::constant(three, 5.0)) == std::vector<double>{5.0});
    CHECK(distinct_values(RealFunction(three, {0.0, 1.0, 2.0})) ==
          std::vector<double>{0.0, 1.0, 2.0});
}

TEST_CASE("extended real arithmetic") {
    ExtendedReal bottom = ExtendedReal::neg_inf();
    CHECK_FALSE(bottom.is_finite());
    CHECK_FALSE((bottom + 17.0).is_finite());       // NEG_INF + gamma = NEG_INF
    CHECK(bottom < ExtendedReal(-1e100));           // below every finite value
    CHECK(max(bottom, ExtendedReal(2.0)) == ExtendedReal(2.0));
    CHECK(max(ExtendedReal(2.0), bottom) == ExtendedReal(2.0));
    CHECK((ExtendedReal(1.5) + 2.0) == ExtendedReal(3.5));
    CHECK_FALSE(log_extended(0.0).is_finite());
    CHECK(log_extended(1.0) == ExtendedReal(0.0));
    CHECK_THROWS_AS(ExtendedReal(std::numeric_limits<double>::infinity()), Error);
}

TEST_CASE("space and function validation") {
    CHECK_THROWS_AS(FiniteSpace(0), Error);
    CHECK_THROWS_AS(FiniteSpace(kMaxSpaceSize + 1), Error);
    CHECK_THROWS_AS(FiniteSpace(2, {"a"}), Error);
    CHECK_THROWS_AS(FiniteSpace(2, {"a", "a"}), Error);
    FiniteSpace two(2, {"a", "b"});
    CHECK(two.size() == 2);
    CHECK_THROWS_AS(RealFunction(two, {1.0}), Error);
    CHECK_THROWS_AS(RealFunction(two, {1.0, std::nan("")}), Error);
    CHECK_THROWS_AS(Subset(two, 0b100u), Error);
}

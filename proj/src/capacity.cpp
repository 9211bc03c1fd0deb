#include "maxplus/capacity.hpp"

#include <algorithm>
#include <cmath>

#include "maxplus/rng.hpp"

namespace maxplus {

namespace {

std::string bits_to_string(std::uint32_t bits, int size) {
    std::string out = "{";
    bool first = true;
    for (int i = 0; i < size; ++i) {
        if ((bits >> i) & 1u) {
            if (!first) out += ",";
            out += std::to_string(i);
            first = false;
        }
    }
    return out + "}";
}

}  // namespace

Capacity::Capacity(FiniteSpace space, std::vector<double> table)
    : space_(std::move(space)), table_(std::move(table)) {
    const std::size_t expected = std::size_t{1} << space_.size();
    if (table_.size() != expected)
        throw CapacityValidationError(CapacityValidationError::Kind::table_size,
                                      "capacity: expected " + std::to_string(expected) +
                                          " table entries, got " + std::to_string(table_.size()));
    for (std::uint32_t s = 0; s < table_.size(); ++s)
        if (!(table_[s] >= 0.0 && table_[s] <= 1.0))
            throw CapacityValidationError(
                CapacityValidationError::Kind::out_of_range,
                "capacity: value " + std::to_string(table_[s]) + " on " +
                    bits_to_string(s, space_.size()) + " outside [0,1]",
                s);
    // Cover pairs (A, A|{x}) suffice for monotonicity by transitivity.
    for (std::uint32_t s = 0; s < table_.size(); ++s) {
        for (int x = 0; x < space_.size(); ++x) {
            const std::uint32_t bit = 1u << x;
            if (s & bit) continue;
            if (table_[s] > table_[s | bit])
                throw CapacityValidationError(
                    CapacityValidationError::Kind::monotonicity,
                    "capacity: monotonicity violated, c" + bits_to_string(s, space_.size()) +
                        " = " + std::to_string(table_[s]) + " > c" +
                        bits_to_string(s | bit, space_.size()) + " = " +
                        std::to_string(table_[s | bit]),
                    s, s | bit);
        }
    }
    if (table_[0] != 0.0)
        throw CapacityValidationError(CapacityValidationError::Kind::boundary,
                                      "capacity: empty set must carry 0");
    if (table_[space_.full_bits()] != 1.0)
        throw CapacityValidationError(CapacityValidationError::Kind::boundary,
                                      "capacity: full space must carry 1");
}

double Capacity::operator()(const Subset& s) const {
    require_same_space(space_, s.space(), "Capacity::operator()");
    return table_[s.bits()];
}

Capacity validate_capacity(const FiniteSpace& space, std::vector<double> table) {
    return Capacity(space, std::move(table));
}

PossibilityDensity::PossibilityDensity(FiniteSpace space, std::vector<double> weights)
    : space_(std::move(space)), weights_(std::move(weights)) {
    if (static_cast<int>(weights_.size()) != space_.size())
        throw Error("PossibilityDensity: expected one weight per point");
    double top = 0.0;
    for (std::size_t i = 0; i < weights_.size(); ++i) {
        if (!(weights_[i] >= 0.0 && weights_[i] <= 1.0))
            throw Error("PossibilityDensity: weight at point " + std::to_string(i) +
                        " outside [0,1]");
        top = std::max(top, weights_[i]);
    }
    if (top != 1.0) throw Error("PossibilityDensity: maximum weight must equal 1 exactly");
}

SpaceMap::SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> image)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), image_(std::move(image)) {
    if (static_cast<int>(image_.size()) != domain_.size())
        throw Error("SpaceMap: expected one image point per domain point");
    for (std::size_t i = 0; i < image_.size(); ++i)
        if (image_[i] < 0 || image_[i] >= codomain_.size())
            throw Error("SpaceMap: image of point " + std::to_string(i) +
                        " is not a codomain index");
}

SpaceMap SpaceMap::identity(const FiniteSpace& space) {
    std::vector<int> image(static_cast<std::size_t>(space.size()));
    for (int i = 0; i < space.size(); ++i) image[static_cast<std::size_t>(i)] = i;
    return SpaceMap(space, space, std::move(image));
}

std::uint32_t SpaceMap::preimage_bits(std::uint32_t codomain_bits) const {
    std::uint32_t out = 0;
    for (int x = 0; x < domain_.size(); ++x)
        if ((codomain_bits >> image_[static_cast<std::size_t>(x)]) & 1u) out |= 1u << x;
    return out;
}

SpaceMap compose(const SpaceMap& g, const SpaceMap& f) {
    require_same_space(g.domain(), f.codomain(), "compose");
    std::vector<int> image(static_cast<std::size_t>(f.domain().size()));
    for (int x = 0; x < f.domain().size(); ++x) image[static_cast<std::size_t>(x)] = g(f(x));
    return SpaceMap(f.domain(), g.codomain(), std::move(image));
}

Capacity possibility_capacity(const PossibilityDensity& d) {
    const int n = d.space().size();
    std::vector<double> table(std::size_t{1} << n, 0.0);
    for (std::uint32_t s = 1; s < table.size(); ++s) {
        double v = 0.0;
        for (int x = 0; x < n; ++x)
            if ((s >> x) & 1u) v = std::max(v, d.weight(x));
        table[s] = v;
    }
    return Capacity(d.space(), std::move(table));
}

PossibilityCheck is_possibility(const Capacity& c) {
    const int n = c.space().size();
    const std::uint32_t full = c.space().full_bits();
    // Scan by increasing cardinality so the first violation is minimal:
    // all its proper subsets already satisfy the singleton-max rule.
    for (int card = 2; card <= n; ++card) {
        for (std::uint32_t s = 1; s <= full; ++s) {
            if (__builtin_popcount(s) != card) continue;
            double singleton_max = 0.0;
            int top_point = -1;
            for (int x = 0; x < n; ++x)
                if ((s >> x) & 1u) {
                    singleton_max = std::max(singleton_max, c.at_bits(1u << x));
                    top_point = x;
                }
            if (c.at_bits(s) > singleton_max) {
                Subset a(c.space(), s & ~(1u << top_point));
                Subset b = Subset::singleton(c.space(), top_point);
                return {false, std::make_pair(a, b)};
            }
        }
    }
    return {true, std::nullopt};
}

Capacity dirac(const FiniteSpace& space, int point) {
    if (point < 0 || point >= space.size())
        throw Error("dirac: point index " + std::to_string(point) + " out of range");
    std::vector<double> table(std::size_t{1} << space.size(), 0.0);
    for (std::uint32_t s = 0; s < table.size(); ++s)
        if ((s >> point) & 1u) table[s] = 1.0;
    return Capacity(space, std::move(table));
}

PossibilityDensity density_of(const Capacity& c) {
    std::vector<double> weights(static_cast<std::size_t>(c.space().size()));
    for (int x = 0; x < c.space().size(); ++x)
        weights[static_cast<std::size_t>(x)] = c.at_bits(1u << x);
    return PossibilityDensity(c.space(), std::move(weights));
}

Capacity pushforward(const Capacity& c, const SpaceMap& f) {
    require_same_space(c.space(), f.domain(), "pushforward");
    const std::size_t entries = std::size_t{1} << f.codomain().size();
    std::vector<double> table(entries);
    for (std::uint32_t s = 0; s < entries; ++s) table[s] = c.at_bits(f.preimage_bits(s));
    return Capacity(f.codomain(), std::move(table));
}

Capacity random_capacity(const FiniteSpace& space, std::uint64_t seed) {
    Rng rng(seed);
    const std::size_t entries = std::size_t{1} << space.size();
    std::vector<double> table(entries, 0.0);
    for (std::uint32_t s = 1; s < entries; ++s) table[s] = rng.uniform();
    // Running maxima over the lattice: every strict subset has a smaller
    // bitmask, so ascending order sees all covers of s before s itself.
    for (std::uint32_t s = 1; s < entries; ++s)
        for (int x = 0; x < space.size(); ++x)
            if ((s >> x) & 1u) table[s] = std::max(table[s], table[s & ~(1u << x)]);
    const double top = table[space.full_bits()];
    for (std::uint32_t s = 1; s < entries; ++s) table[s] /= top;
    return Capacity(space, std::move(table));
}

PossibilityDensity random_density(const FiniteSpace& space, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<double> weights(static_cast<std::size_t>(space.size()));
    double top = 0.0;
    for (double& w : weights) {
        w = rng.uniform();
        top = std::max(top, w);
    }
    if (top == 0.0) {
        weights[0] = 1.0;  // all-zero draw, measure zero
    } else {
        for (double& w : weights) w /= top;
    }
    return PossibilityDensity(space, std::move(weights));
}

SpaceMap random_map(const FiniteSpace& domain, const FiniteSpace& codomain, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<int> image(static_cast<std::size_t>(domain.size()));
    for (int& y : image) y = rng.uniform_int(codomain.size());
    return SpaceMap(domain, codomain, std::move(image));
}

}  // namespace maxplus

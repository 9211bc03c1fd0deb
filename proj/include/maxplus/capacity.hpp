#ifndef MAXPLUS_CAPACITY_HPP
#define MAXPLUS_CAPACITY_HPP

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "maxplus/space.hpp"

namespace maxplus {

/// A normalized monotone set function on all subsets of a FiniteSpace,
/// stored as a dense table indexed by subset bitmask. Construction
/// validates c(empty) = 0, c(full) = 1, entries in [0,1] and monotonicity
/// along cover pairs (A, A|{x}), which suffices by transitivity.
class Capacity {
public:
    Capacity(FiniteSpace space, std::vector<double> table);

    const FiniteSpace& space() const { return space_; }
    const std::vector<double>& table() const { return table_; }

    double operator()(const Subset& s) const;
    double at_bits(std::uint32_t bits) const { return table_[bits]; }

private:
    FiniteSpace space_;
    std::vector<double> table_;
};

/// Validates a raw table and returns the capacity. Throws
/// CapacityValidationError naming the violated condition; monotonicity
/// failures carry the offending cover pair as a witness.
Capacity validate_capacity(const FiniteSpace& space, std::vector<double> table);

/// Point weights in [0,1] whose maximum is exactly 1; determines a
/// possibility capacity through c(A) = max of the weights over A.
class PossibilityDensity {
public:
    PossibilityDensity(FiniteSpace space, std::vector<double> weights);

    const FiniteSpace& space() const { return space_; }
    const std::vector<double>& weights() const { return weights_; }
    double weight(int point) const { return weights_[static_cast<std::size_t>(point)]; }

private:
    FiniteSpace space_;
    std::vector<double> weights_;
};

/// A map of finite spaces, one codomain point per domain point.
class SpaceMap {
public:
    SpaceMap(FiniteSpace domain, FiniteSpace codomain, std::vector<int> image);

    static SpaceMap identity(const FiniteSpace& space);

    const FiniteSpace& domain() const { return domain_; }
    const FiniteSpace& codomain() const { return codomain_; }
    const std::vector<int>& image() const { return image_; }
    int operator()(int point) const { return image_[static_cast<std::size_t>(point)]; }

    /// Bitmask of f^{-1}(A) for a codomain subset A given as bits.
    std::uint32_t preimage_bits(std::uint32_t codomain_bits) const;

private:
    FiniteSpace domain_;
    FiniteSpace codomain_;
    std::vector<int> image_;
};

/// Composition g after f.
SpaceMap compose(const SpaceMap& g, const SpaceMap& f);

/// The capacity c(A) = max of d's weights over A (0 on the empty set).
Capacity possibility_capacity(const PossibilityDensity& d);

struct PossibilityCheck {
    bool possibility;
    /// On failure, a pair (A, B) with c(A|B) > max(c(A), c(B)).
    std::optional<std::pair<Subset, Subset>> witness;
};

/// Checks c(A) = max over singletons of A for every nonempty A, which on a
/// finite space is equivalent to the pairwise max rule. The witness pair is
/// built by splitting the smallest violating subset.
PossibilityCheck is_possibility(const Capacity& c);

/// The 0-1 capacity concentrated at one point: c(F) = 1 iff the point is
/// in F.
Capacity dirac(const FiniteSpace& space, int point);

/// Singleton values of a possibility capacity as a density.
PossibilityDensity density_of(const Capacity& c);

/// Transport along f via preimages: result(A) = c(f^{-1}(A)).
Capacity pushforward(const Capacity& c, const SpaceMap& f);

/// Seeded random capacity: independent uniforms per subset, made monotone
/// by running maxima over the subset lattice, then renormalized so the full
/// set carries exactly 1.
Capacity random_capacity(const FiniteSpace& space, std::uint64_t seed);

/// Seeded random density: uniforms rescaled so the maximum weight is
/// exactly 1.
PossibilityDensity random_density(const FiniteSpace& space, std::uint64_t seed);

/// Seeded random map between two spaces.
SpaceMap random_map(const FiniteSpace& domain, const FiniteSpace& codomain, std::uint64_t seed);

}  // namespace maxplus

#endif

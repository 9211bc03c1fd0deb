#ifndef MAXPLUS_RNG_HPP
#define MAXPLUS_RNG_HPP

#include <cstdint>
#include <random>

namespace maxplus {

/// Seeded generator behind every randomized operation. Doubles are built
/// from the top 53 bits of the engine output so a seed reproduces the same
/// stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform draw from [0, 1).
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    /// Uniform draw from [a, b).
    double uniform(double a, double b) { return a + (b - a) * uniform(); }

    /// Uniform draw from {0, ..., n-1}.
    int uniform_int(int n) { return static_cast<int>(uniform() * n); }

private:
    std::mt19937_64 engine_;
};

/// splitmix64 finalizer; derives decorrelated per-trial seeds from a base
/// seed and a trial index.
inline std::uint64_t mix_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace maxplus

#endif

#ifndef MAXPLUS_SPACE_HPP
#define MAXPLUS_SPACE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "maxplus/errors.hpp"

namespace maxplus {

/// Hard cap on ground-set size. Set functions are stored as dense tables
/// with one entry per subset, so 2^size must stay addressable.
inline constexpr int kMaxSpaceSize = 20;

/// A finite ground set. Points are the indices 0..size()-1; labels are
/// optional display names, one per point, all distinct.
class FiniteSpace {
public:
    explicit FiniteSpace(int size) : FiniteSpace(size, {}) {}
    FiniteSpace(int size, std::vector<std::string> labels);

    int size() const { return size_; }
    bool has_labels() const { return !labels_.empty(); }
    const std::vector<std::string>& labels() const { return labels_; }

    /// Bitmask with one bit per point.
    std::uint32_t full_bits() const { return (1u << size_) - 1u; }

    /// Spaces are identified structurally by their point count.
    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
        return a.size_ == b.size_;
    }
    friend bool operator!=(const FiniteSpace& a, const FiniteSpace& b) { return !(a == b); }

private:
    int size_;
    std::vector<std::string> labels_;
};

/// Throws DomainMismatchError unless both spaces have the same point count.
void require_same_space(const FiniteSpace& a, const FiniteSpace& b, const char* where);

/// A subset of a FiniteSpace, stored as a bitmask over point indices.
class Subset {
public:
    Subset(FiniteSpace space, std::uint32_t bits);

    static Subset empty(const FiniteSpace& space) { return Subset(space, 0u); }
    static Subset full(const FiniteSpace& space) { return Subset(space, space.full_bits()); }
    static Subset singleton(const FiniteSpace& space, int point);

    const FiniteSpace& space() const { return space_; }
    std::uint32_t bits() const { return bits_; }

    bool contains(int point) const { return (bits_ >> point) & 1u; }
    int count() const { return __builtin_popcount(bits_); }
    bool is_empty() const { return bits_ == 0u; }
    bool is_full() const { return bits_ == space_.full_bits(); }

    bool subset_of(const Subset& other) const { return (bits_ & other.bits_) == bits_; }
    Subset union_with(const Subset& other) const { return Subset(space_, bits_ | other.bits_); }
    Subset intersect_with(const Subset& other) const { return Subset(space_, bits_ & other.bits_); }
    Subset with(int point) const { return Subset(space_, bits_ | (1u << point)); }
    Subset without(int point) const { return Subset(space_, bits_ & ~(1u << point)); }

    /// Member indices in increasing order.
    std::vector<int> points() const;

    friend bool operator==(const Subset& a, const Subset& b) {
        return a.space_ == b.space_ && a.bits_ == b.bits_;
    }
    friend bool operator!=(const Subset& a, const Subset& b) { return !(a == b); }

private:
    FiniteSpace space_;
    std::uint32_t bits_;
};

/// A total real-valued function on a FiniteSpace. Every value is finite.
class RealFunction {
public:
    RealFunction(FiniteSpace space, std::vector<double> values);

    static RealFunction constant(const FiniteSpace& space, double gamma);

    const FiniteSpace& space() const { return space_; }
    const std::vector<double>& values() const { return values_; }
    double value(int point) const { return values_[static_cast<std::size_t>(point)]; }
    int size() const { return space_.size(); }

    double min_value() const;
    double max_value() const;

    /// The function shifted by a constant: x |-> value(x) + gamma.
    RealFunction shifted(double gamma) const;

    friend bool operator==(const RealFunction& a, const RealFunction& b) {
        return a.space_ == b.space_ && a.values_ == b.values_;
    }

private:
    FiniteSpace space_;
    std::vector<double> values_;
};

/// Pointwise maximum f v g of two functions on the same space.
RealFunction pointwise_max(const RealFunction& f, const RealFunction& g);

/// True iff f <= g pointwise.
bool pointwise_leq(const RealFunction& f, const RealFunction& g);

/// A real number extended with a single NEG_INF element obeying the
/// max-plus rules: NEG_INF + g = NEG_INF and NEG_INF < every finite value.
/// The tag keeps the arithmetic defined by rule instead of by whatever the
/// host floating point does with infinities.
class ExtendedReal {
public:
    ExtendedReal(double finite_value);  // throws on non-finite input
    static ExtendedReal neg_inf() { return ExtendedReal(); }

    bool is_finite() const { return finite_; }
    double value() const;  // requires is_finite()

    friend ExtendedReal operator+(const ExtendedReal& a, double gamma) {
        return a.finite_ ? ExtendedReal(a.value_ + gamma) : neg_inf();
    }
    friend bool operator==(const ExtendedReal& a, const ExtendedReal& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
    }
    friend bool operator<(const ExtendedReal& a, const ExtendedReal& b) {
        if (!a.finite_) return b.finite_;
        return b.finite_ && a.value_ < b.value_;
    }

private:
    ExtendedReal() : finite_(false), value_(0.0) {}

    bool finite_;
    double value_;
};

inline ExtendedReal max(const ExtendedReal& a, const ExtendedReal& b) { return a < b ? b : a; }

/// ln on [0, 1] with ln(0) = NEG_INF.
ExtendedReal log_extended(double v);

/// The level set phi_t = {x | phi(x) >= t}.
Subset level_set(const RealFunction& phi, double t);

/// True iff (phi(x1)-phi(x2)) * (psi(x1)-psi(x2)) >= 0 for every pair of
/// points. Symmetric; a constant function is comonotonic to anything.
bool comonotonic(const RealFunction& phi, const RealFunction& psi);

/// Strictly increasing list of the distinct values phi takes.
std::vector<double> distinct_values(const RealFunction& phi);

}  // namespace maxplus

#endif

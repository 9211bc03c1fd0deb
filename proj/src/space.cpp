#include "maxplus/space.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

namespace maxplus {

FiniteSpace::FiniteSpace(int size, std::vector<std::string> labels)
    : size_(size), labels_(std::move(labels)) {
    if (size_ < 1) throw Error("FiniteSpace: size must be at least 1");
    if (size_ > kMaxSpaceSize)
        throw Error("FiniteSpace: size " + std::to_string(size_) + " exceeds cap " +
                    std::to_string(kMaxSpaceSize));
    if (!labels_.empty()) {
        if (static_cast<int>(labels_.size()) != size_)
            throw Error("FiniteSpace: expected one label per point");
        std::unordered_set<std::string> seen(labels_.begin(), labels_.end());
        if (static_cast<int>(seen.size()) != size_)
            throw Error("FiniteSpace: labels must be distinct");
    }
}

void require_same_space(const FiniteSpace& a, const FiniteSpace& b, const char* where) {
    if (a != b) throw DomainMismatchError(where, a.size(), b.size());
}

Subset::Subset(FiniteSpace space, std::uint32_t bits) : space_(std::move(space)), bits_(bits) {
    if (bits_ & ~space_.full_bits())
        throw Error("Subset: membership bits beyond the space size");
}

Subset Subset::singleton(const FiniteSpace& space, int point) {
    if (point < 0 || point >= space.size())
        throw Error("Subset: point index " + std::to_string(point) + " out of range");
    return Subset(space, 1u << point);
}

std::vector<int> Subset::points() const {
    std::vector<int> out;
    for (int i = 0; i < space_.size(); ++i)
        if (contains(i)) out.push_back(i);
    return out;
}

RealFunction::RealFunction(FiniteSpace space, std::vector<double> values)
    : space_(std::move(space)), values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != space_.size())
        throw Error("RealFunction: expected one value per point");
    for (std::size_t i = 0; i < values_.size(); ++i)
        if (!std::isfinite(values_[i]))
            throw Error("RealFunction: non-finite value at point " + std::to_string(i));
}

RealFunction RealFunction::constant(const FiniteSpace& space, double gamma) {
    return RealFunction(space, std::vector<double>(static_cast<std::size_t>(space.size()), gamma));
}

double RealFunction::min_value() const {
    return *std::min_element(values_.begin(), values_.end());
}

double RealFunction::max_value() const {
    return *std::max_element(values_.begin(), values_.end());
}

RealFunction RealFunction::shifted(double gamma) const {
    std::vector<double> out(values_);
    for (double& v : out) v += gamma;
    return RealFunction(space_, std::move(out));
}

RealFunction pointwise_max(const RealFunction& f, const RealFunction& g) {
    require_same_space(f.space(), g.space(), "pointwise_max");
    std::vector<double> out(f.values());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = std::max(out[i], g.values()[i]);
    return RealFunction(f.space(), std::move(out));
}

bool pointwise_leq(const RealFunction& f, const RealFunction& g) {
    require_same_space(f.space(), g.space(), "pointwise_leq");
    for (std::size_t i = 0; i < f.values().size(); ++i)
        if (f.values()[i] > g.values()[i]) return false;
    return true;
}

ExtendedReal::ExtendedReal(double finite_value) : finite_(true), value_(finite_value) {
    if (!std::isfinite(finite_value))
        throw Error("ExtendedReal: finite constructor given a non-finite value");
}

double ExtendedReal::value() const {
    if (!finite_) throw Error("ExtendedReal: NEG_INF has no finite value");
    return value_;
}

ExtendedReal log_extended(double v) {
    if (v < 0.0) throw Error("log_extended: negative argument");
    return v == 0.0 ? ExtendedReal::neg_inf() : ExtendedReal(std::log(v));
}

Subset level_set(const RealFunction& phi, double t) {
    std::uint32_t bits = 0;
    for (int i = 0; i < phi.size(); ++i)
        if (phi.value(i) >= t) bits |= 1u << i;
    return Subset(phi.space(), bits);
}

bool comonotonic(const RealFunction& phi, const RealFunction& psi) {
    require_same_space(phi.space(), psi.space(), "comonotonic");
    const int n = phi.size();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((phi.value(i) - phi.value(j)) * (psi.value(i) - psi.value(j)) < 0.0) return false;
    return true;
}

std::vector<double> distinct_values(const RealFunction& phi) {
    std::vector<double> out(phi.values());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace maxplus

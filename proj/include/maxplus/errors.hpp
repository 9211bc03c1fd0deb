#ifndef MAXPLUS_ERRORS_HPP
#define MAXPLUS_ERRORS_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace maxplus {

/// Base class of every error thrown by this library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Two values that must live on the same ground set do not.
class DomainMismatchError : public Error {
public:
    DomainMismatchError(const std::string& where, int lhs_size, int rhs_size)
        : Error(where + ": domain mismatch (" + std::to_string(lhs_size) + " vs " +
                std::to_string(rhs_size) + " points)"),
          lhs_size(lhs_size),
          rhs_size(rhs_size) {}

    int lhs_size;
    int rhs_size;
};

/// A set-function table failed capacity validation. For monotonicity
/// failures `witness_small`/`witness_large` hold the offending cover pair
/// (A, A|{x}) as bitmasks; for out-of-range entries `witness_small` holds
/// the subset whose value is outside [0,1].
class CapacityValidationError : public Error {
public:
    enum class Kind { table_size, out_of_range, monotonicity, boundary };

    CapacityValidationError(Kind kind, const std::string& what,
                            std::uint32_t witness_small = 0,
                            std::uint32_t witness_large = 0)
        : Error(what), kind(kind), witness_small(witness_small), witness_large(witness_large) {}

    Kind kind;
    std::uint32_t witness_small;
    std::uint32_t witness_large;
};

/// An operation precondition failed. `point` is the offending point index
/// when one exists, -1 otherwise.
class PreconditionError : public Error {
public:
    PreconditionError(const std::string& what, int point = -1) : Error(what), point(point) {}

    int point;
};

/// Function values lie outside the range an operation requires.
class RangeError : public Error {
public:
    RangeError(const std::string& what, int point = -1) : Error(what), point(point) {}

    int point;
};

/// reconstruct_capacity failed: either the M-sweep for one subset did not
/// stabilize before the cap, or the finished table is not monotone.
class ReconstructionError : public Error {
public:
    enum class Kind { non_stabilization, invalid_functional };

    ReconstructionError(Kind kind, const std::string& what, std::uint32_t subset_bits,
                        std::uint32_t other_bits = 0, double previous_value = 0.0,
                        double last_value = 0.0)
        : Error(what),
          kind(kind),
          subset_bits(subset_bits),
          other_bits(other_bits),
          previous_value(previous_value),
          last_value(last_value) {}

    Kind kind;
    std::uint32_t subset_bits;  // offending subset (smaller set of the witness pair)
    std::uint32_t other_bits;   // larger set of the witness pair, monotonicity case
    double previous_value;      // last two sweep values, non-stabilization case
    double last_value;
};

/// Malformed or inconsistent serialized input.
class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

}  // namespace maxplus

#endif

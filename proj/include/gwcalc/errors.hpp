#pragma once

#include <stdexcept>
#include <string>

namespace gwcalc {

// Base class for all errors raised by the calculus engine.
struct CalcError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Series inversion / negative power requested on a series with zero constant term.
struct ZeroConstantTerm : CalcError {
    using CalcError::CalcError;
};

// Triangular solve with a vanishing leading entry.
struct SingularSystem : CalcError {
    using CalcError::CalcError;
};

// Sequence operands of different truncation length.
struct LengthMismatch : CalcError {
    using CalcError::CalcError;
};

// Enumeration would grow past the configured safety budget.  The caller gets
// an error instead of a silently truncated result list.
struct CapExceeded : CalcError {
    using CalcError::CalcError;
};

// A degeneration-formula term survived the dimension filter but the invariant
// table has no entry for one of its components.  The message names the key.
struct MissingInvariant : CalcError {
    using CalcError::CalcError;
};

// BPS conversion requested for a class with negative first Chern pairing.
struct NegativeC1 : CalcError {
    using CalcError::CalcError;
};

// Calabi-Yau branch conversion is missing the sequence of some divisor level.
struct MissingDivisorData : CalcError {
    using CalcError::CalcError;
};

// Malformed input file or literal; the message names the offending field.
struct ParseError : CalcError {
    using CalcError::CalcError;
};

} // namespace gwcalc

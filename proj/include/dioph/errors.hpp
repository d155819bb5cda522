#pragma once

#include <stdexcept>
#include <string>

namespace dioph {

// Base class for all toolkit errors.  The CLI maps subclasses to exit codes:
// InvalidParameters -> 2, PrecisionExhausted -> 3, everything else -> 1.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The requested enclosure cannot exist: the expression is singular at the
// true value (log of exact zero, division by exact zero, even root of a
// certainly negative number).
struct NonRefinable : Error {
    using Error::Error;
};

// Refinement hit the working-precision ceiling without reaching the target.
struct PrecisionExhausted : Error {
    using Error::Error;
};

struct InvalidParameters : Error {
    using Error::Error;
};

struct ParseError : InvalidParameters {
    using InvalidParameters::InvalidParameters;
};

struct NotSquarefree : InvalidParameters {
    using InvalidParameters::InvalidParameters;
};

struct NotApplicable : InvalidParameters {
    using InvalidParameters::InvalidParameters;
};

struct MultiplicativelyDependent : InvalidParameters {
    using InvalidParameters::InvalidParameters;
};

struct NotCoprime : InvalidParameters {
    using InvalidParameters::InvalidParameters;
};

struct NotZeroSum : InvalidParameters {
    using InvalidParameters::InvalidParameters;
};

struct FactorizationTooHard : Error {
    using Error::Error;
};

// No K in the escalation policy produced a usable reduction step.
struct Stalled : Error {
    using Error::Error;
};

}  // namespace dioph

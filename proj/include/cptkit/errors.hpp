// Error taxonomy for cptkit. Each class names a distinct failure mode so
// callers (and the CLI exit-code policy) can tell them apart.

#pragma once

#include <stdexcept>
#include <string>

namespace cptkit {

// Matrix/vector dimensions do not line up.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested object exceeds a configured size cap.
struct CapacityError : std::length_error {
    using std::length_error::length_error;
};

// Input fails a numeric contract (non-unit norm, non-Hermitian, ...).
struct ValidationError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Scalar argument outside its mathematical domain.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// A symmetry image falls outside the space it must live in.
struct ClosureError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// An operator lacks the structure an operation requires (e.g. CPT^2 not
// proportional to the identity).
struct StructureError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A stated precondition is violated (named in the message).
struct PreconditionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The anti-unitary demonstration was fed a stationary state, for which no
// violation can exist.
struct DegenerateDemoError : PreconditionError {
    using PreconditionError::PreconditionError;
};

// Key not present (grid shell, label, ...).
struct LookupError : std::out_of_range {
    using std::out_of_range::out_of_range;
};

// Operation excluded by design (e.g. twirling over anti-unitary elements).
struct UnsupportedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad command-line usage.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace cptkit

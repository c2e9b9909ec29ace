#pragma once

#include <stdexcept>
#include <string>

namespace toric {

// Malformed or inconsistent user input (dimension mismatch, bad JSON, ...).
struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// A documented precondition of an operation was violated by the caller.
struct PreconditionError : std::logic_error {
    using std::logic_error::logic_error;
};

// An internal consistency check failed; indicates a bug or a non-smooth input
// that slipped past validation.
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Machine-integer overflow. Arithmetic never wraps.
struct OverflowError : std::overflow_error {
    using std::overflow_error::overflow_error;
};

}  // namespace toric

#pragma once

#include <stdexcept>
#include <string>

namespace stg {

// Error taxonomy mirrored by the CLI exit codes:
// ParseError -> 2, InvariantError -> 3, PreconditionError -> 4.
// InternalError signals a broken identity inside the engine itself
// (e.g. the Lee-form formulas disagreeing) and is never expected.

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct InvariantError : Error {
    using Error::Error;
};

struct PreconditionError : Error {
    using Error::Error;
};

struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace stg

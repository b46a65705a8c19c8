#pragma once

#include <stdexcept>
#include <string>

namespace conformal {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Oracle enumeration went past its configured budget.
struct ResourceCeilingError : Error {
    using Error::Error;
};

// An internal self-check failed; always a bug, never bad input.
struct InconsistencyError : Error {
    using Error::Error;
};

struct RangeError : Error {
    using Error::Error;
};

struct ToleranceError : Error {
    using Error::Error;
};

struct BracketError : Error {
    using Error::Error;
};

struct UnknownGroupError : Error {
    using Error::Error;
};

struct MismatchError : Error {
    using Error::Error;
};

}  // namespace conformal

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace uconsta {

// Base class for everything thrown by the library.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bad input: wrong ranges, mismatched field/ring parameters, non-prime p, ...
struct ParameterError : Error {
    using Error::Error;
};

// A code-spec constraint was violated; carries the name of the constraint.
struct ValidationError : ParameterError {
    ValidationError(std::string constraint_name, const std::string& what)
        : ParameterError(what), constraint(std::move(constraint_name)) {}
    std::string constraint;
};

struct DivisionByZeroError : ParameterError {
    using ParameterError::ParameterError;
};

struct NotInvertibleError : ParameterError {
    using ParameterError::ParameterError;
};

// Enumeration/scan budget exceeded; carries the bits actually required.
struct ResourceError : Error {
    ResourceError(double required, unsigned cap, const std::string& what)
        : Error(what), required_bits(required), cap_bits(cap) {}
    double required_bits;
    unsigned cap_bits;
};

struct InternalError : Error {
    using Error::Error;
};

}  // namespace uconsta

#pragma once

#include <stdexcept>
#include <string>

namespace pbn {

/// Base for everything the library throws.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Caller supplied parameters outside an operation's domain.
class ParameterError : public Error {
public:
    using Error::Error;
};

class UnsupportedError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class DimensionMismatch : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class GeneratorMismatch : public ParameterError {
public:
    using ParameterError::ParameterError;
};

class RangeError : public ParameterError {
public:
    using ParameterError::ParameterError;
};

/// A computed result contradicts an identity the library relies on.
class InvariantViolation : public Error {
public:
    using Error::Error;
};

} // namespace pbn

#pragma once

#include <stdexcept>
#include <string>

namespace oi {

/// Base class for all errors raised by the library.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Malformed input: bad file contents, bad arguments, contract violations.
class SchemaError : public Error {
public:
    explicit SchemaError(const std::string& msg) : Error(msg) {}
};

/// A computation would exceed the configured degree cap.
class DegreeCapError : public Error {
public:
    explicit DegreeCapError(const std::string& msg) : Error(msg) {}
};

/// A theorem hypothesis or operation precondition is not met.
class HypothesisError : public Error {
public:
    explicit HypothesisError(const std::string& msg) : Error(msg) {}
};

} // namespace oi

#pragma once

#include <stdexcept>
#include <string>

namespace fusion {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input shape: wrong tensor size, out-of-range indices, bad tables.
class StructuralError : public Error {
public:
    using Error::Error;
};

/// An operation was called on an argument that violates its precondition.
class PreconditionError : public Error {
public:
    using Error::Error;
};

/// A floating point step failed to converge or produced a non-integral value.
class NumericalError : public Error {
public:
    NumericalError(const std::string &what, double residual)
        : Error(what), residual_(residual) {}

    double residual() const noexcept { return residual_; }

private:
    double residual_;
};

/// A request exceeded a configured size cap.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Unknown fixture, group or family name.
class LookupError : public Error {
public:
    using Error::Error;
};

/// Text that could not be parsed as a rule or group file.
class ParseError : public Error {
public:
    using Error::Error;
};

} // namespace fusion

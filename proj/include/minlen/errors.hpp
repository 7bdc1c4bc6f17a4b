#pragma once

#include <stdexcept>
#include <string>

namespace minlen {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the mathematical or physical domain of an operation.
class DomainError : public Error {
public:
    using Error::Error;
};

/// Requested order/observable/function is not provided.
class UnsupportedError : public Error {
public:
    using Error::Error;
};

/// Result cannot be delivered at the advertised precision (overflow, failed extrapolation).
class PrecisionError : public Error {
public:
    using Error::Error;
};

/// Adaptive quadrature exhausted its evaluation budget.
class ConvergenceError : public Error {
public:
    ConvergenceError(const std::string& what, double achieved_error)
        : Error(what), achieved_error_(achieved_error) {}

    double achieved_error() const noexcept { return achieved_error_; }

private:
    double achieved_error_;
};

/// File could not be read or parsed.
class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace minlen

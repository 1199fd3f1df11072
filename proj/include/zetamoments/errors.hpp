#pragma once

#include <complex>
#include <stdexcept>
#include <string>

namespace zm {

using Complex = std::complex<double>;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Argument outside the domain of a function (branch cut, half-plane, strip).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Argument at a pole (Gamma at non-positive integers, zeta at 1, phi1 at 2 pi i n).
class PoleError : public Error {
public:
    using Error::Error;
};

/// A table or series would need more storage than allowed.
class CapacityError : public Error {
public:
    using Error::Error;
};

/// Integrand or summand produced NaN or infinity.
class NonFiniteError : public Error {
public:
    using Error::Error;
};

/// Desk-scale guard refused a parameter (e.g. delta too small) without override.
class GuardError : public Error {
public:
    using Error::Error;
};

/// Requested accuracy could not be reached; carries the best value found.
class ToleranceNotMet : public Error {
public:
    ToleranceNotMet(const std::string& what, Complex best, double err_estimate)
        : Error(what), best_(best), err_(err_estimate) {}

    Complex best_value() const noexcept { return best_; }
    double err_estimate() const noexcept { return err_; }

private:
    Complex best_;
    double err_;
};

}  // namespace zm

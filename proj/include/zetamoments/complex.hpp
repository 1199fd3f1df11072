#pragma once

#include <cmath>
#include <numbers>

#include "zetamoments/errors.hpp"

namespace zm {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kEulerGamma = std::numbers::egamma;
inline const double kLog2Pi = std::log(2.0 * std::numbers::pi);

/// c = (log(2 pi) - gamma) / 2, the constant of the elementary part r(z).
inline const double kHalfLog2PiMinusGamma = 0.5 * (std::log(2.0 * std::numbers::pi) - std::numbers::egamma);

inline bool is_finite(Complex z) noexcept {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

/// True when z lies on the cut (-inf, 0] of the principal logarithm.
inline bool on_negative_axis(Complex z) noexcept {
    return z.imag() == 0.0 && !(z.real() > 0.0);
}

/// Principal logarithm log|z| + i Arg z with Arg in (-pi, pi); throws on the cut.
Complex log_principal(Complex z);

/// log(cosh(x)) without overflow.
inline double log_cosh(double x) noexcept {
    const double ax = std::fabs(x);
    return ax + std::log1p(std::exp(-2.0 * ax)) - std::numbers::ln2;
}

// Validated points. Construction throws DomainError when the invariant fails,
// so a function taking one of these never sees an out-of-domain argument.

/// z in C' = C \ (-inf, 0].
class CutPlanePoint {
public:
    CutPlanePoint(Complex z);  // NOLINT(google-explicit-constructor)
    CutPlanePoint(double x) : CutPlanePoint(Complex(x, 0.0)) {}  // NOLINT(google-explicit-constructor)
    Complex value() const noexcept { return z_; }
    operator Complex() const noexcept { return z_; }  // NOLINT

private:
    Complex z_;
};

/// z with Re z > 0.
class RightHalfPoint {
public:
    RightHalfPoint(Complex z);  // NOLINT(google-explicit-constructor)
    RightHalfPoint(double x) : RightHalfPoint(Complex(x, 0.0)) {}  // NOLINT(google-explicit-constructor)
    Complex value() const noexcept { return z_; }
    operator Complex() const noexcept { return z_; }  // NOLINT

private:
    Complex z_;
};

/// z in the strip |Im z| < pi where B is holomorphic.
class StripPoint {
public:
    StripPoint(Complex z);  // NOLINT(google-explicit-constructor)
    StripPoint(double x) : StripPoint(Complex(x, 0.0)) {}  // NOLINT(google-explicit-constructor)
    Complex value() const noexcept { return z_; }
    operator Complex() const noexcept { return z_; }  // NOLINT

private:
    Complex z_;
};

/// z in the upper half-plane, Im z > 0.
class UpperHalfPoint {
public:
    UpperHalfPoint(Complex z);  // NOLINT(google-explicit-constructor)
    UpperHalfPoint(double x) : UpperHalfPoint(Complex(x, 0.0)) {}  // NOLINT(google-explicit-constructor)
    Complex value() const noexcept { return z_; }
    operator Complex() const noexcept { return z_; }  // NOLINT

private:
    Complex z_;
};

}  // namespace zm

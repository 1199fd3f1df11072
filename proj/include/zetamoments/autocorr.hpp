#pragma once

#include <vector>

#include "zetamoments/complex.hpp"
#include "zetamoments/quadrature.hpp"

namespace zm {

/// phi_1(z) = 1/(e^z - 1) - 1/z with phi_1(0) = -1/2. Bernoulli series for
/// |z| <= 1/2, closed form otherwise. Throws PoleError at z = 2 pi i n, n != 0.
Complex phi1(Complex z);

/// A(z) = int_0^inf phi_1(xz) phi_1(x) dx for Re z > 0.
Complex A_integral(RightHalfPoint z, const QuadSpec& spec = {});

/// Large-|z| expansion (log z + log 2pi - gamma)/(2z) + sum_m zeta(2m) B_2m / (2m) z^{-2m},
/// folded through A(z) = A(1/z)/z for |z| < 1. Accurate to double precision for
/// |z| >= 1e4 or |z| <= 1e-4 with |Arg z| <= pi - 0.05.
Complex A_asymptotic(CutPlanePoint z);

/// B(z) = int_0^inf phi_1(x e^{z/2}) phi_1(x e^{-z/2}) dx on |Im z| < pi.
Complex B_integral(StripPoint z, const QuadSpec& spec = {});

/// Q(s) = Gamma(s) zeta(s) Gamma(1-s) zeta(1-s) on 0 < Re s < 1.
Complex Q(Complex s);

/// B(z) = (1/2pi) int e^{izt} |zeta(1/2+it)|^2 pi / cosh(pi t) dt, |Im z| <= pi - 0.05.
Complex B_fourier(Complex z, const QuadSpec& spec = {});

/// A(z) = (1/2pi) int z^{-1/2+it} Q(1/2-it) dt on C' with |Arg z| <= pi - 0.05.
Complex A_continuation(CutPlanePoint z, const QuadSpec& spec = {});

/// A on C': asymptotic expansion at extreme moduli, the defining integral when
/// |Arg z| <= 1, the continuation integral otherwise.
Complex A(CutPlanePoint z, const QuadSpec& spec = {});

/// int_0^inf A(x) x^{s-1} dx, computed as int_0^Y B(y) 2 cosh((s-1/2) y) dy plus the
/// tail from the large-|z| expansion of A. Should equal Q(s) on 0 < Re s < 1.
Complex mellin_A_numeric(Complex s, const QuadSpec& spec = {});

/// B(y) for real y, even in y; expansion beyond |y| = 20.
double B_real(double y, const QuadSpec& spec = {});

/// k-fold additive convolution of B at real z, k in {2, 3}, from values of B_integral
/// (trapezoid sums over R^{k-1}; B is analytic in |Im x| < pi so the rule converges
/// geometrically in the step).
QuadResult B_conv(double z, int k, const QuadSpec& spec = {});

/// The same quantity through (1/2pi) int e^{izt} (pi |zeta(1/2+it)|^2 / cosh(pi t))^k dt.
QuadResult B_conv_fourier(double z, int k, const QuadSpec& spec = {});

/// Precomputed quadrature of the continuation integral along one ray Arg z = arg.
/// Used where A is needed at many moduli on the same ray.
class ContinuationKernel {
public:
    /// |arg| <= pi - 0.05; `tol` bounds the truncation and the panel rule error.
    ContinuationKernel(double arg, double tol = 1e-12);

    double arg() const noexcept { return arg_; }
    std::size_t size() const noexcept { return t_.size(); }

    /// A(r e^{i arg}) for r > 0; expansion outside 1e-4 <= r <= 1e4.
    Complex operator()(double r) const;

private:
    double arg_;
    std::vector<double> t_;
    std::vector<double> c_;  // rule weight times |zeta|^2 e^{-t arg} / (2 cosh(pi t))
};

}  // namespace zm

#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetamoments/complex.hpp"
#include "zetamoments/quadrature.hpp"

namespace zm {

/// Riemann zeta by Euler-Maclaurin summation on 0 < Re s <= 2, s != 1, |Im s| <= 500.
/// `tol` bounds the Euler-Maclaurin remainder.
Complex zeta(Complex s, double tol = 1e-15);

/// zeta(j) for integer j >= 2: exact Bernoulli formula for even j,
/// Euler-Maclaurin for odd j.
double zeta_integer(int j);

/// zeta(1/2 + it) together with |zeta(1/2 + it)|^2.
struct CriticalPoint {
    double t = 0.0;
    Complex value;
    double sq_modulus = 0.0;
};

CriticalPoint critical_point(double t);

/// |zeta(1/2 + it)|^2 (conjugate symmetry makes this even in t).
double zeta_sq_modulus(double t);

/// e^{k (pi - delta) t} / cosh(pi t)^k, evaluated in log space.
double weight(int k, double delta, double t);

/// log of weight(k, delta, t).
double log_weight(int k, double delta, double t);

enum class Method { direct, formula_k1, formula_k2, formula_k3, multi_integral, closed_form };

std::string_view to_string(Method m);
Method method_from_string(std::string_view name);

enum class GuardPolicy { enforce, override_guards };

/// Smallest delta accepted by the moment routes unless guards are overridden.
inline constexpr double kDeltaFloor = 0.05;

/// One evaluation of the weighted moment M_{2k}(delta).
struct MomentReport {
    int k = 1;
    double delta = 0.0;
    double value = 0.0;
    double err_estimate = 0.0;
    Method method = Method::direct;
    /// Named intermediate terms in insertion order (main term, remainders, ...).
    std::vector<std::pair<std::string, Complex>> breakdown;

    /// Breakdown entry by name; throws std::out_of_range if absent.
    Complex term(std::string_view name) const;
};

/// M_{2k}(delta) = int |zeta(1/2+it)|^{2k} e^{k(pi-delta)t} / cosh(pi t)^k dt by
/// adaptive quadrature over [-T-, T+] with tails bounded by the weight envelope.
/// delta must lie in [0.05, pi) (lower guard waived by GuardPolicy::override_guards).
MomentReport moment_direct(int k, double delta, const QuadSpec& spec,
                           GuardPolicy policy = GuardPolicy::enforce);

}  // namespace zm

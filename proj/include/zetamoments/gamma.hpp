#pragma once

#include "zetamoments/complex.hpp"

namespace zm {

/// log Gamma(z) for Re z >= 1/2 (Lanczos, g = 607/128). Branch is continuous
/// in z on that half-plane, not the principal log of Gamma.
Complex log_gamma_right(Complex z);

/// Gamma(z). Lanczos on Re z >= 1/2, reflection Gamma(z) Gamma(1-z) = pi / sin(pi z)
/// below. Relative accuracy ~1e-14 on Re z in [-10, 50], |Im z| <= 100.
/// Throws PoleError at non-positive integers.
Complex gamma(Complex z);

}  // namespace zm

#pragma once

#include <cstddef>

#include "zetamoments/complex.hpp"
#include "zetamoments/quadrature.hpp"
#include "zetamoments/verify.hpp"

namespace zm {

/// Smallest Im z accepted by the Eisenstein series.
inline constexpr double kImFloor = 1e-4;

/// Number of terms N with sum_{n > N} n e^{-2 pi n y} <= tol.
std::size_t s0_terms(double y, double tol);

/// sum_{n <= N} d(n) e^{2 pi i n z} with compensated summation.
Complex S0_partial(UpperHalfPoint z, std::size_t n_terms);

/// S_0(z) = sum d(n) e^{2 pi i n z}, truncated by the d(n) <= n tail bound.
/// Throws DomainError for Im z < 1e-4, CapacityError past the sieve limit.
Complex S0(UpperHalfPoint z, double tol = 1e-15);

/// E_1(z) = 1 - 4 S_0(z).
Complex E1(UpperHalfPoint z, double tol = 1e-15);

/// psi(z) = E_1(z) - E_1(-1/z) / z on the upper half-plane.
Complex psi_upper(UpperHalfPoint z, double tol = 1e-15);

/// r(z) = c (1/z + 1) + (1/z - 1) log(z) / 2, c = (log 2pi - gamma) / 2.
Complex r_func(CutPlanePoint z);

/// (4 / (i pi)) (A(z) - r(z)), the continuation of psi through A.
Complex psi_from_A(CutPlanePoint z, const QuadSpec& spec = {});

/// A(z) + A(-z) against (2 pi i / z) S_0(-1/z) + log(2 pi / z) - gamma + i pi / 2.
/// Requires 0.05 <= Arg z <= pi - 0.05 so both A values are in range.
VerifyResult check_feq_iii(UpperHalfPoint z, const QuadSpec& spec = {}, double tol = 1e-7);

/// S(u) = 2 pi i e^{-i delta} S_0(-e^{-i delta} / u) / u for u > 0, 0 < delta < pi/2.
Complex S_term(double u, double delta, double tol = 1e-15);

/// R(u) = -A(u e^{i delta}) - log u + log 2pi - gamma + i pi/2 - i delta for 0 < u <= 1.
Complex R_term(double u, double delta, const QuadSpec& spec = {});

/// A(-u e^{i delta}) split as S(u) + R(u).
struct SRDecomposition {
    double u = 0.0;
    double delta = 0.0;
    Complex s_part;
    Complex r_part;
    Complex total() const { return s_part + r_part; }
};

SRDecomposition sr_decomposition(double u, double delta, const QuadSpec& spec = {});

}  // namespace zm

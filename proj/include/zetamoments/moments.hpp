#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "zetamoments/combinatorics.hpp"
#include "zetamoments/complex.hpp"
#include "zetamoments/quadrature.hpp"
#include "zetamoments/zeta.hpp"

namespace zm {

/// Lower delta guards of the formula routes (waived down to kDeltaFloor by
/// GuardPolicy::override_guards).
inline constexpr double kFormulaK3Floor = 0.2;
inline constexpr double kMultiK2Floor = 0.1;
inline constexpr double kMultiK3Floor = 0.3;

/// R(u) = -A(u e^{i delta}) - log u + log 2pi - gamma + i(pi/2 - delta) as a function
/// of s = -log u >= 0. Chebyshev interpolation of R_term on panels of [0, ln 1e4],
/// the large-|z| expansion of A beyond. Interpolation error is below 1e-13.
class RFunction {
public:
    explicit RFunction(double delta, const QuadSpec& spec = {});

    double delta() const noexcept { return delta_; }
    Complex operator()(double s) const;

private:
    double delta_;
    double width_;
    std::vector<Complex> values_;  // panel-major, kNodes per panel
};

/// S(u) = 2 pi i e^{-i delta} S_0(-e^{-i delta}/u)/u at u = e^{-s}.
Complex S_of_log(double s, double delta, double tol = 1e-15);

/// Second moment through the continuation of A and through the Titchmarsh form.
/// delta in [0.05, pi/2).
MomentReport formula_k1(double delta, const QuadSpec& spec = {}, GuardPolicy policy = GuardPolicy::enforce);

/// Fourth moment as 16 pi int_1^inf |S_0(e^{i delta} u)|^2 du + R~1 + R~2.
/// delta in [0.05, pi/2).
MomentReport formula_k2(double delta, const QuadSpec& spec = {}, GuardPolicy policy = GuardPolicy::enforce);

struct K3Breakdown {
    double delta = 0.0;
    /// M = int_1^inf int_1^inf S_0(-e^{-i delta}u) S_0(-e^{-i delta}v) S_0(e^{i delta}uv) du dv.
    Complex main_M;
    /// The same integral with the arguments conjugated (the opposite orientation).
    Complex main_M_conj;
    std::array<Complex, 5> remainders{};
    double assembled = 0.0;

    /// 96 pi Re(e^{i delta/2} conj(M)) - (12/pi^2) Re(i e^{i delta/2} sum R_j).
    static double assemble(double delta, Complex main_M, const std::array<Complex, 5>& remainders);
    double main_value() const;
};

struct K3Result {
    MomentReport report;
    K3Breakdown parts;
};

/// Sixth moment through the double-integral main term and the five remainders.
/// delta in [0.2, pi/2); [0.05, pi/2) with override.
K3Result formula_k3(double delta, const QuadSpec& spec = {}, GuardPolicy policy = GuardPolicy::enforce);

/// M_{2k}(delta) = 2 e^{ik(delta-pi)/2} / pi^{k-1} int A(-e^{i delta}/prod u_j) prod A(-u_j e^{i delta}) du_j/u_j
/// for k in {2, 3}, as a trapezoid sum in x_j = log u_j. For k = 2 the breakdown also
/// carries (4/pi) int_0^1 |A(-u e^{i delta})|^2 du.
MomentReport multi_integral_form(int k, double delta, const QuadSpec& spec = {},
                                 GuardPolicy policy = GuardPolicy::enforce);

/// T_{N,j} = (j-1)! sum_{2<=n<=N} C(N,n) 2^n [(-1)^n S(n+1,j) + (-1)^j S(n,j-1)].
/// 0 for N < 2; otherwise requires 2 <= j <= N <= 40.
BigInt t_coeff(int N, int j);

struct PolyMomentResult {
    int N = 0;
    double lhs = 0.0;
    double rhs = 0.0;
    double lhs_err = 0.0;
    std::vector<BigInt> t_coeffs;  // T_{2N,j}, j = 2..2N
};

/// (-4)^N/2 int t^{2N} |zeta(1/2+it)|^2 / cosh(pi t) dt against
/// log 2pi - gamma - 4N + (4^N/2 - 1) B_2N + sum_j T_{2N,j} zeta(j) B_j / j, 0 <= N <= 6.
PolyMomentResult closed_form_poly(int N, const QuadSpec& spec = {});

/// Right-hand side of closed_form_poly alone, evaluated in 50-digit arithmetic.
double closed_form_rhs(int N);

struct ScanRow {
    double delta = 0.0;
    std::optional<MomentReport> report;
    std::string error;
    /// value delta / log^{k^2}(1/delta); empty at delta = 1.
    std::optional<double> ratio;
    double main = 0.0;
    /// Remainder contributions, in the units of the moment itself.
    std::vector<double> remainders;
    /// sum |remainders| / |main|.
    double remainder_fraction = 0.0;
    /// |remainder_j| / |main|.
    std::vector<double> fractions;
};

/// One formula-route evaluation per grid point (formula_k1/k2/k3). Failures are
/// recorded in the row and the scan continues; rows keep grid order.
std::vector<ScanRow> scan_delta(int k, const std::vector<double>& delta_grid, const QuadSpec& spec = {},
                                GuardPolicy policy = GuardPolicy::enforce);

}  // namespace zm

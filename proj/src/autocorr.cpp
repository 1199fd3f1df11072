#include "zetamoments/autocorr.hpp"

#include <array>
#include <numbers>

#include "zetamoments/combinatorics.hpp"
#include "zetamoments/gamma.hpp"
#include "zetamoments/zeta.hpp"

namespace zm {

namespace {

constexpr double kArgMargin = 0.05;
constexpr double kAsymptoticModulus = 1e4;
constexpr int kPhiSeriesTerms = 30;

const std::array<double, kPhiSeriesTerms>& phi_series() {
    static const auto table = [] {
        std::array<double, kPhiSeriesTerms> c{};
        for (int n = 0; n < kPhiSeriesTerms; ++n) c[static_cast<std::size_t>(n)] = bernoulli_over_factorial(n + 1);
        return c;
    }();
    return table;
}

// zeta(2m) B_{2m} / (2m), the coefficient of z^{-2m} in the expansion of A.
const std::array<double, 9>& asymptotic_coefficients() {
    static const auto table = [] {
        std::array<double, 9> a{};
        for (int m = 1; m < 9; ++m) a[static_cast<std::size_t>(m)] = zeta_integer(2 * m) * bernoulli(2 * m) / (2.0 * m);
        return a;
    }();
    return table;
}

double arg_of(Complex z) { return std::atan2(z.imag(), z.real()); }

// int_0^inf phi_1(x p) phi_1(x q) dx for Re p, Re q > 0. The variable is rescaled
// by the smaller modulus, and the algebraic tail 1/(pq x^2) is removed with
// ((1 - e^{-x})/x)^2, whose integral is 2 log 2.
QuadResult product_integral(Complex p, Complex q, const QuadSpec& spec) {
    const double s = std::min(std::abs(p), std::abs(q));
    const Complex P = p / s;
    const Complex Qv = q / s;
    const Complex PQ = P * Qv;
    const double lambda = std::min({1.0, P.real(), Qv.real()});
    if (!(lambda > 0.0)) throw DomainError("product integral: arguments must have positive real part");

    const double u = 1.0 / -std::expm1(-lambda);
    const double envelope = u * u + u / std::abs(P) + u / std::abs(Qv) + 2.0 / std::abs(PQ);

    auto f = [P, Qv, PQ](double x) {
        const double g = std::expm1(-x) / x;
        return phi1(x * P) * phi1(x * Qv) - g * g / PQ;
    };

    QuadSpec local = spec.scaled(1.0);
    local.abs_tol = std::min(0.5, spec.abs_tol * s);
    const double cut = std::max(spec.tail_cutoff, std::log(envelope / local.abs_tol) / lambda);
    std::vector<double> bp{0.0};
    for (double x = std::min(1.0, 1.0 / std::max(std::abs(P), std::abs(Qv))); x < cut; x *= 4.0) bp.push_back(x);
    bp.push_back(cut);
    auto r = adaptive_integrate<Complex>(f, bp, local, std::max(1.0, cut / 64.0));
    const double tail = envelope * std::exp(-lambda * cut) / lambda;
    const Complex value = (2.0 * std::numbers::ln2 / PQ + r.value) / s;
    return {value, (r.err_estimate + tail) / s, r.evaluations};
}

// (1/2pi) int e^{iwt} (pi |zeta(1/2+it)|^2 / cosh(pi t))^k dt.
QuadResult ramanujan_integral(Complex w, int k, const QuadSpec& spec) {
    const double y = w.imag();
    const double x = w.real();
    const double rate_plus = k * kPi + y;
    const double rate_minus = k * kPi - y;
    if (!(rate_plus > 0.0 && rate_minus > 0.0)) throw DomainError("Fourier integral: |Im z| must be below k pi");

    // |zeta|^2 <= 3(1+|t|) and 1/cosh <= 2 e^{-pi|t|}.
    const double prefactor = std::pow(kPi, k - 1) / 2.0 * std::pow(6.0, k);
    const double tail_tol = spec.abs_tol / 4.0;
    const double t_plus = truncation_point(rate_plus, k, prefactor, tail_tol);
    const double t_minus = truncation_point(rate_minus, k, prefactor, tail_tol);
    if (t_plus > 500.0 || t_minus > 500.0)
        throw ToleranceNotMet("Fourier integral: truncation beyond the zeta ordinate limit", 0.0,
                              envelope_tail(std::min(rate_plus, rate_minus), k, prefactor, 500.0));

    const double scale = std::pow(kPi, k - 1) / 2.0;
    auto f = [x, y, k, scale](double t) {
        const double sq = zeta_sq_modulus(t);
        const double mag = scale * std::pow(sq, k) * std::exp(-y * t - k * log_cosh(kPi * t));
        return std::polar(mag, x * t);
    };
    const std::array<double, 3> bp{-t_minus, 0.0, t_plus};
    auto r = adaptive_integrate<Complex>(f, bp, spec, 0.25);
    const double tails = envelope_tail(rate_plus, k, prefactor, t_plus) + envelope_tail(rate_minus, k, prefactor, t_minus);
    return {r.value, r.err_estimate + tails, r.evaluations};
}

Complex asymptotic_large(Complex z) {
    const Complex logz = log_principal(z);
    Complex value = (logz + 2.0 * kHalfLog2PiMinusGamma) / (2.0 * z);
    const Complex inv2 = 1.0 / (z * z);
    Complex power = inv2;
    const auto& a = asymptotic_coefficients();
    for (std::size_t m = 1; m < a.size(); ++m) {
        const Complex term = a[m] * power;
        value += term;
        if (std::abs(term) < 1e-18 * std::abs(value)) break;
        power *= inv2;
    }
    return value;
}

}  // namespace

Complex phi1(Complex z) {
    if (!is_finite(z)) throw DomainError("phi1: non-finite argument");
    if (std::abs(z) <= 0.5) {
        const auto& c = phi_series();
        Complex sum = c[kPhiSeriesTerms - 1];
        for (int n = kPhiSeriesTerms - 2; n >= 0; --n) sum = sum * z + c[static_cast<std::size_t>(n)];
        return sum;
    }
    const double n = std::round(z.imag() / (2.0 * kPi));
    if (n != 0.0 && std::abs(z - Complex(0.0, 2.0 * kPi * n)) < 1e-13 * std::abs(z))
        throw PoleError("phi1: pole at 2 pi i n");
    if (z.real() > 0.0) {
        const Complex e = std::exp(-z);
        return e / (1.0 - e) - 1.0 / z;
    }
    return 1.0 / (std::exp(z) - 1.0) - 1.0 / z;
}

Complex A_integral(RightHalfPoint z, const QuadSpec& spec) {
    spec.validate();
    return product_integral(z.value(), 1.0, spec).value;
}

Complex A_asymptotic(CutPlanePoint z) {
    const Complex w = z.value();
    if (std::fabs(arg_of(w)) > kPi - kArgMargin) throw DomainError("A_asymptotic: |Arg z| exceeds pi - 0.05");
    if (std::abs(w) >= 1.0) return asymptotic_large(w);
    return asymptotic_large(1.0 / w) / w;
}

Complex B_integral(StripPoint z, const QuadSpec& spec) {
    spec.validate();
    const Complex a = std::exp(z.value() / 2.0);
    return product_integral(a, 1.0 / a, spec).value;
}

Complex Q(Complex s) {
    if (!(s.real() > 0.0 && s.real() < 1.0)) throw DomainError("Q: requires 0 < Re s < 1");
    return gamma(s) * zeta(s) * gamma(1.0 - s) * zeta(1.0 - s);
}

Complex B_fourier(Complex z, const QuadSpec& spec) {
    spec.validate();
    if (!is_finite(z) || std::fabs(z.imag()) > kPi - kArgMargin)
        throw DomainError("B_fourier: requires |Im z| <= pi - 0.05");
    return ramanujan_integral(z, 1, spec).value;
}

Complex A_continuation(CutPlanePoint z, const QuadSpec& spec) {
    spec.validate();
    const Complex w = log_principal(z.value());
    if (std::fabs(w.imag()) > kPi - kArgMargin) throw DomainError("A_continuation: |Arg z| exceeds pi - 0.05");
    const double root = std::exp(w.real() / 2.0);
    QuadSpec local = spec;
    local.abs_tol = std::min(0.5, spec.abs_tol * root);
    return std::exp(-w / 2.0) * ramanujan_integral(w, 1, local).value;
}

Complex A(CutPlanePoint z, const QuadSpec& spec) {
    const Complex w = z.value();
    const double r = std::abs(w);
    if (r >= kAsymptoticModulus || r <= 1.0 / kAsymptoticModulus) return A_asymptotic(z);
    if (std::fabs(arg_of(w)) <= 1.0) return A_integral(w, spec);
    return A_continuation(z, spec);
}

double B_real(double y, const QuadSpec& spec) {
    const double ay = std::fabs(y);
    if (ay > 20.0) return (std::exp(ay / 2.0) * A_asymptotic(std::exp(ay))).real();
    return B_integral(ay, spec).real();
}

Complex mellin_A_numeric(Complex s, const QuadSpec& spec) {
    spec.validate();
    if (!(s.real() > 0.0 && s.real() < 1.0)) throw DomainError("mellin_A_numeric: requires 0 < Re s < 1");
    constexpr double Y = 12.0;
    const QuadSpec inner = spec.scaled(0.1);
    auto f = [&](double y) { return B_real(y, inner) * 2.0 * std::cosh((s - 0.5) * y); };
    const std::array<double, 2> bp{0.0, Y};
    const auto head = adaptive_integrate<Complex>(f, bp, spec, 1.0);

    const double c = kHalfLog2PiMinusGamma;
    Complex tail = 0.0;
    for (const Complex beta : {1.0 - s, s}) tail += std::exp(-beta * Y) * ((Y / 2.0 + c) / beta + 0.5 / (beta * beta));
    const auto& a = asymptotic_coefficients();
    for (int m = 1; m <= 4; ++m) {
        const Complex b1 = 2.0 * m - s;
        const Complex b2 = 2.0 * m + s - 1.0;
        tail += a[static_cast<std::size_t>(m)] * (std::exp(-b1 * Y) / b1 + std::exp(-b2 * Y) / b2);
    }
    return head.value + tail;
}

QuadResult B_conv(double z, int k, const QuadSpec& spec) {
    spec.validate();
    if (k != 2 && k != 3) throw DomainError("B_conv: k must be 2 or 3");
    if (!std::isfinite(z)) throw DomainError("B_conv: z must be finite");
    // B(x) = O(|x| e^{-|x|/2}); beyond |x| = 64 the mass is below 1e-12.
    constexpr double h = 0.5;
    constexpr long n = 128;
    const QuadSpec inner = spec.scaled(0.01);
    const double shift = z / k;
    const long span = (k == 2) ? n : 2 * n;
    std::vector<double> g(static_cast<std::size_t>(2 * span + 1));
    for (long j = -span; j <= span; ++j) g[static_cast<std::size_t>(j + span)] = B_real(shift + h * j, inner);
    auto at = [&](long j) { return g[static_cast<std::size_t>(j + span)]; };

    auto trapezoid = [&](long stride) {
        detail::KahanSum<double> sum;
        const double step = h * stride;
        if (k == 2) {
            for (long j = -n; j <= n; j += stride) sum.add(at(-j) * at(j));
            return sum.value() * step;
        }
        for (long i = -n; i <= n; i += stride)
            for (long j = -n; j <= n; j += stride) sum.add(at(-i - j) * at(i) * at(j));
        return sum.value() * step * step;
    };
    const double fine = trapezoid(1);
    const double coarse = trapezoid(2);
    const long evals = static_cast<long>(g.size());
    return {fine, std::fabs(fine - coarse), evals};
}

QuadResult B_conv_fourier(double z, int k, const QuadSpec& spec) {
    spec.validate();
    if (k < 1 || k > 3) throw DomainError("B_conv_fourier: k must be 1, 2 or 3");
    return ramanujan_integral(z, k, spec);
}

ContinuationKernel::ContinuationKernel(double arg, double tol) : arg_(arg) {
    if (!(std::fabs(arg) <= kPi - kArgMargin)) throw DomainError("ContinuationKernel: |arg| exceeds pi - 0.05");
    if (!(tol > 0.0 && tol < 1.0)) throw DomainError("ContinuationKernel: tol must lie in (0, 1)");
    constexpr double width = 0.25;
    constexpr double prefactor = 3.0;
    const double t_plus = truncation_point(kPi + arg, 1.0, prefactor, tol / 4.0);
    const double t_minus = truncation_point(kPi - arg, 1.0, prefactor, tol / 4.0);
    if (t_plus > 500.0 || t_minus > 500.0) throw ToleranceNotMet("ContinuationKernel: truncation beyond 500", 0.0, tol);
    const long lo = -static_cast<long>(std::ceil(t_minus / width));
    const long hi = static_cast<long>(std::ceil(t_plus / width));

    const auto rule = gauss_legendre(20);
    t_.reserve(static_cast<std::size_t>(hi - lo) * rule.nodes.size());
    c_.reserve(t_.capacity());
    for (long p = lo; p < hi; ++p) {
        const double mid = (p + 0.5) * width;
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double t = mid + 0.5 * width * rule.nodes[i];
            const double w = 0.5 * width * rule.weights[i];
            t_.push_back(t);
            c_.push_back(w * 0.5 * zeta_sq_modulus(t) * std::exp(-t * arg - log_cosh(kPi * t)));
        }
    }
}

Complex ContinuationKernel::operator()(double r) const {
    if (!(r > 0.0) || !std::isfinite(r)) throw DomainError("ContinuationKernel: modulus must be positive");
    if (r >= kAsymptoticModulus || r <= 1.0 / kAsymptoticModulus) return A_asymptotic(std::polar(r, arg_));
    const double ell = std::log(r);
    double re = 0.0;
    double im = 0.0;
    for (std::size_t i = 0; i < t_.size(); ++i) {
        const double phase = t_[i] * ell;
        re += c_[i] * std::cos(phase);
        im += c_[i] * std::sin(phase);
    }
    return std::exp(Complex(-ell / 2.0, -arg_ / 2.0)) * Complex(re, im);
}

}  // namespace zm

#include "zetamoments/eisenstein.hpp"

#include "zetamoments/autocorr.hpp"
#include "zetamoments/sieve.hpp"

namespace zm {

namespace {

void check_delta(double delta, const char* who) {
    if (!(delta > 0.0 && delta < kPi / 2)) throw DomainError(std::string(who) + ": delta must lie in (0, pi/2)");
}

}  // namespace

std::size_t s0_terms(double y, double tol) {
    if (!(y > 0.0)) throw DomainError("s0_terms: Im z must be positive");
    if (!(tol > 0.0)) throw DomainError("s0_terms: tol must be positive");
    // sum_{n > N} n q^n = q^{N+1} ((N+1) - N q) / (1-q)^2
    const double log_q = -2.0 * kPi * y;
    const double one_minus_q = -std::expm1(log_q);
    const double q = std::exp(log_q);
    auto tail = [&](double n) {
        return std::exp((n + 1.0) * log_q) * ((n + 1.0) - n * q) / (one_minus_q * one_minus_q);
    };
    // Geometric search then bisection on the monotone tail.
    double hi = 1.0;
    while (tail(hi) > tol) {
        hi *= 2.0;
        if (hi > 4.0 * static_cast<double>(kSieveHardLimit))
            throw CapacityError("S0: series length exceeds the hard sieve limit");
    }
    double lo = 0.0;
    if (tail(lo) <= tol) return 0;
    while (hi - lo > 1.0) {
        const double mid = std::floor(0.5 * (lo + hi));
        (tail(mid) > tol ? lo : hi) = mid;
    }
    return static_cast<std::size_t>(hi);
}

Complex S0_partial(UpperHalfPoint z, std::size_t n_terms) {
    if (n_terms == 0) return 0.0;
    const auto table = shared_divisors(n_terms);
    const Complex w = z.value();
    detail::KahanSum<Complex> sum;
    for (std::size_t n = 1; n <= n_terms; ++n) {
        const double dn = static_cast<double>(n);
        const Complex term = std::exp(Complex(-2.0 * kPi * dn * w.imag(), 2.0 * kPi * dn * w.real()));
        sum.add(static_cast<double>((*table)(n)) * term);
    }
    return sum.value();
}

Complex S0(UpperHalfPoint z, double tol) {
    if (z.value().imag() < kImFloor) throw DomainError("S0: Im z below the floor 1e-4");
    if (!is_finite(z.value())) throw DomainError("S0: non-finite argument");
    return S0_partial(z, s0_terms(z.value().imag(), tol));
}

Complex E1(UpperHalfPoint z, double tol) { return 1.0 - 4.0 * S0(z, tol / 4.0); }

Complex psi_upper(UpperHalfPoint z, double tol) {
    const Complex w = z.value();
    return E1(w, tol) - E1(-1.0 / w, tol) / w;
}

Complex r_func(CutPlanePoint z) {
    const Complex w = z.value();
    const Complex inv = 1.0 / w;
    return kHalfLog2PiMinusGamma * (inv + 1.0) + 0.5 * (inv - 1.0) * log_principal(w);
}

Complex psi_from_A(CutPlanePoint z, const QuadSpec& spec) {
    return 4.0 / Complex(0.0, kPi) * (A(z, spec) - r_func(z));
}

VerifyResult check_feq_iii(UpperHalfPoint z, const QuadSpec& spec, double tol) {
    const Complex w = z.value();
    const double arg = std::arg(w);
    if (arg < 0.05 || arg > kPi - 0.05) throw DomainError("check_feq_iii: Arg z must lie in [0.05, pi - 0.05]");
    const Complex a_plus = A(w, spec);
    const Complex a_minus = A(-w, spec);
    const Complex s = S0(-1.0 / w, spec.series_tol);
    const Complex rhs = Complex(0.0, 2.0 * kPi) / w * s + kLog2Pi - log_principal(w) - kEulerGamma +
                        Complex(0.0, kPi / 2);
    auto r = make_result("feq-iii", a_plus + a_minus, rhs, tol, false);
    r.details = {{"A(z)", a_plus}, {"A(-z)", a_minus}, {"S0(-1/z)", s}};
    return r;
}

Complex S_term(double u, double delta, double tol) {
    check_delta(delta, "S_term");
    if (!(u > 0.0) || !std::isfinite(u)) throw DomainError("S_term: u must be positive");
    if (u / delta > 1e6) throw CapacityError("S_term: u / delta exceeds 1e6");
    const Complex rot = std::polar(1.0, -delta);
    return Complex(0.0, 2.0 * kPi) * rot * S0(-rot / u, tol) / u;
}

Complex R_term(double u, double delta, const QuadSpec& spec) {
    check_delta(delta, "R_term");
    if (!(u > 0.0 && u <= 1.0)) throw DomainError("R_term: u must lie in (0, 1]");
    const Complex a = A_integral(std::polar(u, delta), spec);
    return -a - std::log(u) + kLog2Pi - kEulerGamma + Complex(0.0, kPi / 2 - delta);
}

SRDecomposition sr_decomposition(double u, double delta, const QuadSpec& spec) {
    return {u, delta, S_term(u, delta, spec.series_tol), R_term(u, delta, spec)};
}

}  // namespace zm

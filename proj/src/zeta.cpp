#include "zetamoments/zeta.hpp"

#include <array>
#include <stdexcept>

#include "zetamoments/combinatorics.hpp"

namespace zm {

namespace {

constexpr int kMaxCorrections = 30;
constexpr double kMaxOrdinate = 500.0;

// B_{2j} / (2j)! for j = 1..30.
const std::array<double, kMaxCorrections + 1>& em_coefficients() {
    static const auto table = [] {
        std::array<double, kMaxCorrections + 1> c{};
        for (int j = 1; j <= kMaxCorrections; ++j) c[static_cast<std::size_t>(j)] = bernoulli_over_factorial(2 * j);
        return c;
    }();
    return table;
}

struct EmOutcome {
    Complex value;
    bool converged;
};

// Euler-Maclaurin with N - 1 explicit terms:
// zeta(s) = sum_{n<N} n^{-s} + N^{1-s}/(s-1) + N^{-s}/2
//           + sum_j B_{2j}/(2j)! s(s+1)...(s+2j-2) N^{-s-2j+1}.
EmOutcome euler_maclaurin(Complex s, double tol, long n_terms) {
    detail::KahanSum<Complex> head;
    for (long n = 1; n < n_terms; ++n) head.add(std::exp(-s * std::log(static_cast<double>(n))));

    const double big_n = static_cast<double>(n_terms);
    const Complex n_pow = std::exp(-s * std::log(big_n));
    Complex tail = n_pow * (big_n / (s - 1.0) + 0.5);

    const auto& coef = em_coefficients();
    Complex rising = s;  // s (s+1) ... (s+2j-2)
    double n_factor = 1.0 / big_n;  // N^{1-2j}
    const double inv_n2 = 1.0 / (big_n * big_n);
    for (int j = 1; j <= kMaxCorrections; ++j) {
        const Complex term = coef[static_cast<std::size_t>(j)] * rising * n_factor * n_pow;
        tail += term;
        // Remainder after j corrections is bounded by |s+2j+1| / (Re s + 2j + 1) times the next term.
        const Complex next_rising = rising * (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        const double next = std::abs(coef[static_cast<std::size_t>(std::min(j + 1, kMaxCorrections))] * next_rising *
                                     n_factor * inv_n2 * n_pow);
        const double bound = next * std::abs(s + (2.0 * j + 1.0)) / (s.real() + 2.0 * j + 1.0);
        if (j < kMaxCorrections && bound <= tol) return {head.value() + tail, true};
        rising = next_rising;
        n_factor *= inv_n2;
    }
    return {head.value() + tail, false};
}

Complex zeta_unchecked(Complex s, double tol) {
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
    long n_terms = std::max(20L, static_cast<long>(std::ceil(std::fabs(s.imag()))) + 1);
    for (int attempt = 0; attempt < 8; ++attempt) {
        const auto out = euler_maclaurin(s, tol, n_terms);
        if (out.converged) return out.value;
        n_terms *= 2;
    }
    throw ToleranceNotMet("zeta: Euler-Maclaurin did not reach tolerance", euler_maclaurin(s, tol, n_terms).value, tol);
}

}  // namespace

Complex zeta(Complex s, double tol) {
    if (!is_finite(s)) throw DomainError("zeta: non-finite argument");
    if (s == Complex(1.0, 0.0)) throw PoleError("zeta: pole at s = 1");
    if (!(s.real() > 0.0 && s.real() <= 2.0) || std::fabs(s.imag()) > kMaxOrdinate)
        throw DomainError("zeta: argument outside 0 < Re s <= 2, |Im s| <= 500");
    return zeta_unchecked(s, tol);
}

double zeta_integer(int j) {
    if (j < 2) throw DomainError("zeta_integer: j must be >= 2");
    if (j % 2 == 0 && j <= kMaxBernoulli) {
        // zeta(2m) = (-1)^{m+1} (2 pi)^{2m} B_{2m} / (2 (2m)!)
        const int m = j / 2;
        const double sign = (m % 2 == 1) ? 1.0 : -1.0;
        return sign * std::pow(2.0 * kPi, j) * bernoulli_over_factorial(j) / 2.0;
    }
    return zeta_unchecked(Complex(j, 0.0), 1e-17).real();
}

CriticalPoint critical_point(double t) {
    const Complex v = zeta(Complex(0.5, t));
    return {t, v, std::norm(v)};
}

double zeta_sq_modulus(double t) { return std::norm(zeta(Complex(0.5, t))); }

double log_weight(int k, double delta, double t) {
    return k * ((kPi - delta) * t - log_cosh(kPi * t));
}

double weight(int k, double delta, double t) {
    if (k < 1) throw DomainError("weight: k must be >= 1");
    if (!(delta > 0.0 && delta < kPi)) throw DomainError("weight: delta must lie in (0, pi)");
    return std::exp(log_weight(k, delta, t));
}

std::string_view to_string(Method m) {
    switch (m) {
        case Method::direct: return "direct";
        case Method::formula_k1: return "formula_k1";
        case Method::formula_k2: return "formula_k2";
        case Method::formula_k3: return "formula_k3";
        case Method::multi_integral: return "multi_integral";
        case Method::closed_form: return "closed_form";
    }
    return "unknown";
}

Method method_from_string(std::string_view name) {
    for (Method m : {Method::direct, Method::formula_k1, Method::formula_k2, Method::formula_k3,
                     Method::multi_integral, Method::closed_form})
        if (to_string(m) == name) return m;
    throw DomainError("unknown method '" + std::string(name) + "'");
}

Complex MomentReport::term(std::string_view name) const {
    for (const auto& [key, value] : breakdown)
        if (key == name) return value;
    throw std::out_of_range("MomentReport: no breakdown term '" + std::string(name) + "'");
}

MomentReport moment_direct(int k, double delta, const QuadSpec& spec, GuardPolicy policy) {
    spec.validate();
    if (k < 1 || k > 3) throw DomainError("moment_direct: k must be 1, 2 or 3");
    if (!(delta > 0.0 && delta < kPi)) throw DomainError("moment_direct: delta must lie in (0, pi)");
    if (delta < kDeltaFloor && policy == GuardPolicy::enforce)
        throw GuardError("moment_direct: delta below desk-scale floor 0.05");

    // Growth margin |zeta(1/2+it)|^2 <= 3 (1+|t|) on |t| <= 500 (the sampled maximum
    // of the ratio is 2.14, at t = 0). The weight is at most 2^k e^{-k delta t} for
    // t > 0 and 2^k e^{-k (2 pi - delta) |t|} for t < 0.
    const double power = k;
    const double prefactor = std::pow(6.0, k);
    const double tail_tol = spec.abs_tol / 4.0;
    const double t_plus = truncation_point(k * delta, power, prefactor, tail_tol);
    const double t_minus = truncation_point(k * (2.0 * kPi - delta), power, prefactor, tail_tol);
    if (t_plus > kMaxOrdinate)
        throw ToleranceNotMet("moment_direct: truncation point beyond the zeta ordinate limit", 0.0,
                              envelope_tail(k * delta, power, prefactor, kMaxOrdinate));

    QuadSpec local = spec;
    if (k == 3) local.max_depth = std::max(local.max_depth, 40);
    auto integrand = [k, delta](double t) {
        const double sq = zeta_sq_modulus(t);
        return std::pow(sq, k) * std::exp(log_weight(k, delta, t));
    };
    const std::array<double, 3> bp{-t_minus, 0.0, t_plus};
    const auto r = adaptive_integrate<double>(integrand, bp, local, 0.25);
    const double tails = envelope_tail(k * delta, power, prefactor, t_plus) +
                         envelope_tail(k * (2.0 * kPi - delta), power, prefactor, t_minus);

    MomentReport rep;
    rep.k = k;
    rep.delta = delta;
    rep.value = r.value;
    rep.err_estimate = r.err_estimate + tails;
    rep.method = Method::direct;
    rep.breakdown = {{"integral", r.value}, {"t_minus", -t_minus}, {"t_plus", t_plus}, {"tail_bound", tails}};
    return rep;
}

}  // namespace zm

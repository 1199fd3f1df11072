#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>
#include <queue>
#include <span>
#include <string>
#include <vector>

#include "zetamoments/errors.hpp"

namespace zm {

/// Quadrature and series policy shared by every numerical route.
struct QuadSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-9;
    int max_depth = 32;        // bisection depth below an initial panel
    double tail_cutoff = 10.0;  // minimum truncation point for semi-infinite integrals
    double series_tol = 1e-12;  // truncation tolerance for infinite series

    /// Throws DomainError unless every field satisfies its invariant.
    void validate() const;

    /// Copy with abs_tol and rel_tol multiplied by factor (used for inner integrals).
    QuadSpec scaled(double factor) const;
};

struct QuadResult {
    Complex value;
    double err_estimate = 0.0;
    long evaluations = 0;
};

/// Fixed-size vector of complex values, used for integrating several
/// integrands that share expensive intermediate quantities.
template <std::size_t N>
struct ComplexVec {
    std::array<Complex, N> v{};

    Complex& operator[](std::size_t i) { return v[i]; }
    const Complex& operator[](std::size_t i) const { return v[i]; }

    ComplexVec& operator+=(const ComplexVec& o) {
        for (std::size_t i = 0; i < N; ++i) v[i] += o.v[i];
        return *this;
    }
    ComplexVec& operator-=(const ComplexVec& o) {
        for (std::size_t i = 0; i < N; ++i) v[i] -= o.v[i];
        return *this;
    }
    ComplexVec& operator*=(double s) {
        for (auto& x : v) x *= s;
        return *this;
    }
    friend ComplexVec operator+(ComplexVec a, const ComplexVec& b) { return a += b; }
    friend ComplexVec operator-(ComplexVec a, const ComplexVec& b) { return a -= b; }
    friend ComplexVec operator*(ComplexVec a, double s) { return a *= s; }
    friend ComplexVec operator*(double s, ComplexVec a) { return a *= s; }
};

namespace detail {

inline double magnitude(double x) { return std::fabs(x); }
inline double magnitude(Complex z) { return std::abs(z); }
template <std::size_t N>
double magnitude(const ComplexVec<N>& x) {
    double m = 0.0;
    for (const auto& z : x.v) m = std::max(m, std::abs(z));
    return m;
}

inline bool finite_value(double x) { return std::isfinite(x); }
inline bool finite_value(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }
template <std::size_t N>
bool finite_value(const ComplexVec<N>& x) {
    for (const auto& z : x.v)
        if (!finite_value(z)) return false;
    return true;
}

inline Complex to_complex(double x) { return x; }
inline Complex to_complex(Complex z) { return z; }
template <std::size_t N>
Complex to_complex(const ComplexVec<N>& x) {
    return x.v[0];
}

// 21-point Kronrod rule with embedded 10-point Gauss rule (QUADPACK qk21).
inline constexpr std::array<double, 11> kXgk = {
    0.995657163025808080735527280689003, 0.973906528517171720077964012084452,
    0.930157491355708226001207180059508, 0.865063366688984510732096688423493,
    0.780817726586416897063717578345042, 0.679409568299024406234327365114874,
    0.562757134668604683339000099272694, 0.433395394129247190799265943165784,
    0.294392862701460198131126603103866, 0.148874338981631210884826001129720,
    0.000000000000000000000000000000000};
inline constexpr std::array<double, 11> kWgk = {
    0.011694638867371874278064396062192, 0.032558162307964727478818972459390,
    0.054755896574351996031381300244580, 0.075039674810919952767043140916190,
    0.093125454583697605535065465083366, 0.109387158802297641899210590325805,
    0.123491976262065851077958109831074, 0.134709217311473325928054001771707,
    0.142775938577060080797094273138717, 0.147739104901338491374841515972068,
    0.149445554002916905664936468389821};
inline constexpr std::array<double, 5> kWg = {
    0.066671344308688137593568809893332, 0.149451349150580593145776339657697,
    0.219086362515982043995534934228163, 0.269266719309996355091226921569469,
    0.295524224714752870173892994651338};

inline constexpr std::size_t kMaxPanels = std::size_t{1} << 18;

template <class V>
struct Panel {
    double a;
    double b;
    V value;
    double err;
    int depth;
};

template <class V, class F>
Panel<V> gk21(F& f, double a, double b, int depth) {
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const V fc = f(center);
    std::array<V, 10> lo;
    std::array<V, 10> hi;
    for (std::size_t j = 0; j < 10; ++j) {
        const double dx = half * kXgk[j];
        lo[j] = f(center - dx);
        hi[j] = f(center + dx);
    }
    bool ok = finite_value(fc);
    for (std::size_t j = 0; j < 10; ++j) ok = ok && finite_value(lo[j]) && finite_value(hi[j]);
    if (!ok) throw NonFiniteError("quadrature: integrand is not finite");

    V kronrod = fc * kWgk[10];
    V gauss{};
    double resabs = magnitude(fc) * kWgk[10];
    for (std::size_t j = 0; j < 10; ++j) {
        const V pair = lo[j] + hi[j];
        kronrod += pair * kWgk[j];
        resabs += (magnitude(lo[j]) + magnitude(hi[j])) * kWgk[j];
        if (j % 2 == 1) gauss += pair * kWg[j / 2];
    }
    const V mean = kronrod * 0.5;
    double resasc = magnitude(fc - mean) * kWgk[10];
    for (std::size_t j = 0; j < 10; ++j)
        resasc += (magnitude(lo[j] - mean) + magnitude(hi[j] - mean)) * kWgk[j];

    const double h = std::fabs(half);
    double err = magnitude(kronrod - gauss) * h;
    resabs *= h;
    resasc *= h;
    if (resasc != 0.0 && err != 0.0) err = resasc * std::min(1.0, std::pow(200.0 * err / resasc, 1.5));
    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (resabs > std::numeric_limits<double>::min() / (50.0 * eps)) err = std::max(50.0 * eps * resabs, err);
    return Panel<V>{a, b, kronrod * half, err, depth};
}

/// Compensated summation; works for any type closed under + and -.
template <class T>
class KahanSum {
public:
    void add(const T& x) {
        const T y = x - carry_;
        const T t = sum_ + y;
        carry_ = (t - sum_) - y;
        sum_ = t;
    }
    T value() const { return sum_; }

private:
    T sum_{};
    T carry_{};
};

}  // namespace detail

template <class V>
struct BasicQuadResult {
    V value{};
    double err_estimate = 0.0;
    long evaluations = 0;
};

/// Global adaptive Gauss-Kronrod (21 points) integration over the panels
/// delimited by `breakpoints` (sorted, at least two). Panels wider than
/// max_panel_width are split before refinement starts. The result is summed
/// in panel order with compensation, so it is reproducible for a fixed spec.
template <class V, class F>
BasicQuadResult<V> adaptive_integrate(F&& f, std::span<const double> breakpoints, const QuadSpec& spec,
                                      double max_panel_width = std::numeric_limits<double>::infinity()) {
    using detail::Panel;
    if (breakpoints.size() < 2) throw DomainError("adaptive_integrate: need at least two breakpoints");

    auto worse = [](const Panel<V>& x, const Panel<V>& y) { return x.err < y.err; };
    std::priority_queue<Panel<V>, std::vector<Panel<V>>, decltype(worse)> active(worse);
    std::vector<Panel<V>> settled;
    long evals = 0;

    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        if (!(a < b)) throw DomainError("adaptive_integrate: breakpoints must be strictly increasing");
        const auto pieces = static_cast<std::size_t>(std::max(1.0, std::ceil((b - a) / max_panel_width)));
        for (std::size_t p = 0; p < pieces; ++p) {
            const double lo = (p == 0) ? a : a + (b - a) * static_cast<double>(p) / static_cast<double>(pieces);
            const double hi = (p + 1 == pieces) ? b : a + (b - a) * static_cast<double>(p + 1) / static_cast<double>(pieces);
            active.push(detail::gk21<V>(f, lo, hi, 0));
            evals += 21;
        }
    }

    auto totals = [&]() {
        detail::KahanSum<V> val;
        detail::KahanSum<double> err;
        // priority_queue hides its container; copy is fine at this cadence.
        auto copy = active;
        while (!copy.empty()) {
            val.add(copy.top().value);
            err.add(copy.top().err);
            copy.pop();
        }
        for (const auto& p : settled) {
            val.add(p.value);
            err.add(p.err);
        }
        return std::pair{val.value(), err.value()};
    };

    auto [total, total_err] = totals();
    std::size_t iterations = 0;
    auto target = [&]() { return std::max(spec.abs_tol, spec.rel_tol * detail::magnitude(total)); };

    while (total_err > target()) {
        if (active.empty()) {
            std::tie(total, total_err) = totals();
            if (total_err <= target()) break;
            throw ToleranceNotMet("quadrature: maximum subdivision depth reached, error " + std::to_string(total_err),
                                  detail::to_complex(total), total_err);
        }
        Panel<V> worst = active.top();
        active.pop();
        const double mid = 0.5 * (worst.a + worst.b);
        if (worst.depth >= spec.max_depth || !(worst.a < mid && mid < worst.b)) {
            settled.push_back(worst);
            continue;
        }
        Panel<V> left = detail::gk21<V>(f, worst.a, mid, worst.depth + 1);
        Panel<V> right = detail::gk21<V>(f, mid, worst.b, worst.depth + 1);
        evals += 42;
        total += left.value + right.value - worst.value;
        total_err += left.err + right.err - worst.err;
        active.push(left);
        active.push(right);
        if (active.size() + settled.size() > detail::kMaxPanels)
            throw ToleranceNotMet("quadrature: panel budget exhausted", detail::to_complex(total), total_err);
        if (++iterations % 256 == 0) std::tie(total, total_err) = totals();
    }

    std::vector<Panel<V>> all = std::move(settled);
    while (!active.empty()) {
        all.push_back(active.top());
        active.pop();
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) { return x.a < y.a; });
    detail::KahanSum<V> val;
    detail::KahanSum<double> err;
    for (const auto& p : all) {
        val.add(p.value);
        err.add(p.err);
    }
    return {val.value(), err.value(), evals};
}

using ComplexIntegrand = std::function<Complex(double)>;

/// Adaptive integration of a complex integrand over [a, b].
/// err_estimate <= max(abs_tol, rel_tol |value|) on return; otherwise
/// ToleranceNotMet carrying the best value.
QuadResult integrate_adaptive(const ComplexIntegrand& f, double a, double b, const QuadSpec& spec);

/// Integral over [0, inf) of f with |f(x)| <= envelope * exp(-decay_rate x) for x >= 1.
/// Truncates at X = max(tail_cutoff, ln(envelope / abs_tol) / decay_rate) and adds
/// the analytic tail bound envelope * exp(-decay_rate X) / decay_rate to err_estimate.
QuadResult integrate_semiinfinite(const ComplexIntegrand& f, double decay_rate, const QuadSpec& spec,
                                  double envelope = 1.0);

/// Smallest T >= 0 with prefactor (1 + T)^power exp(-rate T) / rate <= tol
/// (tail bound of a polynomially-weighted exponential envelope).
double truncation_point(double rate, double power, double prefactor, double tol);

/// Integral of prefactor (1 + t)^power exp(-rate t) over [T, inf), bounded above.
double envelope_tail(double rate, double power, double prefactor, double T);

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
GaussRule gauss_legendre(int n);

}  // namespace zm

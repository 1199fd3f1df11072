#include "zetamoments/quadrature.hpp"

#include <array>
#include <numbers>

namespace zm {

void QuadSpec::validate() const {
    auto unit = [](double x) { return x > 0.0 && x < 1.0; };
    if (!unit(abs_tol)) throw DomainError("QuadSpec: abs_tol must lie in (0, 1)");
    if (!unit(rel_tol)) throw DomainError("QuadSpec: rel_tol must lie in (0, 1)");
    if (!unit(series_tol)) throw DomainError("QuadSpec: series_tol must lie in (0, 1)");
    if (max_depth < 1 || max_depth > 60) throw DomainError("QuadSpec: max_depth must lie in [1, 60]");
    if (!(tail_cutoff > 0.0) || !std::isfinite(tail_cutoff)) throw DomainError("QuadSpec: tail_cutoff must be positive");
}

QuadSpec QuadSpec::scaled(double factor) const {
    QuadSpec s = *this;
    s.abs_tol = std::max(abs_tol * factor, 1e-300);
    s.rel_tol = std::max(rel_tol * factor, 1e-15);
    return s;
}

QuadResult integrate_adaptive(const ComplexIntegrand& f, double a, double b, const QuadSpec& spec) {
    spec.validate();
    if (!(a < b)) throw DomainError("integrate_adaptive: need a < b");
    const std::array<double, 2> bp{a, b};
    const auto r = adaptive_integrate<Complex>(f, bp, spec);
    return {r.value, r.err_estimate, r.evaluations};
}

QuadResult integrate_semiinfinite(const ComplexIntegrand& f, double decay_rate, const QuadSpec& spec,
                                  double envelope) {
    spec.validate();
    if (!(decay_rate > 0.0)) throw DomainError("integrate_semiinfinite: decay_rate must be positive");
    if (!(envelope > 0.0)) throw DomainError("integrate_semiinfinite: envelope must be positive");
    const double cut = std::max(spec.tail_cutoff, std::log(envelope / spec.abs_tol) / decay_rate);
    const std::array<double, 3> bp{0.0, std::min(1.0, cut / 2), cut};
    auto r = adaptive_integrate<Complex>(f, bp, spec, std::max(1.0, cut / 64));
    const double tail = envelope * std::exp(-decay_rate * cut) / decay_rate;
    return {r.value, r.err_estimate + tail, r.evaluations};
}

double envelope_tail(double rate, double power, double prefactor, double T) {
    // For t >= T, (1+t)^p e^{-rate t} <= (1+T)^p e^{-(rate - p/(1+T))(t - T)} e^{-rate T}.
    const double slack = rate - power / (1.0 + T);
    if (slack <= 0.0) return std::numeric_limits<double>::infinity();
    return prefactor * std::pow(1.0 + T, power) * std::exp(-rate * T) / slack;
}

double truncation_point(double rate, double power, double prefactor, double tol) {
    if (!(rate > 0.0)) throw DomainError("truncation_point: rate must be positive");
    double T = std::max(0.0, std::log(prefactor / (tol * rate)) / rate);
    for (int it = 0; it < 200; ++it) {
        const double next = std::max(0.0, (std::log(prefactor / (tol * rate)) + power * std::log1p(T)) / rate);
        if (std::fabs(next - T) < 1e-9 * (1.0 + T)) {
            T = next;
            break;
        }
        T = next;
    }
    // Tighten until the rigorous tail bound holds.
    while (envelope_tail(rate, power, prefactor, T) > tol) T += 0.5;
    return T;
}

GaussRule gauss_legendre(int n) {
    if (n < 1) throw DomainError("gauss_legendre: n must be >= 1");
    GaussRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::fabs(dx) < 1e-16) break;
        }
        {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            if (n == 1) p0 = 1.0;
            dp = n * (x * p1 - p0) / (x * x - 1.0);
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    return rule;
}

}  // namespace zm

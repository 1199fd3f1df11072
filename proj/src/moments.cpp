#include "zetamoments/moments.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <cmath>
#include <future>

#include "zetamoments/autocorr.hpp"
#include "zetamoments/eisenstein.hpp"

namespace zm {

namespace {

constexpr int kNodes = 24;
constexpr int kPanels = 12;
constexpr double kAsymptoticLog = 9.210340371976184;  // ln 1e4
constexpr double kS0Tol = 1e-15;

void check_delta(double delta, double floor, GuardPolicy policy, const char* who) {
    if (!(delta > 0.0 && delta < kPi / 2)) throw DomainError(std::string(who) + ": delta must lie in (0, pi/2)");
    if (delta < floor && policy == GuardPolicy::enforce)
        throw GuardError(std::string(who) + ": delta below the guard " + std::to_string(floor));
}

// Floors that the override can lower only as far as the continuation margin allows.
void check_delta_hard(double delta, double floor, GuardPolicy policy, const char* who) {
    check_delta(delta, floor, policy, who);
    if (delta < kDeltaFloor) throw GuardError(std::string(who) + ": delta below the hard floor 0.05");
}

double cheb_node(int i) { return std::cos((2 * i + 1) * kPi / (2 * kNodes)); }

// |S_0(z)| <= q / (1-q)^2 with q = e^{-2 pi Im z}.
double s0_constant(double delta) {
    const double one_minus_q = -std::expm1(-2.0 * kPi * std::sin(delta));
    return 1.0 / (one_minus_q * one_minus_q);
}

}  // namespace

RFunction::RFunction(double delta, const QuadSpec& spec) : delta_(delta), width_(kAsymptoticLog / kPanels) {
    check_delta(delta, 0.0, GuardPolicy::enforce, "RFunction");
    QuadSpec tight = spec;
    tight.abs_tol = std::min(spec.abs_tol, 1e-13);
    tight.rel_tol = std::min(spec.rel_tol, 1e-13);
    values_.reserve(kPanels * kNodes);
    for (int p = 0; p < kPanels; ++p)
        for (int i = 0; i < kNodes; ++i) {
            const double s = width_ * (p + 0.5 + 0.5 * cheb_node(i));
            values_.push_back(R_term(std::exp(-s), delta, tight));
        }
}

Complex RFunction::operator()(double s) const {
    if (!(s >= 0.0) || !std::isfinite(s)) throw DomainError("RFunction: s must be finite and >= 0");
    if (s >= kAsymptoticLog) {
        const Complex a = A_asymptotic(std::polar(std::exp(-s), delta_));
        return -a + s + kLog2Pi - kEulerGamma + Complex(0.0, kPi / 2 - delta_);
    }
    const int p = std::min(kPanels - 1, static_cast<int>(s / width_));
    const double x = 2.0 * (s / width_ - p) - 1.0;
    const Complex* f = values_.data() + static_cast<std::size_t>(p) * kNodes;
    // Barycentric formula for first-kind Chebyshev points.
    Complex num = 0.0;
    double den = 0.0;
    for (int i = 0; i < kNodes; ++i) {
        const double diff = x - cheb_node(i);
        if (diff == 0.0) return f[i];
        const double w = ((i % 2) ? -1.0 : 1.0) * std::sin((2 * i + 1) * kPi / (2 * kNodes)) / diff;
        num += w * f[i];
        den += w;
    }
    return num / den;
}

Complex S_of_log(double s, double delta, double tol) {
    if (!(s >= 0.0)) throw DomainError("S_of_log: s must be >= 0");
    return S_term(std::exp(-s), delta, tol);
}

MomentReport formula_k1(double delta, const QuadSpec& spec, GuardPolicy policy) {
    spec.validate();
    check_delta(delta, kDeltaFloor, policy, "formula_k1");
    const Complex i(0.0, 1.0);
    const Complex half = std::polar(1.0, delta / 2);
    const Complex a_neg = A_continuation(std::polar(1.0, delta - kPi), spec);
    const Complex continuation = -2.0 * i * half * a_neg;

    const Complex s0 = S0(std::polar(1.0, delta), kS0Tol);
    const Complex a_conj = A(std::polar(1.0, -delta), spec);
    const Complex titchmarsh = 4.0 * kPi * half * s0 +
                               2.0 * i * std::conj(half) * (kLog2Pi - kEulerGamma - i * (kPi / 2) - a_conj + i * delta);
    if (std::fabs(titchmarsh.imag()) > 1e-6 * std::fabs(titchmarsh.real()))
        throw ToleranceNotMet("formula_k1: imaginary residual too large", titchmarsh,
                              std::fabs(titchmarsh.imag()));

    MomentReport rep;
    rep.k = 1;
    rep.delta = delta;
    rep.method = Method::formula_k1;
    rep.value = titchmarsh.real();
    rep.err_estimate = std::abs(titchmarsh - continuation) + std::fabs(titchmarsh.imag());
    rep.breakdown = {{"titchmarsh", titchmarsh},
                     {"continuation", continuation},
                     {"S0_term", 4.0 * kPi * half * s0},
                     {"A(e^{-i delta})", a_conj},
                     {"A(-e^{i delta})", a_neg},
                     {"imag_residual", titchmarsh.imag()}};
    return rep;
}

MomentReport formula_k2(double delta, const QuadSpec& spec, GuardPolicy policy) {
    spec.validate();
    check_delta(delta, kDeltaFloor, policy, "formula_k2");
    const Complex rot = std::polar(1.0, delta);
    const double rate = 4.0 * kPi * std::sin(delta);
    const double c = s0_constant(delta);
    const double envelope = c * c * std::exp(-rate);
    auto main_f = [&](double x) { return Complex(std::norm(S0(rot * (1.0 + x), kS0Tol))); };
    const QuadResult main = integrate_semiinfinite(main_f, rate, spec, envelope);

    const RFunction R(delta, spec);
    // u = e^{-s}; |R(e^{-s})| grows linearly in s, so [0, 60] leaves < 1e-20.
    auto rem_f = [&](double s) {
        const Complex r = R(s);
        const Complex sv = S_of_log(s, delta, kS0Tol);
        const double jac = std::exp(-s);
        ComplexVec<2> out;
        out[0] = jac * std::conj(sv) * r;
        out[1] = jac * std::norm(r);
        return out;
    };
    const std::array<double, 8> bp{0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 20.0, 60.0};
    const auto rem = adaptive_integrate<ComplexVec<2>>(rem_f, bp, spec);

    const double main_term = 16.0 * kPi * main.value.real();
    const double r1 = 8.0 / kPi * rem.value[0].real();
    const double r2 = 4.0 / kPi * rem.value[1].real();

    MomentReport rep;
    rep.k = 2;
    rep.delta = delta;
    rep.method = Method::formula_k2;
    rep.value = main_term + r1 + r2;
    rep.err_estimate = 16.0 * kPi * main.err_estimate + 12.0 / kPi * rem.err_estimate;
    rep.breakdown = {{"main", main_term},
                     {"R1_tilde", r1},
                     {"R2_tilde", r2},
                     {"int_conjS_R", rem.value[0]},
                     {"int_R_sq", rem.value[1]}};
    return rep;
}

double K3Breakdown::assemble(double delta, Complex main_M, const std::array<Complex, 5>& remainders) {
    const Complex half = std::polar(1.0, delta / 2);
    Complex rho = 0.0;
    for (const Complex& r : remainders) rho += r;
    return 96.0 * kPi * (half * std::conj(main_M)).real() - 12.0 / (kPi * kPi) * (Complex(0.0, 1.0) * half * rho).real();
}

double K3Breakdown::main_value() const { return 96.0 * kPi * (std::polar(1.0, delta / 2) * std::conj(main_M)).real(); }

K3Result formula_k3(double delta, const QuadSpec& spec, GuardPolicy policy) {
    spec.validate();
    check_delta_hard(delta, kFormulaK3Floor, policy, "formula_k3");
    const Complex rot = std::polar(1.0, delta);
    const Complex mrot = -std::conj(rot);
    const QuadSpec inner = spec.scaled(0.1);

    // Main term. |S_0(e^{i delta} u)| <= c e^{-a u} with a = 2 pi sin(delta), so the
    // integrand is below c^3 e^{-a(u + v + uv)}.
    const double a = 2.0 * kPi * std::sin(delta);
    const double c3 = std::pow(s0_constant(delta), 3);
    const double tail_tol = spec.abs_tol / 8.0;
    auto v_cut = [&](double u) {
        const double r = a * (1.0 + u);
        return std::max(2.0, 1.0 + std::log(c3 * std::exp(-a * (u + 1.0)) / (r * inner.abs_tol / 8.0)) / r);
    };
    // Outer tail: int_U^inf c^3 e^{-a(2u+1)} / (a(1+u)) du <= c^3 e^{-a(2U+1)} / (4 a^2).
    const double u_cut = std::max(2.0, std::log(c3 * std::exp(-a) / (4.0 * a * a * tail_tol)) / (2.0 * a));
    auto main_outer = [&](double u) {
        const Complex su = S0(rot * u, kS0Tol);
        const Complex su_m = S0(mrot * u, kS0Tol);
        auto f = [&](double v) {
            ComplexVec<2> out;
            out[0] = su * S0(rot * v, kS0Tol) * S0(mrot * (u * v), kS0Tol);
            out[1] = su_m * S0(mrot * v, kS0Tol) * S0(rot * (u * v), kS0Tol);
            return out;
        };
        const std::array<double, 2> bp{1.0, v_cut(u)};
        const auto r = adaptive_integrate<ComplexVec<2>>(f, bp, inner, 1.0);
        ComplexVec<3> out;
        out[0] = r.value[0];
        out[1] = r.value[1];
        out[2] = r.err_estimate + inner.abs_tol / 8.0;
        return out;
    };
    const std::array<double, 2> ubp{1.0, u_cut};
    const auto main = adaptive_integrate<ComplexVec<3>>(main_outer, ubp, spec, 1.0);
    const Complex m_conj = main.value[0];
    const Complex m_main = main.value[1];
    const double main_err = main.err_estimate + main.value[2].real() + tail_tol;

    // The two orientations are conjugate; both assemblies must coincide.
    const Complex half = std::polar(1.0, delta / 2);
    const double orient_a = (std::conj(half) * m_main).real();
    const double orient_b = (half * m_conj).real();
    const double orientation_gap = std::fabs(orient_a - orient_b);
    if (orientation_gap > 1e-12 * std::max(1.0, std::abs(m_main)))
        throw Error("formula_k3: main-term orientations disagree by " + std::to_string(orientation_gap));

    // Remainders on (0,1)^2 in u = e^{-s}, v = e^{-t}; uv = e^{-(s+t)}.
    const RFunction R(delta, spec);
    auto rem_outer = [&](double s) {
        const Complex su = S_of_log(s, delta, kS0Tol);
        const Complex ru = R(s);
        auto f = [&](double t) {
            const Complex sv = S_of_log(t, delta, kS0Tol);
            const Complex rv = R(t);
            const Complex sw = std::conj(S_of_log(s + t, delta, kS0Tol));
            const Complex rw = std::conj(R(s + t));
            const double jac = std::exp(-s - t);
            ComplexVec<5> out;
            out[0] = jac * 2.0 * su * rv * sw;
            out[1] = jac * su * sv * rw;
            out[2] = jac * ru * rv * sw;
            out[3] = jac * 2.0 * ru * sv * rw;
            out[4] = jac * ru * rv * rw;
            return out;
        };
        const std::array<double, 8> bp{0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 20.0, 60.0};
        const auto r = adaptive_integrate<ComplexVec<5>>(f, bp, inner);
        ComplexVec<6> out;
        for (std::size_t j = 0; j < 5; ++j) out[j] = r.value[j];
        out[5] = r.err_estimate;
        return out;
    };
    const std::array<double, 8> sbp{0.0, 0.5, 1.0, 2.0, 4.0, 8.0, 20.0, 60.0};
    const auto rem = adaptive_integrate<ComplexVec<6>>(rem_outer, sbp, spec);

    K3Result out;
    K3Breakdown& parts = out.parts;
    parts.delta = delta;
    parts.main_M = m_main;
    parts.main_M_conj = m_conj;
    for (std::size_t j = 0; j < 5; ++j) parts.remainders[j] = rem.value[j];
    parts.assembled = K3Breakdown::assemble(delta, m_main, parts.remainders);

    MomentReport& rep = out.report;
    rep.k = 3;
    rep.delta = delta;
    rep.method = Method::formula_k3;
    rep.value = parts.assembled;
    rep.err_estimate = 96.0 * kPi * main_err + 12.0 / (kPi * kPi) * (rem.err_estimate + rem.value[5].real());
    rep.breakdown = {{"main", parts.main_value()}, {"main_M", m_main}, {"main_M_conj", m_conj}};
    for (std::size_t j = 0; j < 5; ++j) rep.breakdown.emplace_back("R" + std::to_string(j + 1), parts.remainders[j]);
    rep.breakdown.emplace_back("orientation_gap", orientation_gap);
    return out;
}

MomentReport multi_integral_form(int k, double delta, const QuadSpec& spec, GuardPolicy policy) {
    spec.validate();
    if (k != 2 && k != 3) throw DomainError("multi_integral_form: k must be 2 or 3");
    check_delta_hard(delta, k == 2 ? kMultiK2Floor : kMultiK3Floor, policy, "multi_integral_form");

    // F(x) = A(-e^{i delta} e^x) is analytic for -delta < Im x < 2 pi - delta, so the
    // trapezoid rule in x converges like e^{-2 pi delta / h}. F(x) = O(x e^{-x}) as
    // x -> inf and O(|x|) as x -> -inf.
    const ContinuationKernel kernel(delta - kPi, 1e-13);
    const double h = std::min(0.1, delta / 5.0);
    constexpr double L = 50.0;
    const long n = static_cast<long>(std::ceil(L / h));
    const long span = (k == 2) ? n : 2 * n;
    std::vector<Complex> F(static_cast<std::size_t>(2 * span + 1));
    for (long j = -span; j <= span; ++j) F[static_cast<std::size_t>(j + span)] = kernel(std::exp(h * j));
    auto at = [&](long j) { return F[static_cast<std::size_t>(j + span)]; };

    auto trapezoid = [&](long stride) {
        detail::KahanSum<Complex> sum;
        const double step = h * stride;
        if (k == 2) {
            for (long j = -n; j <= n; j += stride) sum.add(at(-j) * at(j));
            return sum.value() * step;
        }
        for (long i = -n; i <= n; i += stride)
            for (long j = -n; j <= n; j += stride) sum.add(at(-i - j) * at(i) * at(j));
        return sum.value() * step * step;
    };
    const Complex pref = 2.0 * std::polar(1.0, k * (delta - kPi) / 2) / std::pow(kPi, k - 1);
    const Complex fine = pref * trapezoid(1);
    const Complex coarse = pref * trapezoid(2);
    if (std::fabs(fine.imag()) > 1e-6 * std::fabs(fine.real()))
        throw ToleranceNotMet("multi_integral_form: imaginary residual too large", fine, std::fabs(fine.imag()));

    MomentReport rep;
    rep.k = k;
    rep.delta = delta;
    rep.method = Method::multi_integral;
    rep.value = fine.real();
    rep.err_estimate = std::abs(fine - coarse);
    rep.breakdown = {{"integral", fine}, {"coarse_step", coarse}, {"step", h}, {"imag_residual", fine.imag()}};
    if (k == 2) {
        auto g = [&](double s) { return Complex(std::norm(kernel(std::exp(-s))) * std::exp(-s)); };
        const std::array<double, 9> bp{0.0, 0.5, 1.0, 2.0, 4.0, kAsymptoticLog, 20.0, 40.0, 80.0};
        const auto r = adaptive_integrate<Complex>(g, bp, spec);
        rep.breakdown.emplace_back("single_integral", 4.0 / kPi * r.value.real());
    }
    return rep;
}

BigInt t_coeff(int N, int j) {
    if (N < 2) return 0;
    if (N > 40 || j < 2 || j > N) throw DomainError("t_coeff: requires 2 <= j <= N <= 40");
    Rational sum = 0;
    const int sign_j = (j % 2) ? -1 : 1;
    for (int n = 2; n <= N; ++n) {
        const BigInt bracket = ((n % 2) ? -1 : 1) * stirling2(n + 1, j) + sign_j * stirling2(n, j - 1);
        sum += Rational(binomial(N, n) * (BigInt(1) << n) * bracket);
    }
    sum *= Rational(factorial(j - 1));
    if (denominator(sum) != 1) throw Error("t_coeff: non-integral coefficient");
    return numerator(sum);
}

double closed_form_rhs(int N) {
    if (N < 0 || N > 6) throw DomainError("closed_form_rhs: N must lie in [0, 6]");
    using Float = boost::multiprecision::cpp_bin_float_50;
    const Float pi = boost::math::constants::pi<Float>();
    auto to_float = [](const Rational& q) { return Float(numerator(q)) / Float(denominator(q)); };

    Float rhs = log(2 * pi) - boost::math::constants::euler<Float>() - 4 * N;
    rhs += to_float((Rational(BigInt(1) << (2 * N)) / 2 - 1) * bernoulli_exact(2 * N));
    // B_j = 0 for odd j >= 3, so only even j contribute; zeta(j) is then exact.
    for (int j = 2; j <= 2 * N; j += 2) {
        const Rational& b = bernoulli_exact(j);
        const int sign = ((j / 2) % 2) ? 1 : -1;
        const Rational zeta_over_pow = Rational(sign) * b / Rational(2 * factorial(j));
        rhs += to_float(Rational(t_coeff(2 * N, j)) * zeta_over_pow * b / j) * pow(2 * pi, j);
    }
    return static_cast<double>(rhs);
}

PolyMomentResult closed_form_poly(int N, const QuadSpec& spec) {
    spec.validate();
    if (N < 0 || N > 6) throw DomainError("closed_form_poly: N must lie in [0, 6]");
    PolyMomentResult res;
    res.N = N;
    for (int j = 2; j <= 2 * N; ++j) res.t_coeffs.push_back(t_coeff(2 * N, j));
    res.rhs = closed_form_rhs(N);

    // t^{2N} |zeta|^2 / cosh(pi t) <= 6 (1+t)^{2N+1} e^{-pi t}.
    const double scale = std::pow(4.0, N);
    const double T = truncation_point(kPi, 2.0 * N + 1.0, 6.0, spec.abs_tol / (4.0 * scale));
    auto f = [N](double t) { return std::pow(t, 2 * N) * zeta_sq_modulus(t) * std::exp(-log_cosh(kPi * t)); };
    QuadSpec local = spec;
    local.abs_tol = spec.abs_tol / scale;
    const std::array<double, 2> bp{0.0, T};
    const auto r = adaptive_integrate<double>(f, bp, local, 0.25);
    const double sign = (N % 2) ? -1.0 : 1.0;
    res.lhs = sign * scale * r.value;
    res.lhs_err = scale * (r.err_estimate + envelope_tail(kPi, 2.0 * N + 1.0, 6.0, T));
    return res;
}

std::vector<ScanRow> scan_delta(int k, const std::vector<double>& delta_grid, const QuadSpec& spec,
                                GuardPolicy policy) {
    if (k < 1 || k > 3) throw DomainError("scan_delta: k must be 1, 2 or 3");
    auto one = [k, &spec, policy](double delta) {
        ScanRow row;
        row.delta = delta;
        try {
            MomentReport rep;
            if (k == 1) {
                rep = formula_k1(delta, spec, policy);
                row.main = rep.value;
            } else if (k == 2) {
                rep = formula_k2(delta, spec, policy);
                row.main = rep.term("main").real();
                row.remainders = {rep.term("R1_tilde").real(), rep.term("R2_tilde").real()};
                for (double r : row.remainders) row.fractions.push_back(std::fabs(r) / std::fabs(row.main));
            } else {
                const K3Result res = formula_k3(delta, spec, policy);
                rep = res.report;
                row.main = res.parts.main_value();
                const Complex half = std::polar(1.0, delta / 2);
                for (const Complex& r : res.parts.remainders) {
                    row.remainders.push_back(-12.0 / (kPi * kPi) * (Complex(0.0, 1.0) * half * r).real());
                    row.fractions.push_back(12.0 / (kPi * kPi) * std::abs(r) / std::fabs(row.main));
                }
            }
            double total = 0.0;
            for (double r : row.remainders) total += std::fabs(r);
            row.remainder_fraction = total / std::fabs(row.main);
            if (delta != 1.0) row.ratio = rep.value * delta / std::pow(std::log(1.0 / delta), k * k);
            row.report = std::move(rep);
        } catch (const Error& e) {
            row.error = e.what();
        }
        return row;
    };
    // Points are independent; rows come back in grid order.
    std::vector<std::future<ScanRow>> jobs;
    jobs.reserve(delta_grid.size());
    for (double d : delta_grid) jobs.push_back(std::async(std::launch::async, one, d));
    std::vector<ScanRow> rows;
    rows.reserve(jobs.size());
    for (auto& j : jobs) rows.push_back(j.get());
    return rows;
}

}  // namespace zm

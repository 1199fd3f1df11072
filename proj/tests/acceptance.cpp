// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "zetamoments/autocorr.hpp"
#include "zetamoments/eisenstein.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/sieve.hpp"
#include "zetamoments/suites.hpp"

using zm::Complex;
using zm::kPi;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

double rel(double a, double b) { return std::fabs(a - b) / std::fabs(b); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

// All rows of a suite pass; reports the worst discrepancy relative to its tolerance.
Verdict suite_rows(const std::vector<zm::VerifyResult>& rows) {
    Verdict v;
    double worst = 0.0;
    for (const auto& r : rows) {
        v.pass = v.pass && r.passed;
        worst = std::max(worst, (r.relative ? r.rel_err : r.abs_err) / r.tol);
        if (!r.passed) v.detail += "failed: " + r.name + "; ";
    }
    v.detail += std::to_string(rows.size()) + " rows, worst err/tol " + sci(worst);
    return v;
}

double simpson(const std::function<double(double)>& f, double a, double b, long n) {
    const double h = (b - a) / static_cast<double>(n);
    zm::detail::KahanSum<double> s;
    s.add(f(a));
    s.add(f(b));
    for (long i = 1; i < n; ++i) s.add((i % 2 == 1 ? 4.0 : 2.0) * f(a + h * static_cast<double>(i)));
    return s.value() * h / 3.0;
}

const zm::QuadSpec spec;

Verdict transform_pair() {
    double worst = 0.0;
    for (Complex z : {Complex(0.0), Complex(0.7), Complex(1.5), Complex(-0.4), Complex(0.3, 0.5)})
        worst = std::max(worst, std::abs(zm::B_integral(z, spec) - zm::B_fourier(z, spec)));
    return {worst <= 1e-8, "max |B_integral - B_fourier| " + sci(worst) + " (tol 1e-8)"};
}

Verdict mellin() {
    double worst = 0.0;
    for (Complex s : {Complex(0.5), Complex(0.25), Complex(0.75), Complex(0.5, 1.0), Complex(0.3, -2.0)}) {
        const Complex q = zm::Q(s);
        worst = std::max(worst, std::abs(zm::mellin_A_numeric(s, spec) - q) / std::abs(q));
    }
    return {worst <= 1e-6, "max rel err " + sci(worst) + " (tol 1e-6)"};
}

Verdict bettin_conrey() { return suite_rows(zm::run_suite(zm::Suite::bettin_conrey)); }

Verdict functional_equations() {
    const auto rows = zm::run_suite(zm::Suite::functional_equations);
    Verdict v = suite_rows(rows);
    // Tolerances per equation are fixed by the suite: (i) 1e-8 (1 + |z A|), (ii) 1e-9, (iii) 1e-7.
    for (const auto& r : rows) {
        const bool ok = (r.name.rfind("(i)", 0) == 0 && r.tol <= 1e-8 * (1.0 + std::abs(r.rhs)) * (1 + 1e-12)) ||
                        (r.name.rfind("(ii)", 0) == 0 && r.tol == 1e-9) ||
                        (r.name.rfind("(iii)", 0) == 0 && r.tol == 1e-7);
        if (!ok) {
            v.pass = false;
            v.detail += "; unexpected tolerance on " + r.name;
        }
    }
    return v;
}

Verdict second_moment() {
    Verdict v;
    double worst = 0.0, worst_im = 0.0;
    for (double d : {0.3, 0.8, 1.2}) {
        const double direct = zm::moment_direct(1, d, spec).value;
        const Complex c = -2.0 * Complex(0.0, 1.0) * std::polar(1.0, d / 2) *
                          zm::A_continuation(std::polar(1.0, d - kPi), spec);
        worst = std::max(worst, rel(c.real(), direct));
        worst_im = std::max(worst_im, std::fabs(c.imag()));
    }
    v.pass = worst <= 1e-7 && worst_im <= 1e-8;
    v.detail = "max rel err " + sci(worst) + " (tol 1e-7), max |Im| " + sci(worst_im) + " (tol 1e-8)";
    return v;
}

Verdict fourth_moment() {
    double worst = 0.0;
    for (double d : {0.3, 0.5}) {
        worst = std::max(worst, rel(zm::formula_k1(d, spec).value, zm::moment_direct(1, d, spec).value));
        worst = std::max(worst, rel(zm::formula_k2(d, spec).value, zm::moment_direct(2, d, spec).value));
    }
    double fitted = 0.0;
    for (int i = 1; i <= 10; ++i)
        fitted = std::max(fitted, std::fabs(zm::formula_k2(0.1 * i, spec).term("R2_tilde").real()));
    return {worst <= 1e-6 && fitted <= 20.0,
            "max rel err " + sci(worst) + " (tol 1e-6), max |R2~| on 0.1..1.0 = " + sci(fitted) + " (<= 20)"};
}

Verdict sixth_moment() {
    double worst = 0.0, orient = 0.0;
    for (double d : {0.5, 0.8}) {
        const auto f = zm::formula_k3(d, spec);
        worst = std::max(worst, rel(f.report.value, zm::moment_direct(3, d, spec).value));
        const double a = (std::polar(1.0, -d / 2) * f.parts.main_M).real();
        const double b = (std::polar(1.0, d / 2) * f.parts.main_M_conj).real();
        orient = std::max(orient, std::fabs(a - b) / std::max(1.0, std::abs(f.parts.main_M)));
    }
    return {worst <= 1e-4 && orient <= 1e-12,
            "max rel err " + sci(worst) + " (tol 1e-4), orientation gap " + sci(orient) + " (tol 1e-12)"};
}

Verdict multi_integral() {
    const double d2 = zm::moment_direct(2, 0.5, spec).value;
    const auto m2 = zm::multi_integral_form(2, 0.5, spec);
    const double e2 = rel(m2.value, d2);
    const double es = rel(m2.term("single_integral").real(), d2);
    const double e3 = rel(zm::multi_integral_form(3, 0.8, spec).value, zm::moment_direct(3, 0.8, spec).value);
    return {e2 <= 1e-5 && e3 <= 1e-3 && es <= 1e-5,
            "k=2 " + sci(e2) + " (1e-5), k=3 " + sci(e3) + " (1e-3), single integral " + sci(es) + " (1e-5)"};
}

Verdict convolution() {
    double e2 = 0.0;
    for (double z : {0.0, 1.0})
        e2 = std::max(e2, std::abs(zm::B_conv(z, 2, spec).value - zm::B_conv_fourier(z, 2, spec).value));
    const double e3 = std::abs(zm::B_conv(0.0, 3, spec).value - zm::B_conv_fourier(0.0, 3, spec).value);
    return {e2 <= 1e-7 && e3 <= 1e-5, "k=2 " + sci(e2) + " (1e-7), k=3 " + sci(e3) + " (1e-5)"};
}

Verdict closed_form() {
    double worst = 0.0;
    for (int N = 0; N <= 4; ++N) {
        const auto r = zm::closed_form_poly(N, spec);
        worst = std::max(worst, rel(r.lhs, r.rhs));
    }
    const double n0 = std::fabs(zm::closed_form_rhs(0) - (zm::kLog2Pi - zm::kEulerGamma - 0.5));
    bool integral = true;
    try {
        for (int N = 2; N <= 12; ++N)
            for (int j = 2; j <= N; ++j) (void)zm::t_coeff(N, j);  // throws unless the rational sum is an integer
    } catch (const zm::Error&) {
        integral = false;
    }
    return {worst <= 1e-7 && n0 <= 1e-15 && integral,
            "max rel err " + sci(worst) + " (tol 1e-7), N=0 vs log 2pi - gamma - 1/2: " + sci(n0) +
                ", T_{N,j} integral for N <= 12: " + (integral ? "yes" : "no")};
}

Verdict trends() {
    Verdict v;
    const auto k2 = zm::scan_delta(2, {1.0, 0.5, 0.25}, spec);
    std::string f2;
    for (std::size_t i = 0; i < k2.size(); ++i) {
        if (!k2[i].report) return {false, "k=2 row failed: " + k2[i].error};
        if (i > 0 && !(k2[i].remainder_fraction < k2[i - 1].remainder_fraction)) v.pass = false;
        f2 += (i ? " > " : "") + sci(k2[i].remainder_fraction);
    }
    const auto k3 = zm::scan_delta(3, {0.8, 0.5, 0.3}, spec);
    for (const auto& r : k3)
        if (!r.report) return {false, "k=3 row failed: " + r.error};
    int decreasing = 0;
    for (std::size_t j = 0; j < 5; ++j) {
        bool ok = true;
        for (std::size_t i = 1; i < k3.size(); ++i) ok = ok && k3[i].fractions[j] < k3[i - 1].fractions[j];
        decreasing += ok;
    }
    v.pass = v.pass && decreasing == 5;
    v.detail = "k=2 remainder fraction " + f2 + "; k=3 |R_j|/main decreasing for " + std::to_string(decreasing) + "/5";
    return v;
}

Verdict oracles() {
    const std::vector<std::pair<std::function<double(double)>, std::array<double, 2>>> cases = {
        {[](double x) { return std::exp(x); }, {0.0, 1.0}},
        {[](double x) { return std::cos(x); }, {0.0, 3.0}},
        {[](double x) { return 1.0 / (1.0 + 25.0 * x * x); }, {-1.0, 1.0}},
        {[](double x) { return std::exp(-x * x); }, {-4.0, 4.0}},
        {[](double x) { return std::log1p(x); }, {0.0, 2.0}},
        {[](double x) { return std::sin(20.0 * x) * std::exp(-x); }, {0.0, 5.0}},
        {[](double x) { return 1.0 / (1.0 + x * x * x * x); }, {0.0, 3.0}},
        {[](double x) { return std::sqrt(1.0 + x); }, {0.0, 8.0}},
        {[](double x) { return zm::log_cosh(x); }, {-2.0, 5.0}},
        {[](double x) { return 1.0 / ((x - 0.3) * (x - 0.3) + 1e-3); }, {0.0, 1.0}},
    };
    int quad_ok = 0;
    for (const auto& [f, ab] : cases) {
        const auto r = zm::integrate_adaptive([&](double x) { return Complex(f(x)); }, ab[0], ab[1], spec);
        const double s1 = simpson(f, ab[0], ab[1], 1'000'000);
        const double s2 = simpson(f, ab[0], ab[1], 500'000);
        const double oracle_err = std::fabs(s1 - s2) / 15.0 + 1e-12 * std::fabs(s1);
        quad_ok += std::fabs(r.value.real() - s1) <= r.err_estimate + oracle_err + 1e-13;
    }

    int tail_ok = 0;
    const std::vector<Complex> pts = {{0.0, 1.0}, {0.3, 0.05}, {-1.2, 0.01}, {0.5, 2.0}, {0.1, 0.2}};
    for (Complex z : pts) {
        const double tol = 1e-13;
        const std::size_t n = zm::s0_terms(z.imag(), tol);
        tail_ok += std::abs(zm::S0_partial(z, 2 * n + 1) - zm::S0_partial(z, n)) <= 2.0 * tol;
    }

    const auto d = zm::divisor_sieve(10000);
    bool sieve_ok = true;
    for (std::size_t n = 1; n <= 10000; ++n) {
        std::uint32_t count = 0;
        for (std::size_t m = 1; m * m <= n; ++m)
            if (n % m == 0) count += (m * m == n) ? 1 : 2;
        sieve_ok = sieve_ok && d(n) == count;
    }
    return {quad_ok == 10 && tail_ok == static_cast<int>(pts.size()) && sieve_ok,
            "Simpson oracle " + std::to_string(quad_ok) + "/10, S0 doubling " + std::to_string(tail_ok) + "/" +
                std::to_string(pts.size()) + ", sieve to 1e4 " + (sieve_ok ? "exact" : "MISMATCH")};
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* name;
        double limit_s;
        Verdict (*run)();
    };
    const std::vector<Criterion> criteria = {
        {1, "Ramanujan transform pair", 10, transform_pair},
        {2, "Mellin identity", 30, mellin},
        {3, "Bettin-Conrey lemma", 60, bettin_conrey},
        {4, "functional equations (i)-(iii)", 60, functional_equations},
        {5, "second moment formula", 60, second_moment},
        {6, "fourth moment, both forms", 300, fourth_moment},
        {7, "sixth moment formula", 1200, sixth_moment},
        {8, "multi-integral form", 1800, multi_integral},
        {9, "convolution lemma", 600, convolution},
        {10, "closed-form polynomial moments", 120, closed_form},
        {11, "remainder-dominance trends", 2700, trends},
        {12, "oracle suites", 120, oracles},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.run();
        } catch (const std::exception& e) {
            v = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.limit_s) {
            v.pass = false;
            v.detail += "; over the time limit";
        }
        failed += !v.pass;
        std::printf("%s  %2d  %-34s %s  [%.1f s / %.0f s]\n", v.pass ? "PASS" : "FAIL", c.id, c.name,
                    v.detail.c_str(), secs, c.limit_s);
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed ? 1 : 0;
}

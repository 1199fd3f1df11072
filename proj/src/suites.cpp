#include "zetamoments/suites.hpp"

#include <array>
#include <random>
#include <sstream>

#include "zetamoments/autocorr.hpp"
#include "zetamoments/eisenstein.hpp"
#include "zetamoments/moments.hpp"

namespace zm {

namespace {

constexpr std::array<std::pair<Suite, std::string_view>, 9> kNames = {{
    {Suite::transforms, "transforms"},
    {Suite::functional_equations, "functional-equations"},
    {Suite::bettin_conrey, "bettin-conrey"},
    {Suite::convolution, "convolution"},
    {Suite::theorem_k1, "theorem-k1"},
    {Suite::theorem_k2, "theorem-k2"},
    {Suite::theorem_k3, "theorem-k3"},
    {Suite::closed_form, "closed-form"},
    {Suite::all, "all"},
}};

std::string label(std::string_view base, Complex z) {
    std::ostringstream os;
    os.precision(6);
    os << base << " z=" << z.real();
    if (z.imag() != 0.0) os << (z.imag() > 0 ? "+" : "") << z.imag() << "i";
    return os.str();
}

std::string label(std::string_view base, double delta) {
    std::ostringstream os;
    os.precision(6);
    os << base << " delta=" << delta;
    return os.str();
}

Complex random_cut_plane(std::mt19937_64& rng, double max_arg) {
    std::uniform_real_distribution<double> mag(-3.0, 3.0);
    std::uniform_real_distribution<double> arg(-max_arg, max_arg);
    return std::polar(std::exp(mag(rng)), arg(rng));
}

std::vector<double> deltas(const SuiteOptions& o, std::vector<double> defaults) {
    if (o.delta) return {*o.delta};
    return defaults;
}

void transforms(const SuiteOptions& o, std::vector<VerifyResult>& out) {
    for (Complex z : {Complex(0.0), Complex(0.7), Complex(1.5), Complex(-0.4), Complex(0.3, 0.5)})
        out.push_back(make_result(label("B_integral = B_fourier", z), B_integral(z, o.spec), B_fourier(z, o.spec),
                                  1e-8, false));
    for (Complex s : {Complex(0.5), Complex(0.25), Complex(0.75), Complex(0.5, 1.0), Complex(0.5, -2.0)})
        out.push_back(make_result(label("mellin(A) = Q", s), mellin_A_numeric(s, o.spec), Q(s), 1e-6, true));
}

void functional_equations(const SuiteOptions& o, std::vector<VerifyResult>& out) {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const Complex z = random_cut_plane(rng, i < 20 ? kPi / 2 - 0.01 : kPi - 0.06);
        const Complex za = z * A(z, o.spec);
        // |A(1/z) - z A(z)| <= 1e-8 (1 + |z A(z)|)
        out.push_back(make_result(label("(i) A(1/z) = z A(z)", z), A(1.0 / z, o.spec), za, 1e-8 * (1.0 + std::abs(za)),
                                  false));
    }
    std::mt19937_64 rng2(9);
    for (int i = 0; i < 10; ++i) {
        const Complex z = random_cut_plane(rng2, kPi - 0.06);
        out.push_back(make_result(label("(ii) A(conj z) = conj A(z)", z), A(std::conj(z), o.spec),
                                  std::conj(A(z, o.spec)), 1e-9, false));
    }
    std::vector<Complex> points = {{0.0, 1.0}, std::polar(1.0, 0.8), {0.3, 1.5}};
    std::mt19937_64 rng3(23);
    std::uniform_real_distribution<double> mag(-1.5, 1.5);
    std::uniform_real_distribution<double> arg(0.1, kPi - 0.1);
    for (int i = 0; i < 10; ++i) points.push_back(std::polar(std::exp(mag(rng3)), arg(rng3)));
    for (Complex z : points) {
        auto r = check_feq_iii(z, o.spec, 1e-7);
        r.name = label("(iii) A(z) + A(-z)", z);
        out.push_back(std::move(r));
    }
}

void bettin_conrey(const SuiteOptions& o, std::vector<VerifyResult>& out) {
    const std::vector<Complex> points = {{0.0, 1.0},  {0.5, 0.5}, {0.0, 2.0}, std::polar(1.0, 3 * kPi / 4),
                                         {-0.4, 0.3}, {1.0, 0.3}, {0.2, 3.0}, {-1.5, 1.1},
                                         {0.7, 1.6},  {-0.1, 0.45}};
    for (Complex z : points)
        out.push_back(make_result(label("psi_upper = psi_from_A", z), psi_upper(z), psi_from_A(z, o.spec), 1e-7, true));
}

void convolution(const SuiteOptions& o, std::vector<VerifyResult>& out) {
    for (double z : {0.0, 1.0})
        out.push_back(make_result(label("B*B two routes", z), B_conv(z, 2, o.spec).value,
                                  B_conv_fourier(z, 2, o.spec).value, 1e-7, false));
    out.push_back(make_result(label("B*B*B two routes", 0.0), B_conv(0.0, 3, o.spec).value,
                              B_conv_fourier(0.0, 3, o.spec).value, 1e-5, false));
}

void theorem_k1(const SuiteOptions& o, std::vector<VerifyResult>& out) {
    for (double d : deltas(o, {0.3, 0.8, 1.2})) {
        const auto direct = moment_direct(1, d, o.spec, o.policy);
        const auto f = formula_k1(d, o.spec, o.policy);
        const Complex cont = f.term("continuation");
        auto r = make_result(label("M2 = -2i e^{i delta/2} A(-e^{i delta})", d), cont.real(), direct.value, 1e-7, true);
        r.details = {{"imag", cont.imag()}};
        r.passed = r.passed && std::fabs(cont.imag()) <= 1e-8;
        out.push_back(std::move(r));
        auto t = make_result(label("M2 = Titchmarsh form", d), f.value, direct.value, 1e-6, true);
        t.details = f.breakdown;
        out.push_back(std::move(t));
    }
}

void theorem_k2(const SuiteOptions& o, std::vector<VerifyResult>& out) {
    const bool single = o.delta.has_value();
    for (double d : deltas(o, {0.3, 0.5})) {
        const auto direct = moment_direct(2, d, o.spec, o.policy);
        const auto f = formula_k2(d, o.spec, o.policy);
        auto r = make_result(label("M4 = main + R1~ + R2~", d), f.value, direct.value, 1e-6, true);
        r.details = f.breakdown;
        out.push_back(std::move(r));
    }
    if (single) return;
    const auto direct = moment_direct(2, 0.5, o.spec, o.policy);
    const auto m = multi_integral_form(2, 0.5, o.spec, o.policy);
    out.push_back(make_result(label("M4 = multi-integral form", 0.5), m.value, direct.value, 1e-5, true));
    out.push_back(make_result(label("M4 = (4/pi) int |A(-u e^{i delta})|^2", 0.5), m.term("single_integral").real(),
                              direct.value, 1e-5, true));
    double fitted = 0.0;
    for (int i = 1; i <= 10; ++i)
        fitted = std::max(fitted, std::fabs(formula_k2(0.1 * i, o.spec, o.policy).term("R2_tilde").real()));
    out.push_back(make_bound("max |R2~| over delta in {0.1..1.0}", fitted, 20.0));
}

void theorem_k3(const SuiteOptions& o, std::vector<VerifyResult>& out) {
    const bool single = o.delta.has_value();
    double fitted = 0.0;
    for (double d : deltas(o, {0.5, 0.8})) {
        const auto direct = moment_direct(3, d, o.spec, o.policy);
        const auto f = formula_k3(d, o.spec, o.policy);
        auto r = make_result(label("M6 = 96 pi Re(...) - (12/pi^2) Re(...)", d), f.report.value, direct.value, 1e-4,
                             true);
        r.details = f.report.breakdown;
        r.details.emplace_back("assembled", f.parts.assembled);
        out.push_back(std::move(r));
        if (single) return;
        const Complex half = std::polar(1.0, d / 2);
        const double scale = std::max(1.0, std::abs(f.parts.main_M));
        out.push_back(make_result(label("Re(e^{-i delta/2} M) = Re(e^{i delta/2} conj M)", d),
                                  (std::conj(half) * f.parts.main_M).real(), (half * f.parts.main_M_conj).real(),
                                  1e-12 * scale, false));
        out.push_back(make_result(label("assembled from stored parts", d),
                                  K3Breakdown::assemble(d, f.parts.main_M, f.parts.remainders), f.parts.assembled,
                                  1e-12, true));
        fitted = std::max(fitted, std::abs(f.parts.remainders[4]));
    }
    fitted = std::max(fitted, std::abs(formula_k3(0.3, o.spec, o.policy).parts.remainders[4]));
    out.push_back(make_bound("max |R5| over delta in {0.3, 0.5, 0.8}", fitted, 50.0));
    const auto m = multi_integral_form(3, 0.8, o.spec, o.policy);
    out.push_back(
        make_result(label("M6 = multi-integral form", 0.8), m.value, moment_direct(3, 0.8, o.spec).value, 1e-3, true));
}

void closed_form(const SuiteOptions& o, std::vector<VerifyResult>& out) {
    for (int N = 0; N <= 4; ++N) {
        const auto r = closed_form_poly(N, o.spec);
        auto v = make_result("closed form N=" + std::to_string(N), r.lhs, r.rhs, 1e-7, true);
        v.details = {{"lhs_err", r.lhs_err}};
        out.push_back(std::move(v));
    }
}

}  // namespace

std::string_view to_string(Suite s) {
    for (const auto& [v, n] : kNames)
        if (v == s) return n;
    return "unknown";
}

Suite suite_from_string(std::string_view name) {
    for (const auto& [v, n] : kNames)
        if (n == name) return v;
    throw DomainError("unknown suite '" + std::string(name) + "'");
}

std::vector<VerifyResult> run_suite(Suite suite, const SuiteOptions& options) {
    options.spec.validate();
    std::vector<VerifyResult> out;
    auto run = [&](Suite s) {
        switch (s) {
            case Suite::transforms: transforms(options, out); break;
            case Suite::functional_equations: functional_equations(options, out); break;
            case Suite::bettin_conrey: bettin_conrey(options, out); break;
            case Suite::convolution: convolution(options, out); break;
            case Suite::theorem_k1: theorem_k1(options, out); break;
            case Suite::theorem_k2: theorem_k2(options, out); break;
            case Suite::theorem_k3: theorem_k3(options, out); break;
            case Suite::closed_form: closed_form(options, out); break;
            case Suite::all: break;
        }
    };
    if (suite != Suite::all) {
        run(suite);
        return out;
    }
    for (const auto& [s, name] : kNames)
        if (s != Suite::all) run(s);
    return out;
}

}  // namespace zm

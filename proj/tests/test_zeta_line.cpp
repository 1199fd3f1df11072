#include <doctest.h>

#include <cmath>
#include <vector>

#include "zetamoments/zeta.hpp"

using zm::Complex;
using zm::kPi;

namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

}  // namespace

TEST_CASE("zeta classical values") {
    CHECK(rel_err(zm::zeta(0.5), -1.4603545088095868129) < 1e-14);
    CHECK(rel_err(zm::zeta(2.0), kPi * kPi / 6.0) < 1e-15);
    CHECK_THROWS_AS(zm::zeta(1.0), zm::PoleError);
    CHECK_THROWS_AS(zm::zeta(Complex(0.0, 3.0)), zm::DomainError);
    CHECK_THROWS_AS(zm::zeta(Complex(2.5, 0.0)), zm::DomainError);
    CHECK_THROWS_AS(zm::zeta(Complex(0.5, 501.0)), zm::DomainError);
}

TEST_CASE("zeta against high-precision values") {
    struct Case {
        Complex s;
        Complex want;
    };
    const std::vector<Case> cases = {
        {{0.5, 1.0}, {0.14393642707718906032, -0.72209974353167308913}},
        {{0.5, 100.0}, {2.6926198856813240905, -0.020386029602598161771}},
        {{0.7, 300.0}, {0.85801947700652326046, 0.06464138899927153202}},
        {{1.5, -7.0}, {1.0252831987529303578, -0.23053376151897178354}},
        {{0.5, 499.0}, {2.5196462245075649642, 0.9043415013220394275}},
        {{0.1, 3.0}, {0.45748513482791188553, -0.045723698181463161861}},
    };
    for (const auto& c : cases) {
        INFO("s = " << c.s);
        CHECK(rel_err(zm::zeta(c.s), c.want) < 1e-12);
    }
    // Near the first zero the value is small; compare absolutely.
    const Complex near_zero = zm::zeta(Complex(0.5, 14.134725));
    CHECK(std::abs(near_zero - Complex(1.767429841384903915e-8, -1.1102028930923116747e-7)) < 1e-13);
}

TEST_CASE("zeta conjugate symmetry and critical points") {
    CHECK(std::abs(zm::zeta(Complex(0.5, -1.0)) - std::conj(zm::zeta(Complex(0.5, 1.0)))) < 1e-15);
    for (double t = 0.0; t <= 200.0; t += 7.3) {
        const auto p = zm::critical_point(t);
        const auto q = zm::critical_point(-t);
        CHECK(std::abs(q.value - std::conj(p.value)) <= 1e-14 * (1.0 + std::abs(p.value)));
        CHECK(std::fabs(p.sq_modulus - q.sq_modulus) <= 1e-12 * (1.0 + p.sq_modulus));
        CHECK(std::fabs(p.sq_modulus - std::norm(p.value)) <= 1e-14 * p.sq_modulus);
        CHECK(zm::zeta_sq_modulus(t) == p.sq_modulus);
    }
}

TEST_CASE("zeta at integers") {
    CHECK(zm::zeta_integer(2) == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-15));
    CHECK(zm::zeta_integer(4) == doctest::Approx(std::pow(kPi, 4) / 90.0).epsilon(1e-15));
    CHECK(zm::zeta_integer(3) == doctest::Approx(1.2020569031595942854).epsilon(1e-15));
    CHECK(zm::zeta_integer(9) == doctest::Approx(1.0020083928260822144).epsilon(1e-15));
    CHECK_THROWS_AS(zm::zeta_integer(1), zm::DomainError);
}

TEST_CASE("weight kernel") {
    CHECK(zm::weight(1, kPi / 2, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
    const double delta = 0.7;
    CHECK(zm::weight(1, delta, 50.0) / std::exp(-delta * 50.0) == doctest::Approx(2.0).epsilon(1e-14));
    // Direct formula in long double range for the extreme left tail.
    const long double direct =
        std::exp(3.0L * (kPi - 0.5L) * -10.0L) / std::pow(std::cosh(static_cast<long double>(kPi) * 10.0L), 3);
    CHECK(zm::weight(3, 0.5, -10.0) / static_cast<double>(direct) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(zm::log_weight(3, 0.5, 1000.0) == doctest::Approx(-1500.0 + 3.0 * std::log(2.0)));
    CHECK(zm::weight(2, 0.1, -30.0) > 0.0);
    CHECK_THROWS_AS(zm::weight(1, 0.0, 1.0), zm::DomainError);
    CHECK_THROWS_AS(zm::weight(1, kPi, 1.0), zm::DomainError);
}

TEST_CASE("method names round-trip") {
    for (auto m : {zm::Method::direct, zm::Method::formula_k1, zm::Method::formula_k2, zm::Method::formula_k3,
                   zm::Method::multi_integral, zm::Method::closed_form})
        CHECK(zm::method_from_string(zm::to_string(m)) == m);
    CHECK_THROWS_AS(zm::method_from_string("riemann_siegel"), zm::DomainError);
}

TEST_CASE("moment_direct guards and positivity") {
    const zm::QuadSpec spec;
    CHECK_THROWS_AS(zm::moment_direct(1, 0.01, spec), zm::GuardError);
    CHECK_THROWS_AS(zm::moment_direct(4, 0.5, spec), zm::DomainError);
    CHECK_THROWS_AS(zm::moment_direct(1, kPi, spec), zm::DomainError);

    const auto far = zm::moment_direct(1, 3.0, spec);
    CHECK(far.value > 0.0);
    CHECK(std::isfinite(far.value));
    CHECK(far.method == zm::Method::direct);
    CHECK(far.term("integral").real() == far.value);
    CHECK_THROWS_AS(far.term("missing"), std::out_of_range);
}

TEST_CASE("moment_direct is decreasing in delta") {
    const zm::QuadSpec spec;
    for (int k = 1; k <= 3; ++k) {
        double prev = 0.0;
        double prev_err = 0.0;
        bool first = true;
        for (double delta = (k == 3 ? 0.3 : 0.1); delta <= 1.5 + 1e-9; delta += (k == 3 ? 0.3 : 0.2)) {
            const auto r = zm::moment_direct(k, delta, spec);
            INFO("k = " << k << ", delta = " << delta);
            CHECK(r.value > 0.0);
            if (!first) CHECK(prev - r.value > -(prev_err + r.err_estimate));
            if (!first) CHECK(prev > r.value);
            prev = r.value;
            prev_err = r.err_estimate;
            first = false;
        }
    }
}

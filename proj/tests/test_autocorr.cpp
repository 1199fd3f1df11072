#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "zetamoments/autocorr.hpp"
#include "zetamoments/zeta.hpp"

using zm::Complex;
using zm::kPi;

namespace {

// Reference values computed with 25-digit arithmetic from the defining
// phi_1 integral (A) and from Gamma and zeta directly (Q).
constexpr double kA1 = 0.760661401507812622954;
constexpr double kA2 = 0.522209255990873139861;
constexpr double kBOne = 0.715908672707823573123;  // e^{1/2} A(e)

Complex random_cut_plane(std::mt19937_64& rng, double max_arg) {
    std::uniform_real_distribution<double> mag(-3.0, 3.0);
    std::uniform_real_distribution<double> arg(-max_arg, max_arg);
    return std::polar(std::exp(mag(rng)), arg(rng));
}

}  // namespace

TEST_CASE("phi1") {
    CHECK(zm::phi1(0.0) == Complex(-0.5, 0.0));
    for (double x : {0.0, 0.5, 1.0, 10.0}) CHECK(zm::phi1(x).real() < 0.0);
    CHECK(zm::phi1(100.0).real() == doctest::Approx(-0.01).epsilon(1e-15));
    CHECK_THROWS_AS(zm::phi1(Complex(0.0, 2.0 * kPi)), zm::PoleError);
    CHECK_THROWS_AS(zm::phi1(Complex(0.0, -4.0 * kPi)), zm::PoleError);
    // Series and closed form agree at the switch radius.
    for (double a : {0.0, 1.0, 2.0, 3.0}) {
        const Complex z = std::polar(0.5, a);
        const Complex closed = 1.0 / (std::exp(z) - 1.0) - 1.0 / z;
        CHECK(std::abs(zm::phi1(z) - closed) < 1e-14);
    }
    for (double x : {0.01, 0.3, 2.0, 40.0}) {
        const Complex z = std::polar(x, kPi / 4);
        CHECK(std::abs(zm::phi1(z)) <= 1.1 * std::min(1.0, 1.0 / x));
    }
}

TEST_CASE("A_integral values") {
    const zm::QuadSpec spec;
    CHECK(std::abs(zm::A_integral(1.0, spec) - kA1) < 1e-12);
    CHECK(std::abs(zm::A_integral(2.0, spec) - kA2) < 1e-12);
    CHECK(std::abs(zm::A_integral(0.5, spec) - 2.0 * zm::A_integral(2.0, spec)) < 1e-11);
    CHECK(std::abs(zm::A_integral(Complex(0.3, 0.8), spec) -
                   Complex(0.75629097833717543391, -0.49527765569857353576)) < 1e-11);
    CHECK(std::abs(zm::A_integral(Complex(2.0, -1.0), spec) -
                   Complex(0.47596599941615799751, 0.13540793612868055811)) < 1e-11);
    CHECK(std::abs(zm::A_integral(Complex(0.05, 0.02), spec) -
                   Complex(2.0979451413474986427, -0.1875129108011218749)) < 1e-10);
    for (double x : {0.01, 0.3, 7.0, 300.0}) CHECK(std::fabs(zm::A_integral(x, spec).imag()) <= 1e-10);
    CHECK_THROWS_AS(zm::A_integral(Complex(-1.0, 1.0), spec), zm::DomainError);
}

TEST_CASE("A_integral truncation doubling") {
    zm::QuadSpec near;
    near.tail_cutoff = 40.0;
    zm::QuadSpec far = near;
    far.tail_cutoff = 80.0;
    const Complex a = zm::A_integral(1.0, near);
    const Complex b = zm::A_integral(1.0, far);
    CHECK(std::abs(a - b) < 1e-10 * std::abs(a));
}

TEST_CASE("A asymptotic expansion") {
    const zm::QuadSpec spec;
    for (Complex z : {Complex(1e4, 0.0), Complex(0.0, 2e4), Complex(-3e4, 5e3), Complex(1e-4, 0.0),
                      std::polar(2e-5, 2.5)}) {
        const Complex want = (std::fabs(std::arg(z)) <= 1.0) ? zm::A_integral(z, spec) : zm::A_continuation(z, spec);
        INFO("z = " << z);
        CHECK(std::abs(zm::A_asymptotic(z) - want) <= 1e-10 * (1.0 + std::abs(want)));
    }
    CHECK_THROWS_AS(zm::A_asymptotic(std::polar(1e5, kPi - 0.01)), zm::DomainError);
}

TEST_CASE("B_integral") {
    const zm::QuadSpec spec;
    CHECK(std::abs(zm::B_integral(0.0, spec) - kA1) < 1e-12);
    CHECK(std::abs(zm::B_integral(1.0, spec) - kBOne) < 1e-12);
    const Complex via_a = std::exp(0.5) * zm::A_integral(std::exp(1.0), spec);
    CHECK(std::abs(zm::B_integral(1.0, spec) - via_a) < 1e-9);
    for (double y : {0.3, 2.0, 7.5}) {
        CHECK(std::abs(zm::B_integral(y, spec) - zm::B_integral(-y, spec)) < 1e-12);
        CHECK(std::fabs(zm::B_integral(y, spec).imag()) < 1e-12);
        CHECK(zm::B_real(y, spec) == doctest::Approx(zm::B_integral(y, spec).real()).epsilon(1e-14));
    }
    CHECK(zm::B_real(25.0, spec) == doctest::Approx(zm::B_integral(25.0, spec).real()).epsilon(1e-10));
    CHECK_THROWS_AS(zm::B_integral(Complex(0.0, 3.2), spec), zm::DomainError);
}

TEST_CASE("Q") {
    CHECK(std::abs(zm::Q(0.5) - 6.6998713642501059833) < 1e-12);
    const double product = std::sqrt(kPi) * -1.4603545088095868129;
    CHECK(zm::Q(0.5).real() == doctest::Approx(product * product).epsilon(1e-13));
    CHECK(std::abs(zm::Q(0.3) - 9.7593796958401436322) < 1e-11);
    CHECK(std::abs(zm::Q(Complex(0.5, 2.0)) - 0.003416825885058385345) < 1e-15);
    CHECK(std::abs(zm::Q(0.8) - zm::Q(0.2)) < 1e-12);
    const Complex q = zm::Q(Complex(0.5, -1.7));
    CHECK(std::fabs(q.imag()) < 1e-15 * std::abs(q) * 10);
    CHECK(q.real() > 0.0);
    CHECK(q.real() == doctest::Approx(kPi * zm::zeta_sq_modulus(1.7) / std::cosh(kPi * 1.7)).epsilon(1e-13));
    CHECK_THROWS_AS(zm::Q(1.2), zm::DomainError);
}

TEST_CASE("transform pair B_integral / B_fourier") {
    const zm::QuadSpec spec;
    for (Complex z : {Complex(0.0), Complex(0.7), Complex(1.2), Complex(1.5), Complex(-0.4), Complex(0.3, 0.5),
                      Complex(0.0, -1.0)}) {
        INFO("z = " << z);
        CHECK(std::abs(zm::B_integral(z, spec) - zm::B_fourier(z, spec)) <= 1e-8);
    }
    CHECK_THROWS_AS(zm::B_fourier(Complex(0.0, kPi - 0.01), spec), zm::DomainError);
}

TEST_CASE("B_fourier at -i(pi - delta) is half the second moment") {
    const zm::QuadSpec spec;
    for (double delta : {0.8, kPi / 2}) {
        const Complex b = zm::B_fourier(Complex(0.0, -(kPi - delta)), spec);
        const auto m = zm::moment_direct(1, delta, spec);
        CHECK(std::fabs(b.imag()) < 1e-12);
        CHECK(std::fabs(2.0 * b.real() - m.value) <= 1e-8 * m.value);
    }
}

TEST_CASE("A_continuation") {
    const zm::QuadSpec spec;
    CHECK(std::abs(zm::A_continuation(1.0, spec) - kA1) < 1e-9);
    const Complex ai = zm::A_continuation(Complex(0.0, 1.0), spec);
    const Complex ami = zm::A_continuation(Complex(0.0, -1.0), spec);
    CHECK(std::abs(ami - std::conj(ai)) < 1e-12);
    const Complex steep = std::polar(1.0, 1.2);
    CHECK(std::abs(zm::A_continuation(steep, spec) - zm::A_integral(steep, spec)) < 1e-8);
    CHECK_THROWS_AS(zm::A_continuation(std::polar(1.0, kPi - 0.01), spec), zm::DomainError);
    CHECK_THROWS_AS(zm::A_continuation(-2.0, spec), zm::DomainError);

    std::mt19937_64 rng(3);
    for (int i = 0; i < 20; ++i) {
        const Complex z = random_cut_plane(rng, 1.4);
        INFO("z = " << z);
        CHECK(std::abs(zm::A_continuation(z, spec) - zm::A_integral(z, spec)) <= 1e-8);
    }
}

TEST_CASE("functional equation (i): inversion") {
    const zm::QuadSpec spec;
    std::mt19937_64 rng(5);
    for (int i = 0; i < 30; ++i) {
        const Complex z = random_cut_plane(rng, i < 20 ? 1.5 : kPi - 0.06);
        const Complex za = z * zm::A(z, spec);
        INFO("z = " << z);
        CHECK(std::abs(zm::A(1.0 / z, spec) - za) <= 1e-8 * (1.0 + std::abs(za)));
    }
}

TEST_CASE("functional equation (ii): conjugation") {
    const zm::QuadSpec spec;
    std::mt19937_64 rng(9);
    for (int i = 0; i < 10; ++i) {
        const Complex z = random_cut_plane(rng, kPi - 0.06);
        INFO("z = " << z);
        CHECK(std::abs(zm::A(std::conj(z), spec) - std::conj(zm::A(z, spec))) <= 1e-9);
    }
}

TEST_CASE("positivity and growth near zero") {
    const zm::QuadSpec spec;
    for (double u : {0.1, 1.0, 10.0}) CHECK(zm::A(u, spec).real() > 0.0);
    double fitted = 0.0;
    for (double lr = -4.0; lr <= 0.0; lr += 0.5)
        for (double a : {-kPi / 4, 0.0, kPi / 4}) {
            const double r = std::pow(10.0, lr);
            const Complex z = std::polar(r, a);
            fitted = std::max(fitted, std::abs(zm::A(z, spec)) / (1.0 + std::log(1.0 / r)));
        }
    CHECK(fitted <= 5.0);
}

TEST_CASE("Mellin transform of A is Q") {
    const zm::QuadSpec spec;
    for (Complex s : {Complex(0.5), Complex(0.5, 1.0), Complex(0.5, -1.0), Complex(0.5, 2.0), Complex(0.5, 2.5),
                      Complex(0.25), Complex(0.3), Complex(0.75)}) {
        const Complex q = zm::Q(s);
        INFO("s = " << s);
        CHECK(std::abs(zm::mellin_A_numeric(s, spec) - q) <= 1e-6 * std::abs(q));
    }
    CHECK(std::abs(zm::mellin_A_numeric(0.3, spec) - zm::mellin_A_numeric(0.7, spec)) < 1e-8);
}

TEST_CASE("continuation kernel") {
    const zm::QuadSpec spec;
    for (double arg : {0.8 - kPi, 0.5, 2.0}) {
        const zm::ContinuationKernel kernel(arg);
        for (double r : {1e-3, 0.2, 1.0, 3.7, 900.0}) {
            const Complex z = std::polar(r, arg);
            INFO("arg = " << arg << ", r = " << r);
            CHECK(std::abs(kernel(r) - zm::A_continuation(z, spec)) <= 1e-10 * (1.0 + std::abs(kernel(r))));
        }
        CHECK(std::abs(kernel(5e4) - zm::A_asymptotic(std::polar(5e4, arg))) == 0.0);
    }
    CHECK_THROWS_AS(zm::ContinuationKernel(kPi - 0.01), zm::DomainError);
}

TEST_CASE("convolution of B") {
    const zm::QuadSpec spec;
    for (double z : {0.0, 1.0}) {
        const auto conv = zm::B_conv(z, 2, spec);
        const auto four = zm::B_conv_fourier(z, 2, spec);
        INFO("z = " << z);
        CHECK(std::abs(conv.value - four.value) <= 1e-7);
    }
    const auto conv3 = zm::B_conv(0.0, 3, spec);
    const auto four3 = zm::B_conv_fourier(0.0, 3, spec);
    CHECK(std::abs(conv3.value - four3.value) <= 1e-5);
    // B is even, so the k = 2 convolution at 0 is the L2 norm of B.
    CHECK(zm::B_conv(0.0, 2, spec).value.real() > 0.0);
    CHECK_THROWS_AS(zm::B_conv(0.0, 4, spec), zm::DomainError);
}

#include "zetamoments/gamma.hpp"

#include <array>

namespace zm {

namespace {

// Godfrey's coefficients for g = 607/128, 15 terms.
constexpr double kLanczosG = 5.24218750000000000;
constexpr std::array<double, 14> kLanczos = {
    57.1562356658629235,     -59.5979603554754912,    14.1360979747417471,
    -0.491913816097620199,   .339946499848118887e-4,  .465236289270485756e-4,
    -.983744753048795646e-4, .158088703224912494e-3,  -.210264441724104883e-3,
    .217439618115212643e-3,  -.164318106536763890e-3, .844182239838527433e-4,
    -.261908384015814087e-4, .368991826595316234e-5,
};
constexpr double kLanczos0 = 0.999999999999997092;
constexpr double kSqrt2Pi = 2.5066282746310005;

bool is_nonpositive_integer(Complex z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && std::floor(z.real()) == z.real();
}

}  // namespace

Complex log_gamma_right(Complex z) {
    Complex tmp = z + kLanczosG;
    tmp = (z + 0.5) * std::log(tmp) - tmp;
    Complex ser = kLanczos0;
    Complex y = z;
    for (double c : kLanczos) {
        y += 1.0;
        ser += c / y;
    }
    return tmp + std::log(kSqrt2Pi * ser / z);
}

Complex gamma(Complex z) {
    if (!is_finite(z)) throw DomainError("gamma: non-finite argument");
    if (is_nonpositive_integer(z)) throw PoleError("gamma: pole at non-positive integer");
    if (z.real() >= 0.5) return std::exp(log_gamma_right(z));
    // Reflection. sin(pi z) is evaluated after reducing Re z to [-1/2, 1/2)
    // so large negative real parts do not lose the sign through pi * z.
    const double shift = std::round(z.real());
    const Complex reduced{z.real() - shift, z.imag()};
    Complex s = std::sin(kPi * reduced);
    if (static_cast<long long>(shift) % 2 != 0) s = -s;
    return kPi / (s * std::exp(log_gamma_right(1.0 - z)));
}

}  // namespace zm

#include "zetamoments/complex.hpp"

#include <sstream>

namespace zm {

namespace {

std::string describe(Complex z) {
    std::ostringstream os;
    os.precision(17);
    os << "(" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

void require_finite(Complex z, const char* who) {
    if (!is_finite(z)) throw DomainError(std::string(who) + ": non-finite argument " + describe(z));
}

}  // namespace

Complex log_principal(Complex z) {
    require_finite(z, "log_principal");
    if (on_negative_axis(z)) throw DomainError("log_principal: argument on the branch cut " + describe(z));
    return {std::log(std::abs(z)), std::arg(z)};
}

CutPlanePoint::CutPlanePoint(Complex z) : z_(z) {
    require_finite(z, "CutPlanePoint");
    if (on_negative_axis(z)) throw DomainError("CutPlanePoint: z on (-inf, 0]: " + describe(z));
}

RightHalfPoint::RightHalfPoint(Complex z) : z_(z) {
    require_finite(z, "RightHalfPoint");
    if (!(z.real() > 0.0)) throw DomainError("RightHalfPoint: Re z must be positive: " + describe(z));
}

StripPoint::StripPoint(Complex z) : z_(z) {
    require_finite(z, "StripPoint");
    if (!(std::fabs(z.imag()) < kPi)) throw DomainError("StripPoint: |Im z| must be < pi: " + describe(z));
}

UpperHalfPoint::UpperHalfPoint(Complex z) : z_(z) {
    require_finite(z, "UpperHalfPoint");
    if (!(z.imag() > 0.0)) throw DomainError("UpperHalfPoint: Im z must be positive: " + describe(z));
}

}  // namespace zm

#include "zetamoments/verify.hpp"

#include <algorithm>
#include <cmath>

namespace zm {

VerifyResult make_result(std::string name, Complex lhs, Complex rhs, double tol, bool relative) {
    VerifyResult r;
    r.name = std::move(name);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    const double scale = std::abs(rhs);
    r.rel_err = scale > 0.0 ? r.abs_err / scale : r.abs_err;
    r.tol = tol;
    r.relative = relative;
    r.passed = is_finite(lhs) && is_finite(rhs) && (relative ? r.rel_err : r.abs_err) <= tol;
    return r;
}

VerifyResult make_bound(std::string name, double value, double bound) {
    VerifyResult r;
    r.name = std::move(name);
    r.lhs = value;
    r.rhs = bound;
    r.abs_err = std::max(0.0, value - bound);
    r.rel_err = bound > 0.0 ? r.abs_err / bound : r.abs_err;
    r.tol = bound;
    r.passed = std::isfinite(value) && value <= bound;
    return r;
}

}  // namespace zm

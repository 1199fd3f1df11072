#pragma once

#include <string>
#include <vector>

#include "zetamoments/complex.hpp"

namespace zm {

/// One identity check: both sides, their discrepancy and the tolerance applied.
struct VerifyResult {
    std::string name;
    Complex lhs;
    Complex rhs;
    double abs_err = 0.0;
    double rel_err = 0.0;
    double tol = 0.0;
    bool relative = false;  // tol applies to rel_err when set, to abs_err otherwise
    bool passed = false;
    std::vector<std::pair<std::string, Complex>> details;
};

/// Builds a result, computing the discrepancies and the pass flag.
/// rel_err is |lhs - rhs| / |rhs| (or abs_err when rhs = 0).
VerifyResult make_result(std::string name, Complex lhs, Complex rhs, double tol, bool relative);

/// Bound check: passes when value <= bound. lhs holds the value, rhs and tol the bound.
VerifyResult make_bound(std::string name, double value, double bound);

}  // namespace zm

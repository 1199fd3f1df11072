#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "zetamoments/quadrature.hpp"
#include "zetamoments/verify.hpp"
#include "zetamoments/zeta.hpp"

namespace zm {

enum class Suite {
    transforms,
    functional_equations,
    bettin_conrey,
    convolution,
    theorem_k1,
    theorem_k2,
    theorem_k3,
    closed_form,
    all
};

std::string_view to_string(Suite s);
/// Accepts the hyphenated names ("functional-equations", "theorem-k3", ...).
Suite suite_from_string(std::string_view name);

struct SuiteOptions {
    QuadSpec spec;
    /// Restricts the theorem suites to a single delta.
    std::optional<double> delta;
    GuardPolicy policy = GuardPolicy::enforce;
};

/// Runs every identity of a suite in a fixed order. Numerical failures propagate
/// as exceptions; failed identities are reported through VerifyResult::passed.
std::vector<VerifyResult> run_suite(Suite suite, const SuiteOptions& options = {});

}  // namespace zm

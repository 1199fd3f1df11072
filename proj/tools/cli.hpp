#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace zm::cli {

enum ExitCode : int { kOk = 0, kFailed = 1, kConfig = 2, kTolerance = 3 };

/// Runs the command line; argv[0] is the program name. Reports go to `out`
/// (or --out), diagnostics to `err`.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Decimal text with at most 15 significant digits, the shortest that reads back
/// to the same 15-digit value.
std::string format_number(double x);

/// One parsed row of `scan --format csv`. Empty cells become empty optionals.
struct ScanCsvRow {
    double delta = 0.0;
    std::optional<double> value;
    std::optional<double> main;
    std::vector<std::optional<double>> remainders;
    std::optional<double> ratio;
    std::optional<double> remainder_fraction;
    std::string error;
};

struct ScanCsv {
    std::vector<std::string> header;
    std::vector<ScanCsvRow> rows;
};

ScanCsv parse_scan_csv(const std::string& text);
std::string emit_scan_csv(const ScanCsv& table);

}  // namespace zm::cli

#include <doctest.h>

#include <cli.hpp>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <string>
#include <vector>

#include "zetamoments/zeta.hpp"

namespace {

struct Outcome {
    int code = -1;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    args.insert(args.begin(), "zm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    Outcome o;
    o.code = zm::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    o.out = out.str();
    o.err = err.str();
    return o;
}

}  // namespace

TEST_CASE("moment command") {
    const auto o = run({"moment", "--k", "1", "--delta", "0.8", "--method", "formula_k1"});
    REQUIRE(o.code == 0);
    const auto doc = nlohmann::json::parse(o.out);
    // nlohmann::json sorts keys on parse; order is checked on the raw text below.
    for (const char* k : {"k", "delta", "method", "value", "err_estimate", "breakdown", "wall_time_ms", "quad_spec"})
        CHECK(doc.contains(k));
    CHECK(doc["method"] == "formula_k1");
    const double direct = zm::moment_direct(1, 0.8, {}).value;
    CHECK(std::fabs(doc["value"].get<double>() - direct) <= 1e-7 * direct);
    CHECK(doc["quad_spec"]["abs_tol"].get<double>() == 1e-10);
    // Field order in the emitted text follows the schema.
    CHECK(o.out.find("\"k\"") < o.out.find("\"delta\""));
    CHECK(o.out.find("\"value\"") < o.out.find("\"breakdown\""));

    const auto k3 = run({"moment", "--k", "3", "--delta", "0.5", "--method", "direct"});
    REQUIRE(k3.code == 0);
    CHECK(nlohmann::json::parse(k3.out)["value"].get<double>() > 0.0);
}

TEST_CASE("exit codes") {
    CHECK(run({"moment", "--k", "2", "--delta", "0.01"}).code == 2);
    CHECK(run({"moment", "--k", "2", "--delta", "0.5", "--method", "formula_k3"}).code == 2);
    CHECK(run({"moment", "--k", "2", "--delta", "0.5", "--abs-tol", "-1"}).code == 2);
    CHECK(run({"verify", "--suite", "nonsense"}).code == 2);
    CHECK(run({"scan", "--k", "2", "--delta-grid", "0.5,0.6,0.55"}).code == 2);
    CHECK(run({"scan", "--k", "3", "--delta-grid", "0.5,0.1"}).code == 2);
    CHECK(run({}).code == 2);
    // Guards waived but the truncation point runs past the zeta ordinate limit.
    const auto far = run({"moment", "--k", "1", "--delta", "0.001", "--override-guards"});
    CHECK(far.code == 3);
    CHECK(far.err.find("tolerance not met") != std::string::npos);
    CHECK(run({"--help"}).code == 0);
}

TEST_CASE("verify command") {
    const auto closed = run({"verify", "--suite", "closed-form"});
    REQUIRE(closed.code == 0);
    const auto doc = nlohmann::json::parse(closed.out);
    CHECK(doc["results"].size() == 5);
    for (const auto& r : doc["results"]) CHECK(r["passed"].get<bool>());

    const auto tr = run({"verify", "--suite", "transforms", "--format", "csv"});
    CHECK(tr.code == 0);
    CHECK(tr.out.find(",false") == std::string::npos);

    const auto k3 = run({"verify", "--suite", "theorem-k3", "--delta", "0.8"});
    REQUIRE(k3.code == 0);
    const auto d3 = nlohmann::json::parse(k3.out);
    REQUIRE(d3["results"].size() == 1);
    const auto& details = d3["results"][0]["details"];
    for (const char* k : {"main_M", "R1", "R2", "R3", "R4", "R5", "assembled"}) CHECK(details.contains(k));
}

TEST_CASE("scan command") {
    const auto o = run({"scan", "--k", "2", "--delta-grid", "1.0,0.5,0.25", "--format", "csv"});
    REQUIRE(o.code == 0);
    const auto table = zm::cli::parse_scan_csv(o.out);
    REQUIRE(table.rows.size() == 3);
    CHECK(table.header == std::vector<std::string>{"delta", "value", "main", "r1", "r2", "ratio_keating_snaith",
                                                   "remainder_fraction", "error"});
    CHECK(*table.rows[1].remainder_fraction < *table.rows[0].remainder_fraction);
    CHECK(*table.rows[2].remainder_fraction < *table.rows[1].remainder_fraction);
    CHECK_FALSE(table.rows[0].ratio.has_value());

    const auto single = run({"scan", "--k", "1", "--delta-grid", "0.5"});
    REQUIRE(single.code == 0);
    CHECK(nlohmann::json::parse(single.out)["rows"].size() == 1);
}

TEST_CASE("scan csv round trip") {
    const auto o = run({"scan", "--k", "3", "--delta-grid", "0.8,0.5", "--format", "csv"});
    REQUIRE(o.code == 0);
    const auto first = zm::cli::parse_scan_csv(o.out);
    const std::string emitted = zm::cli::emit_scan_csv(first);
    const auto second = zm::cli::parse_scan_csv(emitted);
    CHECK(zm::cli::emit_scan_csv(second) == emitted);
    REQUIRE(second.rows.size() == first.rows.size());
    for (std::size_t i = 0; i < first.rows.size(); ++i) {
        CHECK(second.rows[i].delta == first.rows[i].delta);
        CHECK(second.rows[i].value == first.rows[i].value);
        CHECK(second.rows[i].remainders == first.rows[i].remainders);
        CHECK(second.rows[i].ratio == first.rows[i].ratio);
    }
    // The body after the spec comment is exactly what emit produces.
    CHECK(o.out.substr(o.out.find('\n') + 1) == emitted);

    zm::cli::ScanCsv t;
    t.header = {"delta", "value", "main", "ratio_keating_snaith", "remainder_fraction", "error"};
    zm::cli::ScanCsvRow r;
    r.delta = 0.01;
    r.error = "guard: delta, \"too\" small";
    t.rows.push_back(r);
    const auto back = zm::cli::parse_scan_csv(zm::cli::emit_scan_csv(t));
    CHECK(back.rows.at(0).error == r.error);
    CHECK_FALSE(back.rows.at(0).value.has_value());
}

TEST_CASE("determinism and --out") {
    const std::vector<std::string> args = {"moment", "--k", "2", "--delta", "0.5", "--method", "formula_k2",
                                           "--no-timing"};
    const auto a = run(args);
    const auto b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);

    const std::string path = "zm_cli_test_out.json";
    auto with_out = args;
    with_out.insert(with_out.end(), {"--out", path});
    const auto c = run(with_out);
    CHECK(c.code == 0);
    CHECK(c.out.empty());
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == a.out);
    std::remove(path.c_str());
}

TEST_CASE("number formatting") {
    CHECK(zm::cli::format_number(0.1) == "0.1");
    CHECK(zm::cli::format_number(1e-10) == "1e-10");
    CHECK(zm::cli::format_number(2.40784574414864123) == "2.40784574414864");
    CHECK(zm::cli::format_number(-3.0) == "-3");
    const double x = 0.12345678901234567;
    CHECK(std::stod(zm::cli::format_number(x)) == std::stod(zm::cli::format_number(std::stod(zm::cli::format_number(x)))));
}

TEST_CASE("table command") {
    const auto o = run({"table", "--n-max", "3"});
    REQUIRE(o.code == 0);
    const auto doc = nlohmann::json::parse(o.out);
    REQUIRE(doc["rows"].size() == 4);
    CHECK(doc["rows"][1]["t_coeffs"][0] == "16");
    CHECK(run({"table", "--n-max", "7"}).code == 2);
}

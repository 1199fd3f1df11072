#include "cli.hpp"

#include <CLI11.hpp>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <ostream>
#include <sstream>

#include "zetamoments/moments.hpp"
#include "zetamoments/suites.hpp"
#include "zetamoments/zeta.hpp"

namespace zm::cli {

namespace {

using Json = nlohmann::ordered_json;

struct RunConfig {
    std::string command;
    int k = 1;
    double delta = NAN;
    std::vector<double> delta_grid;
    std::string method = "direct";
    std::string suite = "all";
    int n_max = 4;
    QuadSpec spec;
    std::string format = "json";
    std::string out_path;
    bool override_guards = false;
    bool no_timing = false;

    GuardPolicy policy() const { return override_guards ? GuardPolicy::override_guards : GuardPolicy::enforce; }
};

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double round15(double x) {
    if (!std::isfinite(x)) return x;
    return std::strtod(format_number(x).c_str(), nullptr);
}

Json number(double x) {
    if (!std::isfinite(x)) return nullptr;
    return round15(x);
}

Json complex_value(Complex z) {
    if (z.imag() == 0.0) return number(z.real());
    return Json{{"re", number(z.real())}, {"im", number(z.imag())}};
}

Json spec_json(const QuadSpec& s) {
    return Json{{"abs_tol", number(s.abs_tol)},
                {"rel_tol", number(s.rel_tol)},
                {"max_depth", s.max_depth},
                {"tail_cutoff", number(s.tail_cutoff)},
                {"series_tol", number(s.series_tol)}};
}

std::string spec_comment(const QuadSpec& s) {
    return "# abs_tol=" + format_number(s.abs_tol) + " rel_tol=" + format_number(s.rel_tol) +
           " max_depth=" + std::to_string(s.max_depth) + " tail_cutoff=" + format_number(s.tail_cutoff) +
           " series_tol=" + format_number(s.series_tol) + "\n";
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

std::string opt_number(const std::optional<double>& x) { return x ? format_number(*x) : std::string(); }

Json timing(const RunConfig& cfg, std::chrono::steady_clock::time_point start) {
    if (cfg.no_timing) return nullptr;
    return number(std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count());
}

// ---------------------------------------------------------------- verify

std::string render_verify(const RunConfig& cfg, const std::vector<VerifyResult>& rows, const Json& wall) {
    bool all = true;
    for (const auto& r : rows) all = all && r.passed;
    if (cfg.format == "json") {
        Json results = Json::array();
        for (const auto& r : rows) {
            Json details = Json::object();
            for (const auto& [name, v] : r.details) details[name] = complex_value(v);
            results.push_back(Json{{"name", r.name},
                                   {"lhs", complex_value(r.lhs)},
                                   {"rhs", complex_value(r.rhs)},
                                   {"abs_err", number(r.abs_err)},
                                   {"rel_err", number(r.rel_err)},
                                   {"tol", number(r.tol)},
                                   {"mode", r.relative ? "relative" : "absolute"},
                                   {"passed", r.passed},
                                   {"details", details}});
        }
        Json doc{{"command", "verify"},
                 {"suite", cfg.suite},
                 {"delta", number(cfg.delta)},
                 {"quad_spec", spec_json(cfg.spec)},
                 {"passed", all},
                 {"results", results},
                 {"wall_time_ms", wall}};
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << spec_comment(cfg.spec);
        os << "name,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,rel_err,tol,mode,passed\n";
        for (const auto& r : rows)
            os << csv_field(r.name) << ',' << format_number(r.lhs.real()) << ',' << format_number(r.lhs.imag()) << ','
               << format_number(r.rhs.real()) << ',' << format_number(r.rhs.imag()) << ','
               << format_number(r.abs_err) << ',' << format_number(r.rel_err) << ',' << format_number(r.tol) << ','
               << (r.relative ? "relative" : "absolute") << ',' << (r.passed ? "true" : "false") << '\n';
        return os.str();
    }
    os << "suite " << cfg.suite << "  (abs_tol " << format_number(cfg.spec.abs_tol) << ", rel_tol "
       << format_number(cfg.spec.rel_tol) << ", max_depth " << cfg.spec.max_depth << ")\n";
    for (const auto& r : rows) {
        char line[512];
        std::snprintf(line, sizeof line, "%-4s %-58s lhs %-22s rhs %-22s err %-10s tol %s %s\n",
                      r.passed ? "PASS" : "FAIL", r.name.c_str(), format_number(r.lhs.real()).c_str(),
                      format_number(r.rhs.real()).c_str(),
                      format_number(r.relative ? r.rel_err : r.abs_err).c_str(), format_number(r.tol).c_str(),
                      r.relative ? "(rel)" : "(abs)");
        os << line;
    }
    os << (all ? "all passed" : "FAILED") << " (" << rows.size() << " identities)\n";
    return os.str();
}

int cmd_verify(const RunConfig& cfg, std::string& text) {
    const auto start = std::chrono::steady_clock::now();
    SuiteOptions opts;
    opts.spec = cfg.spec;
    if (std::isfinite(cfg.delta)) opts.delta = cfg.delta;
    opts.policy = cfg.policy();
    const auto rows = run_suite(suite_from_string(cfg.suite), opts);
    text = render_verify(cfg, rows, timing(cfg, start));
    for (const auto& r : rows)
        if (!r.passed) return kFailed;
    return kOk;
}

// ---------------------------------------------------------------- moment

MomentReport evaluate(const RunConfig& cfg) {
    const Method m = method_from_string(cfg.method);
    const int k = cfg.k;
    if (k < 1 || k > 3) throw ConfigError("--k must be 1, 2 or 3");
    switch (m) {
        case Method::direct: return moment_direct(k, cfg.delta, cfg.spec, cfg.policy());
        case Method::formula_k1:
        case Method::formula_k2:
        case Method::formula_k3: {
            const int mk = m == Method::formula_k1 ? 1 : (m == Method::formula_k2 ? 2 : 3);
            if (mk != k) throw ConfigError("--method " + cfg.method + " requires --k " + std::to_string(mk));
            if (mk == 1) return formula_k1(cfg.delta, cfg.spec, cfg.policy());
            if (mk == 2) return formula_k2(cfg.delta, cfg.spec, cfg.policy());
            return formula_k3(cfg.delta, cfg.spec, cfg.policy()).report;
        }
        case Method::multi_integral:
            if (k == 1) throw ConfigError("--method multi_integral requires --k 2 or 3");
            return multi_integral_form(k, cfg.delta, cfg.spec, cfg.policy());
        case Method::closed_form: throw ConfigError("closed_form is a table, not a moment route (use `table`)");
    }
    throw ConfigError("unknown method");
}

int cmd_moment(const RunConfig& cfg, std::string& text) {
    if (!std::isfinite(cfg.delta)) throw ConfigError("--delta is required");
    const auto start = std::chrono::steady_clock::now();
    const MomentReport rep = evaluate(cfg);
    const Json wall = timing(cfg, start);
    if (cfg.format == "json") {
        Json breakdown = Json::object();
        for (const auto& [name, v] : rep.breakdown) breakdown[name] = complex_value(v);
        Json doc{{"k", rep.k},
                 {"delta", number(rep.delta)},
                 {"method", std::string(to_string(rep.method))},
                 {"value", number(rep.value)},
                 {"err_estimate", number(rep.err_estimate)},
                 {"breakdown", breakdown},
                 {"quad_spec", spec_json(cfg.spec)},
                 {"wall_time_ms", wall}};
        text = doc.dump(2) + "\n";
        return kOk;
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << spec_comment(cfg.spec);
        os << "k,delta,method,value,err_estimate,wall_time_ms";
        for (const auto& [name, v] : rep.breakdown) os << ',' << csv_field(name + "_re") << ',' << csv_field(name + "_im");
        os << '\n'
           << rep.k << ',' << format_number(rep.delta) << ',' << to_string(rep.method) << ','
           << format_number(rep.value) << ',' << format_number(rep.err_estimate) << ','
           << (wall.is_null() ? std::string() : format_number(wall.get<double>()));
        for (const auto& [name, v] : rep.breakdown) os << ',' << format_number(v.real()) << ',' << format_number(v.imag());
        os << '\n';
        text = os.str();
        return kOk;
    }
    os << "M_" << 2 * rep.k << "(" << format_number(rep.delta) << ") via " << to_string(rep.method) << " = "
       << format_number(rep.value) << "  (err " << format_number(rep.err_estimate) << ")\n";
    for (const auto& [name, v] : rep.breakdown) {
        os << "  " << name << " = " << format_number(v.real());
        if (v.imag() != 0.0) os << (v.imag() < 0 ? " - " : " + ") << format_number(std::fabs(v.imag())) << "i";
        os << '\n';
    }
    os << "  quad_spec: abs_tol " << format_number(cfg.spec.abs_tol) << ", rel_tol " << format_number(cfg.spec.rel_tol)
       << ", max_depth " << cfg.spec.max_depth << '\n';
    text = os.str();
    return kOk;
}

// ---------------------------------------------------------------- scan

void check_grid(const RunConfig& cfg) {
    const auto& g = cfg.delta_grid;
    if (g.empty()) throw ConfigError("--delta-grid is required");
    if (cfg.k < 1 || cfg.k > 3) throw ConfigError("--k must be 1, 2 or 3");
    if (g.size() > 1) {
        const bool up = g[1] > g[0];
        for (std::size_t i = 1; i < g.size(); ++i)
            if ((up && !(g[i] > g[i - 1])) || (!up && !(g[i] < g[i - 1])))
                throw ConfigError("--delta-grid must be strictly monotone");
    }
    double floor = cfg.k == 3 ? kFormulaK3Floor : kDeltaFloor;
    if (cfg.override_guards) floor = cfg.k == 3 ? kDeltaFloor : 0.0;
    for (double d : g) {
        if (!(d > 0.0 && d < kPi / 2)) throw ConfigError("delta " + format_number(d) + " outside (0, pi/2)");
        if (d < floor)
            throw GuardError("delta " + format_number(d) + " below the guard " + format_number(floor) +
                             " (use --override-guards)");
    }
}

ScanCsv to_table(int k, const std::vector<ScanRow>& rows) {
    ScanCsv t;
    t.header = {"delta", "value", "main"};
    const int nr = k == 3 ? 5 : (k == 2 ? 2 : 0);
    for (int j = 1; j <= nr; ++j) t.header.push_back("r" + std::to_string(j));
    t.header.insert(t.header.end(), {"ratio_keating_snaith", "remainder_fraction", "error"});
    for (const auto& r : rows) {
        ScanCsvRow c;
        c.delta = round15(r.delta);
        c.error = r.error;
        c.remainders.assign(static_cast<std::size_t>(nr), std::nullopt);
        if (r.report) {
            c.value = round15(r.report->value);
            c.main = round15(r.main);
            for (std::size_t j = 0; j < r.remainders.size() && j < c.remainders.size(); ++j)
                c.remainders[j] = round15(r.remainders[j]);
            if (r.ratio) c.ratio = round15(*r.ratio);
            c.remainder_fraction = round15(r.remainder_fraction);
        }
        t.rows.push_back(std::move(c));
    }
    return t;
}

int cmd_scan(const RunConfig& cfg, std::string& text) {
    check_grid(cfg);
    const auto start = std::chrono::steady_clock::now();
    const auto rows = scan_delta(cfg.k, cfg.delta_grid, cfg.spec, cfg.policy());
    const Json wall = timing(cfg, start);
    bool any = false;
    for (const auto& r : rows) any = any || r.report.has_value();
    const ScanCsv table = to_table(cfg.k, rows);

    if (cfg.format == "json") {
        Json out = Json::array();
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const auto& r = rows[i];
            const auto& c = table.rows[i];
            Json row{{"delta", number(r.delta)}};
            if (r.report) {
                row["value"] = number(r.report->value);
                row["err_estimate"] = number(r.report->err_estimate);
                row["main"] = number(r.main);
                Json rem = Json::array();
                for (const auto& v : c.remainders) rem.push_back(v ? Json(*v) : Json(nullptr));
                row["remainders"] = rem;
                Json frac = Json::array();
                for (double f : r.fractions) frac.push_back(number(f));
                row["remainder_fractions"] = frac;
                row["ratio_keating_snaith"] = r.ratio ? number(*r.ratio) : Json(nullptr);
                row["remainder_fraction"] = number(r.remainder_fraction);
            }
            row["error"] = r.error.empty() ? Json(nullptr) : Json(r.error);
            out.push_back(row);
        }
        Json doc{{"command", "scan"},
                 {"k", cfg.k},
                 {"quad_spec", spec_json(cfg.spec)},
                 {"rows", out},
                 {"wall_time_ms", wall}};
        text = doc.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        text = spec_comment(cfg.spec) + emit_scan_csv(table);
    } else {
        std::ostringstream os;
        os << "scan k=" << cfg.k << "  (abs_tol " << format_number(cfg.spec.abs_tol) << ", rel_tol "
           << format_number(cfg.spec.rel_tol) << ")\n";
        for (const auto& h : table.header) os << (h == "error" ? "" : h + "  ");
        os << '\n';
        for (const auto& c : table.rows) {
            os << format_number(c.delta) << "  ";
            if (!c.error.empty()) {
                os << "error: " << c.error << '\n';
                continue;
            }
            os << opt_number(c.value) << "  " << opt_number(c.main) << "  ";
            for (const auto& v : c.remainders) os << opt_number(v) << "  ";
            os << (c.ratio ? format_number(*c.ratio) : "-") << "  " << opt_number(c.remainder_fraction) << '\n';
        }
        text = os.str();
    }
    return any ? kOk : kTolerance;
}

// ---------------------------------------------------------------- table

int cmd_table(const RunConfig& cfg, std::string& text) {
    if (cfg.n_max < 0 || cfg.n_max > 6) throw ConfigError("--n-max must lie in [0, 6]");
    const auto start = std::chrono::steady_clock::now();
    std::vector<PolyMomentResult> rows;
    for (int N = 0; N <= cfg.n_max; ++N) rows.push_back(closed_form_poly(N, cfg.spec));
    const Json wall = timing(cfg, start);
    auto coeffs = [](const PolyMomentResult& r) {
        std::vector<std::string> c;
        for (const auto& t : r.t_coeffs) c.push_back(t.str());
        return c;
    };
    auto rel = [](const PolyMomentResult& r) { return std::fabs(r.lhs - r.rhs) / std::fabs(r.rhs); };
    if (cfg.format == "json") {
        Json out = Json::array();
        for (const auto& r : rows)
            out.push_back(Json{{"N", r.N},
                               {"lhs", number(r.lhs)},
                               {"rhs", number(r.rhs)},
                               {"lhs_err", number(r.lhs_err)},
                               {"rel_err", number(rel(r))},
                               {"t_coeffs", coeffs(r)}});
        Json doc{{"command", "table"}, {"quad_spec", spec_json(cfg.spec)}, {"rows", out}, {"wall_time_ms", wall}};
        text = doc.dump(2) + "\n";
        return kOk;
    }
    std::ostringstream os;
    if (cfg.format == "csv") {
        os << spec_comment(cfg.spec) << "N,lhs,rhs,lhs_err,rel_err,t_coeffs\n";
        for (const auto& r : rows) {
            std::string c;
            for (const auto& s : coeffs(r)) c += (c.empty() ? "" : " ") + s;
            os << r.N << ',' << format_number(r.lhs) << ',' << format_number(r.rhs) << ','
               << format_number(r.lhs_err) << ',' << format_number(rel(r)) << ',' << c << '\n';
        }
    } else {
        for (const auto& r : rows) {
            os << "N=" << r.N << "  lhs " << format_number(r.lhs) << "  rhs " << format_number(r.rhs) << "  rel_err "
               << format_number(rel(r)) << "\n    T_{" << 2 * r.N << ",j}:";
            for (const auto& s : coeffs(r)) os << ' ' << s;
            os << '\n';
        }
    }
    text = os.str();
    return kOk;
}

void add_common(CLI::App* sub, RunConfig& cfg) {
    sub->add_option("--abs-tol", cfg.spec.abs_tol, "Absolute quadrature tolerance")->capture_default_str();
    sub->add_option("--rel-tol", cfg.spec.rel_tol, "Relative quadrature tolerance")->capture_default_str();
    sub->add_option("--max-depth", cfg.spec.max_depth, "Maximum bisection depth per panel")->capture_default_str();
    sub->add_option("--format", cfg.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out_path, "Write the report to PATH instead of stdout");
    sub->add_flag("--override-guards", cfg.override_guards, "Lower the desk-scale delta guards");
    sub->add_flag("--no-timing", cfg.no_timing, "Omit wall-clock time (byte-identical reruns)");
}

}  // namespace

std::string format_number(double x) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string emit_scan_csv(const ScanCsv& t) {
    std::ostringstream os;
    for (std::size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << t.header[i];
    os << '\n';
    for (const auto& r : t.rows) {
        os << format_number(r.delta) << ',' << opt_number(r.value) << ',' << opt_number(r.main);
        for (const auto& v : r.remainders) os << ',' << opt_number(v);
        os << ',' << opt_number(r.ratio) << ',' << opt_number(r.remainder_fraction) << ',' << csv_field(r.error)
           << '\n';
    }
    return os.str();
}

ScanCsv parse_scan_csv(const std::string& text) {
    auto split = [](const std::string& line) {
        std::vector<std::string> cells;
        std::string cur;
        bool quoted = false;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (quoted) {
                if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                    cur += '"';
                    ++i;
                } else if (c == '"') {
                    quoted = false;
                } else {
                    cur += c;
                }
            } else if (c == '"') {
                quoted = true;
            } else if (c == ',') {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        cells.push_back(cur);
        return cells;
    };
    auto num = [](const std::string& s) -> std::optional<double> {
        if (s.empty()) return std::nullopt;
        std::size_t used = 0;
        const double v = std::stod(s, &used);
        if (used != s.size()) throw std::invalid_argument("bad number '" + s + "'");
        return v;
    };

    ScanCsv t;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        const auto cells = split(line);
        if (t.header.empty()) {
            t.header = cells;
            continue;
        }
        if (cells.size() != t.header.size()) throw std::invalid_argument("scan csv: ragged row");
        const std::size_t nr = t.header.size() - 6;
        ScanCsvRow r;
        r.delta = num(cells[0]).value();
        r.value = num(cells[1]);
        r.main = num(cells[2]);
        for (std::size_t j = 0; j < nr; ++j) r.remainders.push_back(num(cells[3 + j]));
        r.ratio = num(cells[3 + nr]);
        r.remainder_fraction = num(cells[4 + nr]);
        r.error = cells[5 + nr];
        t.rows.push_back(std::move(r));
    }
    if (t.header.size() < 6) throw std::invalid_argument("scan csv: missing header");
    return t;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"zm: weighted moments of zeta(1/2+it) and the identities behind them"};
    app.require_subcommand(1);
    app.footer(
        "Default quadrature: abs_tol 1e-10, rel_tol 1e-9, series_tol 1e-12, max_depth 32; no suite overrides them.\n"
        "Exit codes: 0 ok, 1 failed identity, 2 configuration or guard error, 3 tolerance not met.");

    auto* verify = app.add_subcommand("verify", "Run an identity suite");
    verify->add_option("--suite", cfg.suite, "Suite name")
        ->check(CLI::IsMember({"transforms", "functional-equations", "bettin-conrey", "convolution", "theorem-k1",
                               "theorem-k2", "theorem-k3", "closed-form", "all"}))
        ->capture_default_str();
    verify->add_option("--delta", cfg.delta, "Restrict the theorem suites to one delta");
    add_common(verify, cfg);

    auto* moment = app.add_subcommand("moment", "Evaluate one weighted moment");
    moment->add_option("--k", cfg.k, "Moment index (1, 2, 3)")->required();
    moment->add_option("--delta", cfg.delta, "Shift delta")->required();
    moment->add_option("--method", cfg.method, "Route")
        ->check(CLI::IsMember({"direct", "formula_k1", "formula_k2", "formula_k3", "multi_integral", "closed_form"}))
        ->capture_default_str();
    add_common(moment, cfg);

    auto* scan = app.add_subcommand("scan", "Formula route over a delta grid");
    scan->add_option("--k", cfg.k, "Moment index (1, 2, 3)")->required();
    scan->add_option("--delta-grid", cfg.delta_grid, "Comma-separated monotone grid")->delimiter(',')->required();
    add_common(scan, cfg);

    auto* table = app.add_subcommand("table", "Closed-form polynomial moment table, N = 0..n-max");
    table->add_option("--n-max", cfg.n_max, "Largest N (at most 6)")->capture_default_str();
    add_common(table, cfg);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kConfig;
    }

    std::string text;
    int code = kOk;
    try {
        cfg.spec.validate();
        if (verify->parsed()) code = cmd_verify(cfg, text);
        else if (moment->parsed()) code = cmd_moment(cfg, text);
        else if (scan->parsed()) code = cmd_scan(cfg, text);
        else code = cmd_table(cfg, text);
    } catch (const ConfigError& e) {
        err << "configuration error: " << e.what() << '\n';
        return kConfig;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << '\n';
        return kConfig;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << '\n';
        return kConfig;
    } catch (const ToleranceNotMet& e) {
        err << "tolerance not met: " << e.what() << " (best " << format_number(e.best_value().real()) << ", err "
            << format_number(e.err_estimate()) << ")\n";
        return kTolerance;
    } catch (const Error& e) {
        err << "numerical failure: " << e.what() << '\n';
        return kTolerance;
    }

    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream file(cfg.out_path, std::ios::binary);
        if (!file) {
            err << "cannot open " << cfg.out_path << '\n';
            return kConfig;
        }
        file << text;
    }
    return code;
}

}  // namespace zm::cli

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "zetamoments/autocorr.hpp"
#include "zetamoments/eisenstein.hpp"
#include "zetamoments/moments.hpp"
#include "zetamoments/suites.hpp"
#include "zetamoments/zeta.hpp"

namespace py = pybind11;
using zm::Complex;

namespace {

zm::GuardPolicy policy(bool override_guards) {
    return override_guards ? zm::GuardPolicy::override_guards : zm::GuardPolicy::enforce;
}

py::dict report_dict(const zm::MomentReport& r) {
    py::dict breakdown;
    for (const auto& [name, v] : r.breakdown) breakdown[py::str(name)] = v;
    py::dict d;
    d["k"] = r.k;
    d["delta"] = r.delta;
    d["method"] = std::string(zm::to_string(r.method));
    d["value"] = r.value;
    d["err_estimate"] = r.err_estimate;
    d["breakdown"] = breakdown;
    return d;
}

py::int_ big(const zm::BigInt& n) { return py::int_(py::reinterpret_steal<py::object>(PyLong_FromString(n.str().c_str(), nullptr, 10))); }

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Weighted moments of zeta(1/2+it): direct quadrature and the exact formulas behind them";

    auto base = py::register_exception<zm::Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<zm::DomainError>(m, "DomainError", base.ptr());
    py::register_exception<zm::PoleError>(m, "PoleError", base.ptr());
    py::register_exception<zm::CapacityError>(m, "CapacityError", base.ptr());
    py::register_exception<zm::NonFiniteError>(m, "NonFiniteError", base.ptr());
    py::register_exception<zm::GuardError>(m, "GuardError", base.ptr());
    py::register_exception<zm::ToleranceNotMet>(m, "ToleranceNotMet", base.ptr());

    py::class_<zm::QuadSpec>(m, "QuadSpec")
        .def(py::init([](double abs_tol, double rel_tol, int max_depth, double tail_cutoff, double series_tol) {
                 zm::QuadSpec s{abs_tol, rel_tol, max_depth, tail_cutoff, series_tol};
                 s.validate();
                 return s;
             }),
             py::arg("abs_tol") = 1e-10, py::arg("rel_tol") = 1e-9, py::arg("max_depth") = 32,
             py::arg("tail_cutoff") = 10.0, py::arg("series_tol") = 1e-12)
        .def_readwrite("abs_tol", &zm::QuadSpec::abs_tol)
        .def_readwrite("rel_tol", &zm::QuadSpec::rel_tol)
        .def_readwrite("max_depth", &zm::QuadSpec::max_depth)
        .def_readwrite("tail_cutoff", &zm::QuadSpec::tail_cutoff)
        .def_readwrite("series_tol", &zm::QuadSpec::series_tol);

    const zm::QuadSpec dflt;

    m.def("zeta", [](Complex s) { return zm::zeta(s); }, py::arg("s"));
    m.def("A", [](Complex z, const zm::QuadSpec& s) { return zm::A(z, s); }, py::arg("z"), py::arg("spec") = dflt);
    m.def("A_integral", [](Complex z, const zm::QuadSpec& s) { return zm::A_integral(z, s); }, py::arg("z"),
          py::arg("spec") = dflt);
    m.def("A_continuation", [](Complex z, const zm::QuadSpec& s) { return zm::A_continuation(z, s); }, py::arg("z"),
          py::arg("spec") = dflt);
    m.def("B_integral", [](Complex z, const zm::QuadSpec& s) { return zm::B_integral(z, s); }, py::arg("z"),
          py::arg("spec") = dflt);
    m.def("B_fourier", [](Complex z, const zm::QuadSpec& s) { return zm::B_fourier(z, s); }, py::arg("z"),
          py::arg("spec") = dflt);
    m.def("Q", &zm::Q, py::arg("s"));
    m.def("mellin_A", [](Complex s, const zm::QuadSpec& sp) { return zm::mellin_A_numeric(s, sp); }, py::arg("s"),
          py::arg("spec") = dflt);
    m.def("S0", [](Complex z, double tol) { return zm::S0(z, tol); }, py::arg("z"), py::arg("tol") = 1e-15);
    m.def("psi_upper", [](Complex z) { return zm::psi_upper(z); }, py::arg("z"));
    m.def("psi_from_A", [](Complex z, const zm::QuadSpec& s) { return zm::psi_from_A(z, s); }, py::arg("z"),
          py::arg("spec") = dflt);

    m.def(
        "moment_direct",
        [](int k, double delta, const zm::QuadSpec& s, bool o) { return report_dict(zm::moment_direct(k, delta, s, policy(o))); },
        py::arg("k"), py::arg("delta"), py::arg("spec") = dflt, py::arg("override_guards") = false);
    m.def(
        "formula_k1",
        [](double delta, const zm::QuadSpec& s, bool o) { return report_dict(zm::formula_k1(delta, s, policy(o))); },
        py::arg("delta"), py::arg("spec") = dflt, py::arg("override_guards") = false);
    m.def(
        "formula_k2",
        [](double delta, const zm::QuadSpec& s, bool o) { return report_dict(zm::formula_k2(delta, s, policy(o))); },
        py::arg("delta"), py::arg("spec") = dflt, py::arg("override_guards") = false);
    m.def(
        "formula_k3",
        [](double delta, const zm::QuadSpec& s, bool o) {
            const auto r = zm::formula_k3(delta, s, policy(o));
            py::dict d = report_dict(r.report);
            d["main_M"] = r.parts.main_M;
            d["main_M_conj"] = r.parts.main_M_conj;
            d["remainders"] = std::vector<Complex>(r.parts.remainders.begin(), r.parts.remainders.end());
            d["assembled"] = r.parts.assembled;
            return d;
        },
        py::arg("delta"), py::arg("spec") = dflt, py::arg("override_guards") = false);
    m.def(
        "multi_integral_form",
        [](int k, double delta, const zm::QuadSpec& s, bool o) {
            return report_dict(zm::multi_integral_form(k, delta, s, policy(o)));
        },
        py::arg("k"), py::arg("delta"), py::arg("spec") = dflt, py::arg("override_guards") = false);

    m.def("t_coeff", [](int N, int j) { return big(zm::t_coeff(N, j)); }, py::arg("N"), py::arg("j"));
    m.def(
        "closed_form_poly",
        [](int N, const zm::QuadSpec& s) {
            const auto r = zm::closed_form_poly(N, s);
            py::list t;
            for (const auto& c : r.t_coeffs) t.append(big(c));
            py::dict d;
            d["N"] = r.N;
            d["lhs"] = r.lhs;
            d["rhs"] = r.rhs;
            d["lhs_err"] = r.lhs_err;
            d["t_coeffs"] = t;
            return d;
        },
        py::arg("N"), py::arg("spec") = dflt);

    m.def(
        "scan_delta",
        [](int k, const std::vector<double>& grid, const zm::QuadSpec& s, bool o) {
            py::list rows;
            for (const auto& r : zm::scan_delta(k, grid, s, policy(o))) {
                py::dict d;
                d["delta"] = r.delta;
                d["report"] = r.report ? py::object(report_dict(*r.report)) : py::object(py::none());
                d["error"] = r.error;
                d["ratio"] = r.ratio ? py::object(py::float_(*r.ratio)) : py::object(py::none());
                d["main"] = r.main;
                d["remainders"] = r.remainders;
                d["remainder_fraction"] = r.remainder_fraction;
                d["fractions"] = r.fractions;
                rows.append(d);
            }
            return rows;
        },
        py::arg("k"), py::arg("delta_grid"), py::arg("spec") = dflt, py::arg("override_guards") = false);

    m.def(
        "verify",
        [](const std::string& suite, std::optional<double> delta, const zm::QuadSpec& s) {
            zm::SuiteOptions opts;
            opts.spec = s;
            opts.delta = delta;
            py::list rows;
            for (const auto& r : zm::run_suite(zm::suite_from_string(suite), opts)) {
                py::dict d;
                d["name"] = r.name;
                d["lhs"] = r.lhs;
                d["rhs"] = r.rhs;
                d["abs_err"] = r.abs_err;
                d["rel_err"] = r.rel_err;
                d["tol"] = r.tol;
                d["relative"] = r.relative;
                d["passed"] = r.passed;
                rows.append(d);
            }
            return rows;
        },
        py::arg("suite"), py::arg("delta") = py::none(), py::arg("spec") = dflt);
}

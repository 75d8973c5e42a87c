#include "eds/error.hpp"
#include "eds/report.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;

namespace {

py::object report_dict(const eds::Report& r) {
    py::object d = py::module_::import("json").attr("loads")(r.machine());
    d["exit_code"] = eds::exit_code(r.verdict);
    return d;
}

py::object run_report(const eds::SystemFile& f, const eds::RunOptions& o) { return report_dict(eds::run(f, o)); }

std::vector<std::string> names_of(const auto& v) {
    std::vector<std::string> out;
    for (auto& x : v) out.push_back(x.name);
    return out;
}

}  // namespace

PYBIND11_MODULE(edsverify, m) {
    m.doc() = "Exact verification of exterior differential systems and their prolongations";
    m.attr("__version__") = eds::kToolVersion;

    auto error = py::register_exception<eds::Error>(m, "Error");
    py::register_exception<eds::ParseError>(m, "ParseError", error.ptr());

    py::class_<eds::SystemFile>(m, "System")
        .def_property_readonly("name", [](const eds::SystemFile& f) { return f.system.name; })
        .def_property_readonly("params", [](const eds::SystemFile& f) { return names_of(f.system.params); })
        .def_property_readonly("coordinates", [](const eds::SystemFile& f) { return f.system.chart.base(); })
        .def_property_readonly("forms", [](const eds::SystemFile& f) { return names_of(f.system.generators); })
        .def_property_readonly("connections", [](const eds::SystemFile& f) { return names_of(f.connections); })
        .def_property_readonly("cases", [](const eds::SystemFile& f) { return names_of(f.cases); })
        .def_property_readonly("tables", [](const eds::SystemFile& f) { return names_of(f.tables); })
        .def("form", [](const eds::SystemFile& f, const std::string& name) {
            for (auto& g : f.system.generators)
                if (g.name == name) return eds::render_form(g.form);
            throw eds::Error("no form named " + name);
        })
        .def("render", [](const eds::SystemFile& f) { return eds::render_system(f); });

    m.def("parse", &eds::parse_system, py::arg("source"));
    m.def("load", &eds::load_system, py::arg("path"));

    m.def("close", [](const eds::SystemFile& f, std::vector<std::string> assume) {
        eds::RunOptions o;
        o.command = "close";
        o.assume = std::move(assume);
        return run_report(f, o);
    }, py::arg("system"), py::arg("assume") = std::vector<std::string>{});

    m.def("section", [](const eds::SystemFile& f, bool eliminate, std::vector<std::string> assume) {
        eds::RunOptions o;
        o.command = "section";
        o.eliminate = eliminate;
        o.assume = std::move(assume);
        return run_report(f, o);
    }, py::arg("system"), py::arg("eliminate") = true, py::arg("assume") = std::vector<std::string>{});

    m.def("prolong", [](const eds::SystemFile& f, const std::string& connection, const std::string& assume_case) {
        eds::RunOptions o;
        o.command = "prolong";
        o.connection = connection;
        o.assume_case = assume_case;
        return run_report(f, o);
    }, py::arg("system"), py::arg("connection"), py::arg("assume_case") = "");

    m.def("extract", [](const eds::SystemFile& f, const std::string& assume_case, const std::string& connection,
                        const std::string& expect) {
        eds::RunOptions o;
        o.command = "prolong";
        o.extract = true;
        o.assume_case = assume_case;
        o.connection = connection;
        o.expect = expect;
        return run_report(f, o);
    }, py::arg("system"), py::arg("assume_case"), py::arg("connection") = "family", py::arg("expect") = "");

    m.def("realize", [](const eds::SystemFile& f, const std::string& realization, const std::string& expect,
                        const std::string& assume_case) {
        eds::RunOptions o;
        o.command = "prolong";
        o.realize = realization;
        o.expect = expect;
        o.assume_case = assume_case;
        return run_report(f, o);
    }, py::arg("system"), py::arg("realization"), py::arg("expect") = "", py::arg("assume_case") = "");

    m.def("conserve", [](const eds::SystemFile& f, const std::string& candidate) {
        eds::RunOptions o;
        o.command = "conserve";
        o.candidate = candidate;
        return run_report(f, o);
    }, py::arg("system"), py::arg("candidate"));

    m.def("backlund", [](const eds::SystemFile& f, const std::string& name, std::map<std::string, std::string> numeric,
                         int trials, std::uint64_t seed, double tol) {
        eds::RunOptions o;
        o.command = "backlund";
        o.backlund = name;
        for (auto& [k, v] : numeric) o.numeric[k] = eds::Rational(v);
        o.run_numeric = !numeric.empty();
        o.trials = trials;
        o.seed = seed;
        o.tol = tol;
        return run_report(f, o);
    }, py::arg("system"), py::arg("name"), py::arg("numeric") = std::map<std::string, std::string>{},
       py::arg("trials") = 20, py::arg("seed") = 1, py::arg("tol") = 1e-9);

    m.def("audit", [](const eds::SystemFile& f, const std::string& table) {
        eds::RunOptions o;
        o.command = "audit";
        o.table = table;
        return run_report(f, o);
    }, py::arg("system"), py::arg("table"));
}

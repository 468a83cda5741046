#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "commands.hpp"
#include "torusfk/ainf.hpp"
#include "torusfk/gauge.hpp"
#include "torusfk/hochschild.hpp"
#include "torusfk/perturbation.hpp"
#include "torusfk/skoldberg.hpp"
#include "torusfk/torus_polygons.hpp"
#include "torusfk/useries.hpp"

namespace py = pybind11;
using namespace torusfk;

namespace
{

py::list series_list(const IntSeries& s)
{
    py::list out;
    for (const auto& c : s.coefficients())
        out.append(py::module_::import("builtins").attr("int")(c.get_str()));
    return out;
}

py::dict table_dict(const BigradedTable& t)
{
    py::dict out;
    for (const auto& [rs, d] : t.dims)
        if (d)
            out[py::make_tuple(rs.first, rs.second)] = d;
    return out;
}

BigradedTable hh_table(const std::string& field, int r_max, const std::string& method)
{
    const auto spec = FieldSpec::parse(field);
    if (method == "bar")
        return hh_bar(spec, r_max);
    if (method == "skoldberg")
        return skoldberg_hh(spec, r_max);
    if (method == "ladder")
        return ladder_hh(spec, r_max);
    throw Error("unknown method " + method);
}

py::dict witness_dict(const PolygonScene& scene, const PolygonWitness& w)
{
    py::dict d;
    py::list curves, corners;
    for (int c : w.curves)
        curves.append(scene.curves[c].name);
    for (const auto& p : w.corners)
        corners.append(py::make_tuple(p.x.get_str(), p.y.get_str()));
    d["curves"] = curves;
    d["corners"] = corners;
    d["degrees"] = w.degrees;
    d["multiplicity"] = w.multiplicity;
    d["wrap"] = w.wrap;
    d["q"] = w.q;
    d["r"] = w.r;
    d["s"] = w.s;
    d["sign"] = w.sign();
    return d;
}

} // namespace

PYBIND11_MODULE(torusfk, m)
{
    m.doc() = "Exact A-infinity, Hochschild and polygon computations for the wrapped torus algebra";
    py::register_exception<Error>(m, "TorusfkError", PyExc_ValueError);

    m.def(
        "hh_table",
        [](const std::string& field, int r_max, const std::string& method) {
            return table_dict(hh_table(field, r_max, method));
        },
        py::arg("field") = "Q", py::arg("r_max") = 8, py::arg("method") = "bar",
        "Nonzero dimensions {(r, s): dim} of HH^{r+s}(A,A)^s.");
    m.def(
        "reference_hh_table", [](const std::string& field) { return table_dict(reference_hh_table(FieldSpec::parse(field))); },
        py::arg("field") = "Q");
    m.def(
        "format_hh_table",
        [](const std::string& field, int r_max, const std::string& method) {
            return hh_table(field, r_max, method).format_table();
        },
        py::arg("field") = "Q", py::arg("r_max") = 8, py::arg("method") = "bar");

    m.def(
        "minimal_model",
        [](const std::string& field, int order) {
            auto split = preset_splitting_C(FieldSpec::parse(field));
            auto tr = transfer(split, order);
            return py::make_tuple(lemma_check(tr, order).ok(), dump(tr.minimal));
        },
        py::arg("field") = "Q", py::arg("order") = 12,
        "Transferred minimal model: (closed form holds, structure text).");

    m.def(
        "m6_certificate",
        [](const std::string& field) {
            const auto spec = FieldSpec::parse(field);
            auto B = transfer(preset_splitting_C(spec), 7).minimal;
            auto F = gauge_apply(preset_gauge_H(spec, 7), gauge_apply(preset_gauge_G(spec, 7), B, 7), 7);
            auto cert = m6_certificate(F, cochain_of(F, 6));
            py::dict d;
            d["cocycle"] = cert.cocycle;
            d["nonzero"] = cert.nonzero;
            d["chain_closed"] = cert.chain_closed;
            d["values"] = cert.values;
            d["chain"] = cert.chain;
            return d;
        },
        py::arg("field") = "Q");

    m.def(
        "invariants",
        [](const std::string& text) {
            auto dc = extract_invariants(load(text));
            return py::make_tuple(dc.m6.to_string(), dc.m8.to_string());
        },
        py::arg("structure"), "(m6, m8) of a structure given as text, order >= 8.");
    m.def(
        "mc_realize",
        [](const std::string& m6, const std::string& m8, int order, const std::string& field) {
            const auto spec = FieldSpec::parse(field);
            return dump(mc_realize(spec, parse_scalar(m6, spec), parse_scalar(m8, spec), order));
        },
        py::arg("m6"), py::arg("m8"), py::arg("order") = 12, py::arg("field") = "Q");
    m.def(
        "ainf_violations", [](const std::string& text, int up_to) { return ainf_check(load(text), up_to).size(); },
        py::arg("structure"), py::arg("up_to"));

    m.def("partition_series", [](int n) { return series_list(partition_series(n)); }, py::arg("order"));
    m.def("theta_v", [](int n) { return series_list(theta_v(n)); }, py::arg("order"));
    m.def("jacobi_check", &jacobi_check, py::arg("order"));

    m.def("mu2_series", [](int P) { return series_list(mu2_series(preset_scene(), P)); }, py::arg("wrap") = 4);
    m.def("mu3_series", [](int P) { return series_list(mu3_series(preset_scene(), P)); }, py::arg("wrap") = 4);
    m.def(
        "witnesses",
        [](const std::string& kind, int P) {
            auto scene = preset_scene();
            std::vector<PolygonWitness> ws;
            if (kind == "triangle")
                ws = triangle_witnesses(scene, P);
            else if (kind == "quadrilateral")
                ws = quadrilateral_witnesses(scene, P);
            else
                throw Error("unknown kind " + kind);
            py::list out;
            for (const auto& w : ws)
                out.append(witness_dict(scene, w));
            return out;
        },
        py::arg("kind"), py::arg("wrap") = 4);

    m.def(
        "run_cli",
        [](std::vector<std::string> args) {
            args.insert(args.begin(), "torusfk");
            std::vector<char*> argv;
            for (auto& a : args)
                argv.push_back(a.data());
            std::ostringstream out, err;
            const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
            return py::make_tuple(code, out.str(), err.str());
        },
        py::arg("args"), "Runs a command-line subcommand: (exit code, stdout, stderr).");
}

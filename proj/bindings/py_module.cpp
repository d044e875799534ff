#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rtw/beta.hpp"
#include "rtw/constructions.hpp"
#include "rtw/genclique.hpp"
#include "rtw/lagrangian.hpp"
#include "rtw/model.hpp"
#include "rtw/ramsey.hpp"
#include "rtw/structures.hpp"
#include "rtw/verification.hpp"

namespace py = pybind11;
using namespace rtw;

namespace {

py::dict rat_dict(const Rat& r) {
    py::dict d;
    d["exact"] = to_string(r);
    d["approx"] = to_double(r);
    return d;
}

py::dict exact_result(const LagrangianResult& r) {
    py::dict d;
    d["g_max"] = rat_dict(r.g_max);
    d["density"] = rat_dict(r.density());
    d["interior"] = r.interior;
    py::list witness;
    for (auto& x : r.witness.u) witness.append(to_string(x));
    d["witness"] = witness;
    d["kkt_supports"] = r.kkt_supports;
    return d;
}

py::dict iterative_result(const IterativeResult& r) {
    py::dict d;
    d["g"] = r.g;
    d["density"] = 2 * r.g;
    d["converged"] = r.converged;
    d["iterations"] = r.iterations;
    d["restarts"] = r.restarts;
    d["witness"] = r.u;
    return d;
}

py::dict witness_dict(const GeneralizedCliqueWitness& w) {
    py::dict d;
    d["size"] = w.size();
    d["X"] = w.X;
    d["Y"] = w.Y;
    return d;
}

}  // namespace

PYBIND11_MODULE(rtwpy, m) {
    m.doc() =
        "Weighted colored graph toolkit: exact Lagrangian optimization, generalized "
        "cliques, Ramsey enumeration, constructions, and the reproduction suites.";

    py::class_<WCCG>(m, "WCCG")
        .def(py::init<int>(), py::arg("t"))
        .def_readonly("t", &WCCG::t)
        .def("color", [](const WCCG& g, int i, int j) { return color_name(g.color(i, j)); })
        .def("weight",
             [](const WCCG& g, int i, int j) { return weight_string(g.weight(i, j)); })
        .def("vertex_color",
             [](const WCCG& g, int v) { return color_name(g.vertex_colors.at(v)); })
        .def("set",
             [](WCCG& g, int i, int j, const std::string& color, const std::string& weight) {
                 g.set(i, j, parse_color(color), parse_weight(weight));
             })
        .def("set_vertex_color",
             [](WCCG& g, int v, const std::string& color) {
                 g.vertex_colors.at(v) = parse_color(color);
             })
        .def("mass", [](const WCCG& g) { return rat_dict(g.mass()); })
        .def("to_json", &wccg_to_json);

    m.def("wccg_from_json", &wccg_from_json, py::arg("text"));
    m.def("rho36_extremal", &rho36_extremal);
    m.def("rho37_extremal", &rho37_extremal, py::arg("variant"));
    m.def("fact_t10_matrices", &fact_t10_matrices);
    m.def("half_pentagon", &half_pentagon);

    m.def(
        "maximize_exact", [](const WCCG& g) { return exact_result(maximize_exact(g)); },
        py::arg("g"));
    m.def(
        "maximize_iterative",
        [](const WCCG& g) { return iterative_result(maximize_iterative(g)); },
        py::arg("g"));

    m.def(
        "max_generalized_clique",
        [](const WCCG& g, const std::string& color) {
            return witness_dict(max_generalized_clique(g, parse_color(color)));
        },
        py::arg("g"), py::arg("color"));
    m.def(
        "has_generalized_clique",
        [](const WCCG& g, const std::string& color, int size) {
            return has_generalized_clique(g, parse_color(color), size);
        },
        py::arg("g"), py::arg("color"), py::arg("size"));

    m.def("count_ramsey", &count_ramsey, py::arg("n"), py::arg("red"), py::arg("blue"));
    m.def(
        "canonical_form",
        [](const std::string& colored_json) {
            return canonical_form(colored_from_json(colored_json));
        },
        py::arg("colored_json"));
    m.def(
        "u_graph_json",
        [](int n, int p, int q, uint64_t seed) {
            return colored_to_json(u_graph(n, p, q, seed));
        },
        py::arg("n"), py::arg("p"), py::arg("q"), py::arg("seed"));
    m.def(
        "beta_search",
        [](int blue, int red, int t_max) {
            BetaResult r = beta_search(blue, red, t_max);
            py::dict d;
            d["value"] = rat_dict(r.value);
            d["witness_json"] = wccg_to_json(r.witness);
            d["candidates_scored"] = r.candidates_scored;
            return d;
        },
        py::arg("blue"), py::arg("red"), py::arg("t_max"));
    m.def(
        "run_suite",
        [](const std::string& suite, uint64_t seed, int threads) {
            SuiteReport rep = run_suite(suite, seed, threads);
            py::dict d;
            d["all_passed"] = rep.all_passed;
            d["text"] = rep.text();
            d["json"] = rep.json();
            return d;
        },
        py::arg("suite"), py::arg("seed") = 0, py::arg("threads") = 1);
}

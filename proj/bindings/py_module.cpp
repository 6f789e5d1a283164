#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ted/gted.hpp"
#include "ted/shapes.hpp"
#include "ted/strategy.hpp"
#include "ted/tree.hpp"

namespace py = pybind11;
using namespace ted;

namespace {

Algorithm algo_from_name(const std::string& name) {
    if (name == "rted") return Algorithm::RTED;
    if (name == "zhang-l") return Algorithm::ZhangL;
    if (name == "zhang-r") return Algorithm::ZhangR;
    if (name == "klein-h") return Algorithm::KleinH;
    if (name == "demaine-h") return Algorithm::DemaineH;
    throw std::invalid_argument("unknown algorithm: " + name);
}

FixedStrategyKind fixed_from_name(const std::string& name) {
    if (name == "zhang-l") return FixedStrategyKind::ZhangL;
    if (name == "zhang-r") return FixedStrategyKind::ZhangR;
    if (name == "klein-h") return FixedStrategyKind::KleinH;
    if (name == "demaine-h") return FixedStrategyKind::DemaineH;
    throw std::invalid_argument("unknown fixed strategy: " + name);
}

ShapeKind shape_from_name(const std::string& name) {
    if (name == "left-branch") return ShapeKind::LeftBranch;
    if (name == "right-branch") return ShapeKind::RightBranch;
    if (name == "zigzag") return ShapeKind::ZigZag;
    if (name == "full-binary") return ShapeKind::FullBinary;
    if (name == "mixed") return ShapeKind::Mixed;
    if (name == "random") return ShapeKind::Random;
    throw std::invalid_argument("unknown shape: " + name);
}

CostModel costs_from_tuple(const std::tuple<double, double, double>& t) {
    return CostModel::uniform(std::get<0>(t), std::get<1>(t), std::get<2>(t));
}

py::dict stats_dict(const ExecStats& s) {
    py::dict d;
    d["subproblems"] = s.subproblems;
    d["delta_left_subproblems"] = s.delta_left_subproblems;
    d["delta_right_subproblems"] = s.delta_right_subproblems;
    d["delta_generic_subproblems"] = s.delta_generic_subproblems;
    d["strategy_time_ms"] = s.strategy_time_ms;
    d["distance_time_ms"] = s.distance_time_ms;
    return d;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact tree edit distance with LRH path strategies";

    py::class_<Tree>(m, "Tree")
        .def_property_readonly("label",
                               [](const Tree& t) { return t.label; })
        .def_property_readonly(
            "children", [](const Tree& t) { return t.children; })
        .def("__len__", [](const Tree& t) { return t.node_count(); })
        .def("__eq__", [](const Tree& a, const Tree& b) { return a == b; })
        .def("__repr__", [](const Tree& t) {
            return "Tree(" + serialize_bracket(t) + ")";
        });

    py::register_exception<ParseError>(m, "TreeParseError",
                                       PyExc_ValueError);
    py::register_exception<OracleLimitError>(m, "OracleLimitError",
                                             PyExc_ValueError);

    m.def("parse_bracket", &parse_bracket, py::arg("text"));
    m.def("serialize_bracket", &serialize_bracket, py::arg("tree"));
    m.def("ingest_xml", &ingest_xml, py::arg("text"));

    m.def(
        "gen_shape",
        [](const std::string& shape, int size, std::optional<int> depth,
           std::uint64_t seed, int max_depth, int max_fanout,
           bool random_labels) {
            ShapeSpec spec;
            spec.kind = shape_from_name(shape);
            spec.size = size;
            spec.depth = depth;
            spec.seed = seed;
            spec.max_depth = max_depth;
            spec.max_fanout = max_fanout;
            spec.random_labels = random_labels;
            return gen_shape(spec);
        },
        py::arg("shape"), py::arg("size") = 0, py::arg("depth") = py::none(),
        py::arg("seed") = 0, py::arg("max_depth") = 15,
        py::arg("max_fanout") = 6, py::arg("random_labels") = false);

    m.def(
        "tree_edit_distance",
        [](const Tree& f, const Tree& g, const std::string& algo,
           const std::tuple<double, double, double>& costs) {
            DistanceResult r = tree_edit_distance(
                f, g, algo_from_name(algo), costs_from_tuple(costs));
            return py::make_tuple(r.distance, stats_dict(r.stats));
        },
        py::arg("f"), py::arg("g"), py::arg("algo") = "rted",
        py::arg("costs") = std::make_tuple(1.0, 1.0, 1.0));

    m.def(
        "brute_force_distance",
        [](const Tree& f, const Tree& g,
           const std::tuple<double, double, double>& costs) {
            return brute_force_distance(f, g, costs_from_tuple(costs));
        },
        py::arg("f"), py::arg("g"),
        py::arg("costs") = std::make_tuple(1.0, 1.0, 1.0));

    m.def(
        "optimal_strategy_cost",
        [](const Tree& f, const Tree& g) {
            return opt_strategy(build_index(f), build_index(g)).cost.count;
        },
        py::arg("f"), py::arg("g"),
        "Relevant-subproblem count of the optimal LRH strategy");

    m.def(
        "fixed_strategy_cost",
        [](const Tree& f, const Tree& g, const std::string& kind) {
            TreeIndex fi = build_index(f), gi = build_index(g);
            return strategy_cost(fi, gi,
                                 fixed_strategy(fixed_from_name(kind), fi, gi))
                .count;
        },
        py::arg("f"), py::arg("g"), py::arg("kind"),
        "Relevant-subproblem count of a hard-coded strategy");
}

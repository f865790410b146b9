#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "semitotal/errors.hpp"
#include "semitotal/family_spec.hpp"
#include "semitotal/generators.hpp"
#include "semitotal/graph6.hpp"
#include "semitotal/harness.hpp"
#include "semitotal/proof.hpp"
#include "semitotal/records.hpp"
#include "semitotal/solvers.hpp"

namespace py = pybind11;
namespace st = semitotal;

namespace {

st::Invariant kind_of(const std::string& name) {
    auto kind = st::invariant_from_name(name);
    if (!kind) throw st::InputError("unknown invariant '" + name + "'");
    return *kind;
}

st::VertexSet to_set(const st::Graph& g, const std::vector<int>& members) { return st::VertexSet(g.order(), members); }

// Records cross the boundary as JSON text; the Python side decodes them.
std::string records_json(const std::vector<st::InstanceRecord>& records, bool include_timing) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& rec : records) out.push_back(st::to_json(rec, include_timing));
    return out.dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact semi-total domination solvers and product bound checks";
    m.attr("__version__") = st::tool_version();

    py::register_exception<st::PreconditionError>(m, "PreconditionError", PyExc_ValueError);
    py::register_exception<st::OracleGuardError>(m, "OracleGuardError", PyExc_ValueError);
    py::register_exception<st::InputError>(m, "InputError", PyExc_ValueError);

    py::class_<st::Graph>(m, "Graph")
        .def(py::init([](int n, const std::vector<std::pair<int, int>>& edges) {
                 return st::Graph::from_edge_list(n, edges);
             }),
             py::arg("n"), py::arg("edges") = std::vector<std::pair<int, int>>{})
        .def_property_readonly("order", &st::Graph::order)
        .def_property_readonly("edge_count", &st::Graph::edge_count)
        .def("edges", &st::Graph::edges)
        .def("neighbors", [](const st::Graph& g, int v) { return g.neighbors(v).members(); })
        .def("dist", [](const st::Graph& g, int u, int v) -> py::object {
            int d = g.dist(u, v);
            if (d == st::Graph::kUnreachable) return py::none();
            return py::int_(d);
        })
        .def("graph6", [](const st::Graph& g) { return st::emit_graph6(g); })
        .def("__eq__", &st::Graph::operator==)
        .def("__repr__", [](const st::Graph& g) { return "Graph(graph6='" + st::emit_graph6(g) + "')"; });

    m.def("parse_graph6", [](const std::string& s) { return st::parse_graph6(s); });
    m.def("generate",
          [](const std::string& family, int n, double p, std::uint64_t seed) {
              auto f = st::family_from_name(family);
              if (!f) throw st::InputError("unknown family '" + family + "'");
              return st::generate(*f, n, p, seed);
          },
          py::arg("family"), py::arg("n"), py::arg("p") = 0.0, py::arg("seed") = 0);
    m.def("cartesian_product",
          [](const st::Graph& g, const st::Graph& h, int cap) { return st::cartesian_product(g, h, cap).graph(); },
          py::arg("g"), py::arg("h"), py::arg("vertex_cap") = 4096);

    m.def("solve",
          [](const st::Graph& g, const std::string& kind, const std::string& method) {
              st::Method mth = method == "oracle" ? st::Method::Oracle : st::Method::BranchAndBound;
              if (method != "oracle" && method != "branch_and_bound") throw st::InputError("unknown method '" + method + "'");
              auto r = st::solve(g, kind_of(kind), mth);
              return py::make_tuple(r.value, r.witness.members());
          },
          py::arg("g"), py::arg("kind"), py::arg("method") = "branch_and_bound");
    m.def("satisfies", [](const st::Graph& g, const std::string& kind, const std::vector<int>& s) {
        return st::satisfies(g, kind_of(kind), to_set(g, s));
    });
    m.def("is_semitotal_dominating",
          [](const st::Graph& g, const std::vector<int>& s) { return st::is_semitotal_dominating(g, to_set(g, s)); });
    m.def("is_two_packing",
          [](const st::Graph& g, const std::vector<int>& s) { return st::is_two_packing(g, to_set(g, s)); });
    m.def("enumerate_min_semitotal_sets", [](const st::Graph& g) {
        std::vector<std::vector<int>> out;
        for (const auto& s : st::enumerate_min_semitotal_sets(g)) out.push_back(s.members());
        return out;
    });
    m.def("max_allied_set", [](const st::Graph& g) {
        auto ap = st::max_allied_set(g);
        py::dict d;
        d["u"] = ap.u.members();
        d["allied"] = ap.x.members();
        d["free"] = ap.y.members();
        d["order"] = ap.order;
        return d;
    });

    m.def("_verify_pair_json",
          [](const std::string& left, const std::string& right, bool replay, int max_product) {
              st::VerifyOptions o;
              o.replay_proof = replay;
              o.max_product_vertices = max_product;
              st::InstanceRecord rec;
              {
                  py::gil_scoped_release release;
                  rec = st::verify_pair(st::parse_single_factor(left), st::parse_single_factor(right), o);
              }
              return st::to_json(rec, false).dump();
          },
          py::arg("left"), py::arg("right"), py::arg("replay") = true, py::arg("max_product") = 49);
    m.def("_scan_json",
          [](const std::string& spec, bool replay, int workers) {
              st::FamilySpec fs = st::parse_family_spec(spec);
              st::VerifyOptions o;
              o.replay_proof = replay;
              std::vector<st::InstanceRecord> records;
              {
                  py::gil_scoped_release release;
                  records = st::scan(fs.left, fs.right, o, workers).records;
              }
              return records_json(records, false);
          },
          py::arg("spec"), py::arg("replay") = true, py::arg("workers") = 0);
}

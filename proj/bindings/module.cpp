// Python bindings for the kappa1 core. Vertex sets cross the boundary as
// sorted id lists; label sets as sorted int lists.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <cstdint>
#include <optional>
#include <vector>

#include "kappa1/analysis.hpp"
#include "kappa1/certificates.hpp"
#include "kappa1/connectivity.hpp"
#include "kappa1/error.hpp"
#include "kappa1/flow.hpp"
#include "kappa1/graph.hpp"
#include "kappa1/graph_io.hpp"
#include "kappa1/kneser.hpp"
#include "kappa1/oracle.hpp"
#include "kappa1/report.hpp"

namespace py = pybind11;
using namespace kappa1;

namespace {

std::vector<Vertex> ids(const VertexSet& set) { return set.to_vector(); }

std::vector<std::vector<Vertex>> id_lists(const std::vector<VertexSet>& sets) {
  std::vector<std::vector<Vertex>> out;
  out.reserve(sets.size());
  for (const auto& s : sets) out.push_back(s.to_vector());
  return out;
}

VertexSet set_of(const Graph& g, const std::vector<Vertex>& vs) {
  return VertexSet::of(g.vertex_count(), vs);
}

LabelSet label_set(std::vector<int> labels) { return LabelSet{std::move(labels)}; }

}  // namespace

PYBIND11_MODULE(_kappa1, m) {
  m.doc() = "vertex connectivity and super-connectivity with certificates";

  py::register_exception<Error>(m, "Kappa1Error");

  py::class_<LabelSet>(m, "LabelSet")
      .def(py::init(&label_set), py::arg("labels"))
      .def_readonly("labels", &LabelSet::labels)
      .def("disjoint", &LabelSet::disjoint)
      .def("shared_count", &LabelSet::shared_count)
      .def("shared_labels", &LabelSet::shared_labels)
      .def("__eq__", [](const LabelSet& a, const LabelSet& b) { return a == b; })
      .def("__repr__", [](const LabelSet& s) { return to_string(s); });
  py::implicitly_convertible<py::list, LabelSet>();

  py::class_<KneserParams>(m, "KneserParams")
      .def_readonly("n", &KneserParams::n)
      .def_readonly("k", &KneserParams::k);

  py::class_<Graph>(m, "Graph")
      .def(py::init([](std::size_t vertex_count, const std::vector<Edge>& edges) {
             return Graph(vertex_count, edges);
           }),
           py::arg("vertex_count"), py::arg("edges"))
      .def_property_readonly("vertex_count", &Graph::vertex_count)
      .def_property_readonly("edge_count", &Graph::edge_count)
      .def("neighbors", [](const Graph& g, Vertex v) { return ids(g.neighbors(v)); })
      .def("adjacent", &Graph::adjacent)
      .def("degree", &Graph::degree)
      .def("has_labels", &Graph::has_labels)
      .def("label", &Graph::label)
      .def("labels", &Graph::labels)
      .def_property_readonly("kneser_params", &Graph::kneser_params)
      .def("edges", &Graph::edges)
      .def("is_connected", &Graph::is_connected)
      .def("components",
           [](const Graph& g, const std::vector<Vertex>& removed) {
             return id_lists(components(g, set_of(g, removed)));
           },
           py::arg("removed") = std::vector<Vertex>{})
      .def("to_text", &serialize_graph)
      .def("to_dot", &export_dot)
      .def("__eq__", [](const Graph& a, const Graph& b) { return a == b; })
      .def("__repr__", [](const Graph& g) {
        return "Graph(" + std::to_string(g.vertex_count()) + " vertices, " +
               std::to_string(g.edge_count()) + " edges)";
      });

  m.def("parse_graph", [](const std::string& text) { return parse_graph(text); },
        py::arg("text"));
  m.def("load_graph_file", &load_graph_file, py::arg("path"));
  m.def("save_graph_file", &save_graph_file, py::arg("graph"), py::arg("path"));

  m.def("binomial", &binomial, py::arg("n"), py::arg("k"));
  m.def("rank_subset", &rank_subset, py::arg("labels"), py::arg("n"));
  m.def("unrank_subset", &unrank_subset, py::arg("id"), py::arg("n"), py::arg("k"));
  m.def("kneser_graph", [](int n, int k) { return kneser_graph(n, k); }, py::arg("n"),
        py::arg("k"));

  py::class_<MinCutAnswer>(m, "MinCutAnswer")
      .def_readonly("size", &MinCutAnswer::size)
      .def_property_readonly("cut", [](const MinCutAnswer& a) { return ids(a.cut); })
      .def_property_readonly("source_side",
                             [](const MinCutAnswer& a) { return ids(a.source_side); });

  m.def("min_vertex_cut",
        [](const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
          return min_vertex_cut(g, set_of(g, a), set_of(g, b));
        },
        py::arg("graph"), py::arg("a"), py::arg("b"));
  m.def("disjoint_paths",
        [](const Graph& g, const std::vector<Vertex>& a, const std::vector<Vertex>& b) {
          return disjoint_paths(g, set_of(g, a), set_of(g, b));
        },
        py::arg("graph"), py::arg("a"), py::arg("b"));

  py::class_<CutCertificate>(m, "CutCertificate")
      .def_property_readonly("cut", [](const CutCertificate& c) { return ids(c.cut); })
      .def_property_readonly("component_partition", [](const CutCertificate& c) {
        return id_lists(c.component_partition);
      });

  py::class_<SuperCutCertificate>(m, "SuperCutCertificate")
      .def_property_readonly("cut", [](const SuperCutCertificate& c) { return ids(c.cut); })
      .def_property_readonly("component_partition", [](const SuperCutCertificate& c) {
        return id_lists(c.component_partition);
      });

  py::class_<ValidationReport>(m, "ValidationReport")
      .def_readonly("is_cut", &ValidationReport::is_cut)
      .def_readonly("is_super", &ValidationReport::is_super)
      .def_readonly("component_sizes", &ValidationReport::component_sizes)
      .def_readonly("isolated", &ValidationReport::isolated);

  m.def("validate_super_cut",
        [](const Graph& g, const std::vector<Vertex>& s) {
          return validate_super_cut(g, set_of(g, s));
        },
        py::arg("graph"), py::arg("cut"));

  py::class_<VertexConnectivity>(m, "VertexConnectivity")
      .def_readonly("kappa", &VertexConnectivity::kappa)
      .def_readonly("complete", &VertexConnectivity::complete)
      .def_readonly("witness", &VertexConnectivity::witness);

  m.def("vertex_connectivity", &vertex_connectivity, py::arg("graph"),
        py::arg("symmetry") = false, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());

  m.def("constructive_super_cut", &constructive_super_cut, py::arg("graph"), py::arg("u"),
        py::arg("v"));

  py::class_<EdgePairTerminals>(m, "EdgePairTerminals")
      .def_readonly("first", &EdgePairTerminals::first)
      .def_readonly("second", &EdgePairTerminals::second);

  py::class_<LowerWitness>(m, "LowerWitness")
      .def_readonly("pair", &LowerWitness::pair)
      .def_readonly("answer", &LowerWitness::answer);

  py::class_<EdgePairBound>(m, "EdgePairBound")
      .def_readonly("m", &EdgePairBound::m)
      .def_readonly("witness", &EdgePairBound::witness)
      .def_readonly("pairs_considered", &EdgePairBound::pairs_considered)
      .def_readonly("pairs_admissible", &EdgePairBound::pairs_admissible);

  m.def("edge_pair_lower_bound", &edge_pair_lower_bound, py::arg("graph"),
        py::arg("symmetry") = false, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());

  py::enum_<SuperStatus>(m, "SuperStatus")
      .value("EXACT", SuperStatus::Exact)
      .value("INTERVAL", SuperStatus::Interval)
      .value("NO_SUPER_CUT", SuperStatus::NoSuperCut)
      .value("NOT_APPLICABLE", SuperStatus::NotApplicable);

  py::enum_<Strategy>(m, "Strategy")
      .value("AUTO", Strategy::Auto)
      .value("FLOW_ONLY", Strategy::FlowOnly)
      .value("ORACLE_ONLY", Strategy::OracleOnly);

  py::class_<OracleBudget>(m, "OracleBudget")
      .def(py::init<>())
      .def(py::init([](std::uint32_t max_cut_size, std::uint64_t max_subset_count) {
             return OracleBudget{max_cut_size, max_subset_count};
           }),
           py::arg("max_cut_size"), py::arg("max_subset_count"))
      .def_readwrite("max_cut_size", &OracleBudget::max_cut_size)
      .def_readwrite("max_subset_count", &OracleBudget::max_subset_count);

  py::class_<SuperConnectivityResult>(m, "SuperConnectivityResult")
      .def_readonly("status", &SuperConnectivityResult::status)
      .def_readonly("lower_bound", &SuperConnectivityResult::lower_bound)
      .def_readonly("upper_bound", &SuperConnectivityResult::upper_bound)
      .def_readonly("upper_witness", &SuperConnectivityResult::upper_witness)
      .def_readonly("lower_witness", &SuperConnectivityResult::lower_witness)
      .def_readonly("pairs_considered", &SuperConnectivityResult::pairs_considered)
      .def_readonly("pairs_admissible", &SuperConnectivityResult::pairs_admissible)
      .def_readonly("oracle_subsets", &SuperConnectivityResult::oracle_subsets);

  m.def("super_connectivity", &super_connectivity, py::arg("graph"),
        py::arg("strategy") = Strategy::Auto, py::arg("budget") = OracleBudget{},
        py::arg("assume_transitive") = false, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("is_super_connected", &is_super_connected, py::arg("graph"),
        py::arg("budget") = OracleBudget{}, py::arg("assume_transitive") = false,
        py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());

  py::enum_<OracleStatus>(m, "OracleStatus")
      .value("EXACT", OracleStatus::Exact)
      .value("NO_SUPER_CUT_UP_TO", OracleStatus::NoSuperCutUpTo)
      .value("BUDGET_EXCEEDED", OracleStatus::BudgetExceeded);

  py::class_<SuperOracleResult>(m, "SuperOracleResult")
      .def_readonly("status", &SuperOracleResult::status)
      .def_readonly("value", &SuperOracleResult::value)
      .def_readonly("certificate", &SuperOracleResult::certificate)
      .def_readonly("subsets_enumerated", &SuperOracleResult::subsets_enumerated);

  py::class_<KappaOracleResult>(m, "KappaOracleResult")
      .def_readonly("status", &KappaOracleResult::status)
      .def_readonly("value", &KappaOracleResult::value)
      .def_readonly("certificate", &KappaOracleResult::certificate)
      .def_readonly("subsets_enumerated", &KappaOracleResult::subsets_enumerated);

  m.def("brute_force_super_connectivity", &brute_force_super_connectivity, py::arg("graph"),
        py::arg("budget") = OracleBudget{}, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());
  m.def("brute_force_vertex_connectivity", &brute_force_vertex_connectivity, py::arg("graph"),
        py::arg("budget") = OracleBudget{}, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());

  py::enum_<TripleKind>(m, "TripleKind")
      .value("TRIANGLE", TripleKind::Triangle)
      .value("TYPE1_PATH", TripleKind::Type1Path)
      .value("TYPE2_PATH", TripleKind::Type2Path)
      .value("OTHER", TripleKind::Other);

  py::class_<TripleClass>(m, "TripleClass")
      .def_readonly("kind", &TripleClass::kind)
      .def_readonly("shared_labels", &TripleClass::shared_labels)
      .def_readonly("middle_index", &TripleClass::middle_index)
      .def_readonly("diagnostic", &TripleClass::diagnostic);

  m.def("classify_triple", &classify_triple, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("meeting_count", &meeting_count, py::arg("n"), py::arg("triple"));
  m.def("claim_bound", &claim_bound, py::arg("cls"), py::arg("n"));
  m.def("conjecture_value", &conjecture_value, py::arg("n"), py::arg("k"));

  py::class_<ResidualIdentity>(m, "ResidualIdentity")
      .def_readonly("lhs", &ResidualIdentity::lhs)
      .def_readonly("rhs", &ResidualIdentity::rhs)
      .def_readonly("equal", &ResidualIdentity::equal);

  m.def("residual_identity", &residual_identity, py::arg("n"));

  py::class_<ClaimReport>(m, "ClaimReport")
      .def_readonly("triple", &ClaimReport::triple)
      .def_readonly("cls", &ClaimReport::cls)
      .def_readonly("exact_count", &ClaimReport::exact_count)
      .def_readonly("bound", &ClaimReport::bound)
      .def_readonly("holds", &ClaimReport::holds);

  py::class_<ClassSweepStats>(m, "ClassSweepStats")
      .def_readonly("kind", &ClassSweepStats::kind)
      .def_readonly("examined", &ClassSweepStats::examined)
      .def_readonly("violations", &ClassSweepStats::violations)
      .def_readonly("max_count", &ClassSweepStats::max_count);

  py::class_<ClaimSweepResult>(m, "ClaimSweepResult")
      .def_readonly("n", &ClaimSweepResult::n)
      .def_readonly("canonical", &ClaimSweepResult::canonical)
      .def_readonly("sweep", &ClaimSweepResult::sweep)
      .def_readonly("full_sweep", &ClaimSweepResult::full_sweep);

  m.def("claim_sweep", &claim_sweep, py::arg("n"), py::arg("full") = std::nullopt,
        py::arg("workers") = 0, py::call_guard<py::gil_scoped_release>());

  py::enum_<Verdict>(m, "Verdict")
      .value("CONFIRMED", Verdict::Confirmed)
      .value("UPPER_CONFIRMED", Verdict::UpperConfirmed)
      .value("REFUTED", Verdict::Refuted);

  py::class_<TheoremReport>(m, "TheoremReport")
      .def_readonly("n", &TheoremReport::n)
      .def_readonly("expected", &TheoremReport::expected)
      .def_readonly("result", &TheoremReport::result)
      .def_readonly("verdict", &TheoremReport::verdict);

  m.def("verify_theorem",
        [](int n, Strategy strategy, const OracleBudget& budget, unsigned workers) {
          return verify_theorem(n, strategy, budget, workers);
        },
        py::arg("n"), py::arg("strategy") = Strategy::Auto,
        py::arg("budget") = OracleBudget{}, py::arg("workers") = 0,
        py::call_guard<py::gil_scoped_release>());

  m.def("theorem_report_json",
        [](const TheoremReport& report) { return report_envelope("verify", to_json(report)).dump(); },
        py::arg("report"));
  m.def("super_report_json",
        [](const SuperConnectivityResult& result, const Graph& g) {
          return report_envelope("kappa1", to_json(result, g)).dump();
        },
        py::arg("result"), py::arg("graph"));
}

#include "kappa1/report.hpp"

namespace kappa1 {

using nlohmann::json;

json to_json(const VertexSet& set) {
  json out = json::array();
  set.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

namespace {

json components_json(const std::vector<VertexSet>& parts) {
  json out = json::array();
  for (const auto& part : parts) out.push_back(to_json(part));
  return out;
}

json label_names(const VertexSet& set, const Graph& g) {
  json out = json::array();
  set.for_each([&](Vertex v) { out.push_back(to_string(g.label(v))); });
  return out;
}

// Splices "<key>_labels" next to every id-list field of a certificate-like
// object, leaving the id fields untouched.
void decorate(json& obj, const Graph& g, const VertexSet& cut,
              const std::vector<VertexSet>& parts) {
  if (!g.has_labels()) return;
  obj["cut_labels"] = label_names(cut, g);
  json comp_labels = json::array();
  for (const auto& part : parts) comp_labels.push_back(label_names(part, g));
  obj["component_labels"] = comp_labels;
}

const char* status_name(SuperStatus status) {
  switch (status) {
    case SuperStatus::Exact: return "exact";
    case SuperStatus::Interval: return "interval";
    case SuperStatus::NoSuperCut: return "no-super-cut";
    case SuperStatus::NotApplicable: return "not-applicable";
  }
  return "not-applicable";
}

const char* status_name(OracleStatus status) {
  switch (status) {
    case OracleStatus::Exact: return "exact";
    case OracleStatus::NoSuperCutUpTo: return "no-super-cut-up-to";
    case OracleStatus::BudgetExceeded: return "budget-exceeded";
  }
  return "budget-exceeded";
}

json edge_json(const Edge& e) { return json::array({e.first, e.second}); }

}  // namespace

json to_json(const CutCertificate& cert) {
  return json{{"cut", to_json(cert.cut)}, {"components", components_json(cert.component_partition)}};
}

json to_json(const SuperCutCertificate& cert) {
  return json{{"cut", to_json(cert.cut)}, {"components", components_json(cert.component_partition)}};
}

json to_json(const ValidationReport& report) {
  return json{{"is_cut", report.is_cut},
              {"is_super", report.is_super},
              {"component_sizes", report.component_sizes},
              {"isolated", report.isolated}};
}

json to_json(const VertexConnectivity& result) {
  json out{{"kappa", result.kappa}, {"complete", result.complete}};
  if (result.witness) out["witness"] = to_json(*result.witness);
  return out;
}

json to_json(const SuperConnectivityResult& result) {
  json out{{"status", status_name(result.status)},
           {"pairs_considered", result.pairs_considered},
           {"pairs_admissible", result.pairs_admissible},
           {"oracle_subsets", result.oracle_subsets}};
  if (result.lower_bound) out["lower_bound"] = *result.lower_bound;
  if (result.upper_bound) out["upper_bound"] = *result.upper_bound;
  if (result.upper_witness) out["upper_witness"] = to_json(*result.upper_witness);
  if (result.lower_witness) {
    out["lower_witness"] = json{
        {"edge_pair", json::array({edge_json(result.lower_witness->pair.first),
                                   edge_json(result.lower_witness->pair.second)})},
        {"cut", to_json(result.lower_witness->answer.cut)},
        {"size", result.lower_witness->answer.size}};
  }
  return out;
}

json to_json(const SuperOracleResult& result) {
  json out{{"status", status_name(result.status)},
           {"value", result.value},
           {"subsets_enumerated", result.subsets_enumerated}};
  if (result.certificate) out["certificate"] = to_json(*result.certificate);
  return out;
}

json to_json(const KappaOracleResult& result) {
  json out{{"status", status_name(result.status)},
           {"value", result.value},
           {"subsets_enumerated", result.subsets_enumerated}};
  if (result.certificate) out["certificate"] = to_json(*result.certificate);
  return out;
}

json to_json(const TripleClass& cls) {
  json out{{"kind", to_string(cls.kind)}};
  if (!cls.shared_labels.empty()) out["shared_labels"] = cls.shared_labels;
  if (cls.middle_index >= 0) out["middle_index"] = cls.middle_index;
  if (!cls.diagnostic.empty()) out["diagnostic"] = cls.diagnostic;
  return out;
}

json to_json(const ClaimReport& report) {
  json triple = json::array();
  for (const auto& member : report.triple) triple.push_back(member.labels);
  return json{{"triple", triple},
              {"class", to_json(report.cls)},
              {"exact_count", report.exact_count},
              {"bound", report.bound},
              {"holds", report.holds}};
}

json to_json(const ClaimSweepResult& result) {
  json canonical = json::array();
  for (const auto& report : result.canonical) canonical.push_back(to_json(report));
  json out{{"n", result.n}, {"canonical", canonical}, {"full_sweep", result.full_sweep}};
  if (result.full_sweep) {
    json sweep = json::array();
    for (const auto& stats : result.sweep)
      sweep.push_back(json{{"kind", to_string(stats.kind)},
                           {"examined", stats.examined},
                           {"violations", stats.violations},
                           {"max_count", stats.max_count}});
    out["sweep"] = sweep;
  }
  return out;
}

json to_json(const ResidualIdentity& identity) {
  return json{{"lhs", identity.lhs}, {"rhs", identity.rhs}, {"equal", identity.equal}};
}

json to_json(const TheoremReport& report) {
  return json{{"n", report.n},
              {"expected", report.expected},
              {"verdict", to_string(report.verdict)},
              {"result", to_json(report.result)}};
}

json to_json(const CutCertificate& cert, const Graph& g) {
  json out = to_json(cert);
  decorate(out, g, cert.cut, cert.component_partition);
  return out;
}

json to_json(const SuperCutCertificate& cert, const Graph& g) {
  json out = to_json(cert);
  decorate(out, g, cert.cut, cert.component_partition);
  return out;
}

json to_json(const VertexConnectivity& result, const Graph& g) {
  json out = to_json(result);
  if (result.witness) out["witness"] = to_json(*result.witness, g);
  return out;
}

json to_json(const SuperConnectivityResult& result, const Graph& g) {
  json out = to_json(result);
  if (result.upper_witness) out["upper_witness"] = to_json(*result.upper_witness, g);
  if (result.lower_witness && g.has_labels())
    out["lower_witness"]["cut_labels"] = label_names(result.lower_witness->answer.cut, g);
  return out;
}

json to_json(const SuperOracleResult& result, const Graph& g) {
  json out = to_json(result);
  if (result.certificate) out["certificate"] = to_json(*result.certificate, g);
  return out;
}

json to_json(const KappaOracleResult& result, const Graph& g) {
  json out = to_json(result);
  if (result.certificate) out["certificate"] = to_json(*result.certificate, g);
  return out;
}

json report_envelope(const std::string& kind, json payload) {
  return json{{"schema", kReportSchema}, {"kind", kind}, {"data", std::move(payload)}};
}

}  // namespace kappa1

#pragma once

#include <nlohmann/json.hpp>

#include "kappa1/analysis.hpp"
#include "kappa1/certificates.hpp"
#include "kappa1/connectivity.hpp"
#include "kappa1/graph.hpp"
#include "kappa1/oracle.hpp"

namespace kappa1 {

// Schema identifier stamped into every JSON report.
inline constexpr const char* kReportSchema = "kappa1/report/v1";

nlohmann::json to_json(const VertexSet& set);
nlohmann::json to_json(const CutCertificate& cert);
nlohmann::json to_json(const SuperCutCertificate& cert);
nlohmann::json to_json(const ValidationReport& report);
nlohmann::json to_json(const VertexConnectivity& result);
nlohmann::json to_json(const SuperConnectivityResult& result);
nlohmann::json to_json(const SuperOracleResult& result);
nlohmann::json to_json(const KappaOracleResult& result);

// Graph-aware variants add "<field>_labels" arrays beside every vertex-id
// list when the graph carries labels.
nlohmann::json to_json(const CutCertificate& cert, const Graph& g);
nlohmann::json to_json(const SuperCutCertificate& cert, const Graph& g);
nlohmann::json to_json(const VertexConnectivity& result, const Graph& g);
nlohmann::json to_json(const SuperConnectivityResult& result, const Graph& g);
nlohmann::json to_json(const SuperOracleResult& result, const Graph& g);
nlohmann::json to_json(const KappaOracleResult& result, const Graph& g);
nlohmann::json to_json(const TripleClass& cls);
nlohmann::json to_json(const ClaimReport& report);
nlohmann::json to_json(const ClaimSweepResult& result);
nlohmann::json to_json(const ResidualIdentity& identity);
nlohmann::json to_json(const TheoremReport& report);

// Wraps a payload with {"schema": ..., "kind": kind, "data": payload}.
nlohmann::json report_envelope(const std::string& kind, nlohmann::json payload);

}  // namespace kappa1

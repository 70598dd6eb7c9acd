#include <doctest.h>

#include <nlohmann/json.hpp>

#include "kappa1/analysis.hpp"
#include "kappa1/connectivity.hpp"
#include "kappa1/kneser.hpp"
#include "kappa1/oracle.hpp"
#include "kappa1/report.hpp"

using namespace kappa1;
using nlohmann::json;

TEST_CASE("envelope carries the schema tag") {
  json doc = report_envelope("kappa", json{{"kappa", 3}});
  CHECK(doc["schema"] == kReportSchema);
  CHECK(doc["kind"] == "kappa");
  CHECK(doc["data"]["kappa"] == 3);
}

TEST_CASE("super connectivity report round trips through json") {
  Graph g = kneser_graph(5, 2);
  auto result = super_connectivity(g, Strategy::FlowOnly);
  json doc = to_json(result, g);
  CHECK(doc["status"] == "exact");
  CHECK(doc["lower_bound"] == 4);
  CHECK(doc["upper_bound"] == 4);
  REQUIRE(doc.contains("upper_witness"));
  CHECK(doc["upper_witness"]["cut"].is_array());
  CHECK(doc["upper_witness"]["cut_labels"].size() == doc["upper_witness"]["cut"].size());
  REQUIRE(doc.contains("lower_witness"));
  CHECK(doc["lower_witness"]["edge_pair"].size() == 2);
  // Serialization is deterministic.
  CHECK(to_json(result, g).dump() == doc.dump());
}

TEST_CASE("oracle report statuses") {
  Graph g = kneser_graph(5, 2);
  auto exact = brute_force_super_connectivity(g, OracleBudget{});
  CHECK(to_json(exact)["status"] == "exact");
  CHECK(to_json(exact)["subsets_enumerated"] == 176);

  OracleBudget capped;
  capped.max_cut_size = 2;
  auto partial = brute_force_super_connectivity(g, capped);
  json doc = to_json(partial);
  CHECK(doc["status"] == "no-super-cut-up-to");
  CHECK(doc["value"] == 2);
  CHECK_FALSE(doc.contains("certificate"));
}

TEST_CASE("unlabeled graphs omit label decorations") {
  Graph g(8, std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4},
                               {4, 5}, {5, 6}, {6, 7}, {0, 7}});
  auto result = super_connectivity(g);
  json doc = to_json(result, g);
  REQUIRE(doc.contains("upper_witness"));
  CHECK_FALSE(doc["upper_witness"].contains("cut_labels"));
}

TEST_CASE("theorem report json") {
  auto report = verify_theorem(7);
  json doc = to_json(report);
  CHECK(doc["n"] == 7);
  CHECK(doc["expected"] == 6);
  CHECK(doc["verdict"] == "confirmed");
  CHECK(doc["result"]["status"] == "exact");
}

TEST_CASE("claim sweep json") {
  json doc = to_json(claim_sweep(9));
  CHECK(doc["n"] == 9);
  CHECK(doc["full_sweep"] == true);
  CHECK(doc["canonical"].size() == 3);
  CHECK(doc["canonical"][0]["holds"] == true);
  CHECK(doc["sweep"][0]["violations"] == 0);
}

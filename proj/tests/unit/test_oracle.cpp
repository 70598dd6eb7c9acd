#include <doctest.h>

#include <vector>

#include "kappa1/certificates.hpp"
#include "kappa1/error.hpp"
#include "kappa1/kneser.hpp"
#include "kappa1/oracle.hpp"

using namespace kappa1;

namespace {

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

Graph double_triangle_hub() {
  std::vector<Edge> edges{{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}};
  for (Vertex t = 0; t <= 5; ++t)
    for (Vertex s = 6; s <= 9; ++s) edges.emplace_back(t, s);
  return Graph(10, edges);
}

}  // namespace

TEST_CASE("petersen ground truth with deterministic enumeration count") {
  Graph g = kneser_graph(5, 2);
  auto result = brute_force_super_connectivity(g, OracleBudget{});
  CHECK(result.status == OracleStatus::Exact);
  CHECK(result.value == 4);
  REQUIRE(result.certificate.has_value());
  // Sizes 1..3 complete (10 + 45 + 120), then the very first 4-subset
  // {0,1,2,3} = the star of label 1 is already a super cut.
  CHECK(result.subsets_enumerated == 176);
  CHECK(result.certificate->cut.to_vector() == std::vector<Vertex>{0, 1, 2, 3});
  auto report = validate_super_cut(g, result.certificate->cut);
  CHECK(report.is_super);
  CHECK(report.component_sizes == std::vector<std::size_t>{2, 2, 2});
}

TEST_CASE("cycles have no super cut") {
  auto c5 = brute_force_super_connectivity(cycle(5), OracleBudget{});
  CHECK(c5.status == OracleStatus::NoSuperCutUpTo);
  CHECK_FALSE(c5.certificate.has_value());

  // C8: removing {0,3} leaves {1,2} and {4,5,6,7}.
  auto c8 = brute_force_super_connectivity(cycle(8), OracleBudget{});
  CHECK(c8.status == OracleStatus::Exact);
  CHECK(c8.value == 2);
  CHECK(c8.certificate->cut.to_vector() == std::vector<Vertex>{0, 3});
  CHECK(c8.subsets_enumerated == 11);  // 8 singletons + {0,1}, {0,2}, {0,3}
}

TEST_CASE("minimum super cut that dominates no edge neighborhood") {
  // Regression for the enumeration shortcut that skipped subsets not
  // covering N(u,v) for some edge (u,v): here the unique minimum super cut
  // {6,7,8,9} covers no edge's neighborhood, so any such skip is unsound.
  Graph g = double_triangle_hub();
  auto result = brute_force_super_connectivity(g, OracleBudget{});
  CHECK(result.status == OracleStatus::Exact);
  CHECK(result.value == 4);
  CHECK(result.certificate->cut.to_vector() == std::vector<Vertex>{6, 7, 8, 9});
  CHECK(result.subsets_enumerated == 385);  // 10 + 45 + 120 + rank({6,7,8,9}) + 1
}

TEST_CASE("size cap yields NoSuperCutUpTo") {
  Graph g = kneser_graph(5, 2);
  OracleBudget capped;
  capped.max_cut_size = 3;
  auto result = brute_force_super_connectivity(g, capped);
  CHECK(result.status == OracleStatus::NoSuperCutUpTo);
  CHECK(result.value == 3);
  CHECK(result.subsets_enumerated == 175);
}

TEST_CASE("subset budget is honored a priori") {
  Graph g = kneser_graph(5, 2);
  OracleBudget tiny;
  tiny.max_subset_count = 100;  // enough for sizes 1 and 2, not for 3
  auto result = brute_force_super_connectivity(g, tiny);
  CHECK(result.status == OracleStatus::NoSuperCutUpTo);
  CHECK(result.value == 2);
  CHECK(result.subsets_enumerated == 55);

  tiny.max_subset_count = 5;  // not even the singletons fit
  auto stuck = brute_force_super_connectivity(g, tiny);
  CHECK(stuck.status == OracleStatus::BudgetExceeded);
  CHECK(stuck.subsets_enumerated == 0);

  OracleBudget zero;
  zero.max_subset_count = 0;
  CHECK_THROWS_AS(brute_force_super_connectivity(g, zero), Error);
}

TEST_CASE("levels that cannot hold a super cut are skipped soundly") {
  // V = 4: every size level is vacuous, so the scan completes instantly.
  auto result = brute_force_super_connectivity(cycle(4), OracleBudget{});
  CHECK(result.status == OracleStatus::NoSuperCutUpTo);
  CHECK(result.subsets_enumerated == 0);
}

TEST_CASE("plain connectivity oracle") {
  Graph g = kneser_graph(5, 2);
  auto result = brute_force_vertex_connectivity(g, OracleBudget{});
  CHECK(result.status == OracleStatus::Exact);
  CHECK(result.value == 3);
  REQUIRE(result.certificate.has_value());
  CHECK(result.certificate->cut.count() == 3);
  CHECK(result.certificate->component_partition.size() >= 2);

  CHECK(brute_force_vertex_connectivity(cycle(6), OracleBudget{}).value == 2);

  // Complete graphs have no cut at all.
  std::vector<Edge> k4;
  for (Vertex u = 0; u < 4; ++u)
    for (Vertex v = u + 1; v < 4; ++v) k4.emplace_back(u, v);
  CHECK_THROWS_AS(brute_force_vertex_connectivity(Graph(4, k4), OracleBudget{}), Error);
}

TEST_CASE("disconnected input is rejected") {
  std::vector<Edge> split{{0, 1}, {2, 3}};
  Graph g(4, split);
  CHECK_THROWS_AS(brute_force_super_connectivity(g, OracleBudget{}), Error);
  CHECK_THROWS_AS(brute_force_vertex_connectivity(g, OracleBudget{}), Error);
}

TEST_CASE("oracle agrees between one and many workers") {
  Graph g = kneser_graph(5, 2);
  auto serial = brute_force_super_connectivity(g, OracleBudget{}, 1);
  auto parallel = brute_force_super_connectivity(g, OracleBudget{}, 4);
  CHECK(serial.status == parallel.status);
  CHECK(serial.value == parallel.value);
  CHECK(serial.subsets_enumerated == parallel.subsets_enumerated);
  CHECK(serial.certificate->cut == parallel.certificate->cut);
}

TEST_CASE("wide graphs fall back to the portable bitset path") {
  // 70 vertices forces the multi-word component check. C70 minus {0,3}
  // leaves {1,2} and a long arc.
  auto result = brute_force_super_connectivity(cycle(70), OracleBudget{});
  CHECK(result.status == OracleStatus::Exact);
  CHECK(result.value == 2);
  CHECK(result.certificate->cut.to_vector() == std::vector<Vertex>{0, 3});
}

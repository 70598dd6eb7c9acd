#include <doctest.h>

#include <set>
#include <vector>

#include "kappa1/error.hpp"
#include "kappa1/flow.hpp"
#include "kappa1/graph.hpp"
#include "kappa1/kneser.hpp"

using namespace kappa1;

namespace {

VertexSet one(const Graph& g, Vertex v) {
  return VertexSet::of(g.vertex_count(), std::vector<Vertex>{v});
}

Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, edges);
}

// Every path starts in A, ends in B, and interior vertices are pairwise
// distinct across paths and avoid A and B.
void check_menger_witness(const Graph& g, const VertexSet& A, const VertexSet& B,
                          const std::vector<std::vector<Vertex>>& paths) {
  std::set<Vertex> interior_seen;
  for (const auto& path : paths) {
    REQUIRE(path.size() >= 2);
    CHECK(A.test(path.front()));
    CHECK(B.test(path.back()));
    for (std::size_t i = 0; i + 1 < path.size(); ++i) CHECK(g.adjacent(path[i], path[i + 1]));
    for (std::size_t i = 1; i + 1 < path.size(); ++i) {
      CHECK_FALSE(A.test(path[i]));
      CHECK_FALSE(B.test(path[i]));
      CHECK(interior_seen.insert(path[i]).second);
    }
  }
}

}  // namespace

TEST_CASE("single vertex cut in a cycle") {
  Graph g = cycle(8);
  auto answer = min_vertex_cut(g, one(g, 0), one(g, 4));
  CHECK(answer.size == 2);
  CHECK(answer.cut.count() == 2);
  // The cut separates: no component of G - cut contains both terminals.
  auto parts = components(g, answer.cut);
  for (const auto& part : parts) CHECK_FALSE((part.test(0) && part.test(4)));
  CHECK(answer.source_side.test(0));
  CHECK_FALSE(answer.source_side.test(4));
}

TEST_CASE("terminal validation") {
  Graph g = cycle(6);
  VertexSet empty(6);
  CHECK_THROWS_AS(min_vertex_cut(g, empty, one(g, 2)), Error);
  CHECK_THROWS_AS(min_vertex_cut(g, one(g, 1), one(g, 1)), Error);       // overlap
  CHECK_THROWS_AS(min_vertex_cut(g, one(g, 0), one(g, 1)), Error);       // edge joins A, B
  try {
    min_vertex_cut(g, one(g, 0), one(g, 1));
    FAIL("expected Inseparable");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::Inseparable);
  }
}

TEST_CASE("set terminals: cut avoids both sides") {
  Graph g = cycle(10);
  VertexSet A = VertexSet::of(10, std::vector<Vertex>{0, 1});
  VertexSet B = VertexSet::of(10, std::vector<Vertex>{5, 6});
  auto answer = min_vertex_cut(g, A, B);
  CHECK(answer.size == 2);
  CHECK_FALSE(answer.cut.intersects(A));
  CHECK_FALSE(answer.cut.intersects(B));
}

TEST_CASE("menger equality on the petersen graph") {
  Graph g = kneser_graph(5, 2);
  // Vertices 0 = {1,2} and 3 = {1,5} share a label, hence are non-adjacent.
  auto answer = min_vertex_cut(g, one(g, 0), one(g, 3));
  auto paths = disjoint_paths(g, one(g, 0), one(g, 3));
  CHECK(answer.size == 3);
  CHECK(paths.size() == answer.size);
  check_menger_witness(g, one(g, 0), one(g, 3), paths);
}

TEST_CASE("menger equality with larger terminal sets") {
  Graph g = kneser_graph(7, 3);
  VertexSet A = VertexSet::of(35, std::vector<Vertex>{0, 1});    // {1,2,3}, {1,2,4}
  VertexSet B = VertexSet::of(35, std::vector<Vertex>{14, 24});  // {1,6,7}, {2,6,7}
  auto answer = min_vertex_cut(g, A, B);
  auto paths = disjoint_paths(g, A, B);
  CHECK(paths.size() == answer.size);
  check_menger_witness(g, A, B, paths);
  auto parts = components(g, answer.cut);
  for (const auto& part : parts) CHECK_FALSE((part.intersects(A) && part.intersects(B)));
}

TEST_CASE("deterministic canonical cut") {
  Graph g = cycle(8);
  auto first = min_vertex_cut(g, one(g, 0), one(g, 4));
  auto second = min_vertex_cut(g, one(g, 0), one(g, 4));
  CHECK(first.cut == second.cut);
  CHECK(first.source_side == second.source_side);
}

TEST_CASE("complete bipartite bottleneck") {
  // K_{2,3} plus pendant terminals: s - (2 left) - (3 right)? Use K_{3,3}
  // with s attached to the left side and t to the right; cut must be one
  // full side, size 3.
  std::vector<Edge> edges;
  for (Vertex l = 1; l <= 3; ++l)
    for (Vertex r = 4; r <= 6; ++r) edges.emplace_back(l, r);
  for (Vertex l = 1; l <= 3; ++l) edges.emplace_back(0, l);
  for (Vertex r = 4; r <= 6; ++r) edges.emplace_back(r, 7);
  Graph g(8, edges);
  auto answer = min_vertex_cut(g, one(g, 0), one(g, 7));
  CHECK(answer.size == 3);
  auto paths = disjoint_paths(g, one(g, 0), one(g, 7));
  CHECK(paths.size() == 3);
}

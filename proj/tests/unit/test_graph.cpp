#include <doctest.h>

#include <vector>

#include "kappa1/error.hpp"
#include "kappa1/graph.hpp"

using namespace kappa1;

namespace {

Graph path4() {
  std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}};
  return Graph(4, edges);
}

}  // namespace

TEST_CASE("label sets: disjointness and sharing") {
  LabelSet a{{1, 2, 3}};
  LabelSet b{{4, 5, 6}};
  LabelSet c{{3, 4, 5}};
  CHECK(a.disjoint(b));
  CHECK_FALSE(a.disjoint(c));
  CHECK(a.shared_count(c) == 1);
  CHECK(b.shared_count(c) == 2);
  CHECK(b.shared_labels(c) == std::vector<int>{4, 5});
  CHECK(a.valid(6));
  CHECK_FALSE(LabelSet{{0, 1, 2}}.valid(6));
  CHECK_FALSE(LabelSet{{1, 1, 2}}.valid(6));
  CHECK(to_string(a) == "{1,2,3}");
}

TEST_CASE("graph construction validates edges") {
  std::vector<Edge> loop{{2, 2}};
  CHECK_THROWS_AS(Graph(4, loop), Error);
  std::vector<Edge> range{{0, 4}};
  CHECK_THROWS_AS(Graph(4, range), Error);
  std::vector<Edge> dup{{0, 1}, {1, 0}};
  CHECK_THROWS_AS(Graph(4, dup), Error);
}

TEST_CASE("adjacency, degrees and edge listing") {
  Graph g = path4();
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 3);
  CHECK(g.adjacent(0, 1));
  CHECK(g.adjacent(1, 0));
  CHECK_FALSE(g.adjacent(0, 2));
  CHECK(g.degree(1) == 2);
  CHECK(g.degree(3) == 1);
  CHECK(g.neighbors(1).to_vector() == std::vector<Vertex>{0, 2});
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}});
  CHECK_FALSE(g.has_labels());
  CHECK(g == path4());
}

TEST_CASE("labeled construction enforces the disjointness invariant") {
  std::vector<Edge> edges{{0, 1}};
  std::vector<LabelSet> good{LabelSet{{1, 2}}, LabelSet{{3, 4}}};
  Graph g(2, edges, good, KneserParams{4, 2});
  CHECK(g.has_labels());
  CHECK(g.label(1).labels == std::vector<int>{3, 4});
  CHECK(g.kneser_params()->n == 4);

  // Adjacent vertices with overlapping labels contradict the invariant.
  std::vector<LabelSet> bad{LabelSet{{1, 2}}, LabelSet{{2, 3}}};
  CHECK_THROWS_AS(Graph(2, edges, bad, std::nullopt), Error);

  // Non-adjacent vertices with disjoint labels do too.
  std::vector<Edge> none;
  CHECK_THROWS_AS(Graph(2, none, good, std::nullopt), Error);
}

TEST_CASE("components with and without removed vertices") {
  Graph g = path4();
  CHECK(components(g).size() == 1);
  CHECK(g.is_connected());

  auto parts = components(g, VertexSet::of(4, std::vector<Vertex>{1}));
  REQUIRE(parts.size() == 2);
  // Ordered by smallest contained id.
  CHECK(parts[0].to_vector() == std::vector<Vertex>{0});
  CHECK(parts[1].to_vector() == std::vector<Vertex>{2, 3});

  std::vector<Edge> none;
  Graph isolated(3, none);
  CHECK_FALSE(isolated.is_connected());
  CHECK(components(isolated).size() == 3);
}

TEST_CASE("single vertex graph is connected") {
  std::vector<Edge> none;
  Graph g(1, none);
  CHECK(g.is_connected());
  CHECK(components(g).size() == 1);
}

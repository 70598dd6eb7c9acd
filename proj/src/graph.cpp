#include "kappa1/graph.hpp"

#include <algorithm>
#include <string>

#include "kappa1/error.hpp"

namespace kappa1 {

bool LabelSet::disjoint(const LabelSet& o) const {
  auto a = labels.begin();
  auto b = o.labels.begin();
  while (a != labels.end() && b != o.labels.end()) {
    if (*a == *b) return false;
    if (*a < *b) ++a; else ++b;
  }
  return true;
}

std::size_t LabelSet::shared_count(const LabelSet& o) const {
  std::size_t c = 0;
  auto a = labels.begin();
  auto b = o.labels.begin();
  while (a != labels.end() && b != o.labels.end()) {
    if (*a == *b) { ++c; ++a; ++b; }
    else if (*a < *b) ++a;
    else ++b;
  }
  return c;
}

std::vector<int> LabelSet::shared_labels(const LabelSet& o) const {
  std::vector<int> out;
  std::set_intersection(labels.begin(), labels.end(), o.labels.begin(), o.labels.end(),
                        std::back_inserter(out));
  return out;
}

bool LabelSet::valid(int n) const {
  int prev = 0;
  for (int l : labels) {
    if (l <= prev || l > n) return false;
    prev = l;
  }
  return true;
}

std::string to_string(const LabelSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(s.labels[i]);
  }
  out += '}';
  return out;
}

void Graph::add_undirected(Vertex u, Vertex v) {
  adjacency_[u].set(v);
  adjacency_[v].set(u);
  ++edge_count_;
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges)
    : adjacency_(vertex_count, VertexSet(vertex_count)) {
  for (const auto& [u, v] : edges) {
    if (u >= vertex_count || v >= vertex_count)
      fail(ErrorCode::BadArgument,
           "edge (" + std::to_string(u) + "," + std::to_string(v) + ") exceeds vertex count " +
               std::to_string(vertex_count));
    if (u == v)
      fail(ErrorCode::BadArgument, "self-loop at vertex " + std::to_string(u));
    if (adjacency_[u].test(v))
      fail(ErrorCode::BadArgument,
           "duplicate edge (" + std::to_string(u) + "," + std::to_string(v) + ")");
    add_undirected(u, v);
  }
}

Graph::Graph(std::size_t vertex_count, std::span<const Edge> edges,
             std::vector<LabelSet> labels, std::optional<KneserParams> params,
             bool trust_label_invariant)
    : Graph(vertex_count, edges) {
  if (labels.empty()) {
    if (params) fail(ErrorCode::BadArgument, "Kneser parameters without labels");
    return;
  }
  if (labels.size() != vertex_count)
    fail(ErrorCode::BadArgument, "label count " + std::to_string(labels.size()) +
                                     " does not match vertex count " +
                                     std::to_string(vertex_count));
  labels_ = std::move(labels);
  params_ = params;
  if (trust_label_invariant) return;
  for (Vertex u = 0; u < vertex_count; ++u)
    for (Vertex v = u + 1; v < vertex_count; ++v)
      if (adjacent(u, v) != labels_[u].disjoint(labels_[v]))
        fail(ErrorCode::BadArgument,
             "adjacency of vertices " + std::to_string(u) + " and " + std::to_string(v) +
                 " contradicts label disjointness");
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    for (int v = adjacency_[u].next(u); v != -1; v = adjacency_[u].next(v))
      out.emplace_back(u, static_cast<Vertex>(v));
  }
  return out;
}

bool Graph::is_connected() const {
  if (vertex_count() == 0) return true;
  return components(*this).size() == 1;
}

bool Graph::operator==(const Graph& o) const {
  return adjacency_ == o.adjacency_ && labels_ == o.labels_ && params_ == o.params_;
}

std::vector<VertexSet> components(const Graph& g, const VertexSet& removed) {
  const std::size_t n = g.vertex_count();
  VertexSet seen = removed;
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (seen.test(start)) continue;
    VertexSet comp(n);
    comp.set(start);
    seen.set(start);
    stack.assign(1, static_cast<Vertex>(start));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      VertexSet fresh = g.neighbors(v) - seen;
      seen |= fresh;
      comp |= fresh;
      fresh.for_each([&](Vertex w) { stack.push_back(w); });
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<VertexSet> components(const Graph& g) {
  return components(g, VertexSet(g.vertex_count()));
}

}  // namespace kappa1

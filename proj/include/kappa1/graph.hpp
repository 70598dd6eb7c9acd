#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "kappa1/bitset.hpp"

namespace kappa1 {

// A k-subset of {1..n}: strictly increasing labels, 1-based as in all I/O.
struct LabelSet {
  std::vector<int> labels;

  std::size_t size() const { return labels.size(); }
  bool disjoint(const LabelSet& o) const;
  std::size_t shared_count(const LabelSet& o) const;
  std::vector<int> shared_labels(const LabelSet& o) const;
  int max_label() const { return labels.empty() ? 0 : labels.back(); }

  // strictly increasing, all within [1, n]
  bool valid(int n) const;

  bool operator==(const LabelSet& o) const { return labels == o.labels; }
  bool operator<(const LabelSet& o) const { return labels < o.labels; }
};

std::string to_string(const LabelSet& s);  // "{1,2,3}"

struct KneserParams {
  int n = 0;
  int k = 0;
  bool operator==(const KneserParams&) const = default;
};

using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph with bitset neighbor rows and optional
// k-subset vertex labels. Safe to share across concurrent workers.
class Graph {
public:
  Graph() = default;

  // Validates: ids in range, u != v, no duplicate edges.
  Graph(std::size_t vertex_count, std::span<const Edge> edges);

  // Labeled construction (used by the parser and the Kneser generator).
  // `labels` must be empty or have one entry per vertex; when present,
  // adjacency must coincide with label-set disjointness.
  Graph(std::size_t vertex_count, std::span<const Edge> edges,
        std::vector<LabelSet> labels, std::optional<KneserParams> params,
        bool trust_label_invariant = false);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  const VertexSet& neighbors(Vertex v) const { return adjacency_[v]; }
  bool adjacent(Vertex u, Vertex v) const { return adjacency_[u].test(v); }
  std::size_t degree(Vertex v) const { return adjacency_[v].count(); }

  bool has_labels() const { return !labels_.empty(); }
  const LabelSet& label(Vertex v) const { return labels_[v]; }
  const std::vector<LabelSet>& labels() const { return labels_; }
  const std::optional<KneserParams>& kneser_params() const { return params_; }

  // Ascending (u, v) with u < v.
  std::vector<Edge> edges() const;

  bool is_connected() const;

  bool operator==(const Graph& o) const;

private:
  void add_undirected(Vertex u, Vertex v);

  std::size_t edge_count_ = 0;
  std::vector<VertexSet> adjacency_;
  std::vector<LabelSet> labels_;
  std::optional<KneserParams> params_;
};

// Connected components of the induced subgraph on V \ removed, each as a
// VertexSet, ordered by smallest contained vertex id. Empty when removed = V.
std::vector<VertexSet> components(const Graph& g, const VertexSet& removed);
std::vector<VertexSet> components(const Graph& g);

}  // namespace kappa1

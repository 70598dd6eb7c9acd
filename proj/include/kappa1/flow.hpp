#pragma once

#include <cstdint>
#include <vector>

#include "kappa1/graph.hpp"

namespace kappa1 {

struct MinCutAnswer {
  std::uint32_t size = 0;   // == cut.count()
  VertexSet cut;            // avoids A and B
  VertexSet source_side;    // vertices reachable from A after deleting cut
};

// Unit-vertex-capacity flow network obtained by node splitting: every
// non-terminal vertex v becomes v_in -> v_out with capacity 1, every edge
// becomes two opposite arcs of unbounded capacity, terminal set A is
// contracted into the source (out-side only) and B into the sink (in-side
// only). Max flow equals the minimum number of non-terminal vertices whose
// deletion disconnects A from B.
class FlowNetwork {
public:
  FlowNetwork(const Graph& g, const VertexSet& A, const VertexSet& B);

  std::uint32_t max_flow();

  // Canonical minimum cut: vertices whose split arc is saturated and crosses
  // the residual reachability frontier of the source. Call after max_flow().
  VertexSet min_cut_vertices() const;

  // Internally-vertex-disjoint A->B paths decoded from the integral flow,
  // one per flow unit. Call after max_flow().
  std::vector<std::vector<Vertex>> decode_paths() const;

private:
  struct Arc {
    std::uint32_t head;
    std::uint32_t cap;
    std::uint32_t orig;  // capacity at construction; 0 marks reverse arcs
    std::uint32_t rev;   // index of the reverse arc in arcs_[head]
  };

  std::uint32_t in_node(Vertex v) const { return 2 * v; }
  std::uint32_t out_node(Vertex v) const { return 2 * v + 1; }

  void add_arc(std::uint32_t tail, std::uint32_t head, std::uint32_t cap);
  bool build_levels();
  std::uint32_t push(std::uint32_t node, std::uint32_t limit);
  std::vector<bool> residual_reachable() const;

  const Graph& graph_;
  const VertexSet& terminals_a_;
  const VertexSet& terminals_b_;
  VertexSet terminals_;
  std::uint32_t node_count_;
  std::uint32_t source_;
  std::uint32_t sink_;
  std::uint32_t inf_cap_;
  std::vector<std::vector<Arc>> arcs_;
  std::vector<std::uint32_t> level_;
  std::vector<std::uint32_t> iter_;
  bool solved_ = false;
};

// Minimum A-B separating vertex cut avoiding A and B, with deterministic
// canonical extraction. Errors: EmptyTerminal, BadArgument (overlap),
// Inseparable (an edge joins A and B).
MinCutAnswer min_vertex_cut(const Graph& g, const VertexSet& A, const VertexSet& B);

// Menger witness: internally-vertex-disjoint A->B paths, count equal to the
// minimum cut size. Same preconditions as min_vertex_cut.
std::vector<std::vector<Vertex>> disjoint_paths(const Graph& g, const VertexSet& A,
                                                const VertexSet& B);

}  // namespace kappa1

#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "kappa1/certificates.hpp"
#include "kappa1/flow.hpp"
#include "kappa1/graph.hpp"
#include "kappa1/oracle.hpp"

namespace kappa1 {

struct VertexConnectivity {
  std::uint32_t kappa = 0;
  bool complete = false;  // complete graphs have no cut; kappa = |V| - 1
  std::optional<CutCertificate> witness;
};

// kappa = min over non-adjacent pairs (s, t) of the minimum s-t vertex cut.
// With `symmetry` (sound for vertex-transitive input) s is fixed to vertex 0.
VertexConnectivity vertex_connectivity(const Graph& g, bool symmetry = false,
                                       unsigned workers = 0);

// S = (N(u) | N(v)) \ {u, v} for an edge (u, v); validated so that G - S is
// disconnected, every component has size >= 2 and {u, v} is one component.
SuperCutCertificate constructive_super_cut(const Graph& g, Vertex u, Vertex v);

// Two vertex-disjoint edges with no edge of g joining their endpoints.
struct EdgePairTerminals {
  Edge first;
  Edge second;
  bool operator==(const EdgePairTerminals&) const = default;
};

struct LowerWitness {
  EdgePairTerminals pair;
  MinCutAnswer answer;
};

struct EdgePairBound {
  std::optional<std::uint32_t> m;  // nullopt: no admissible pair exists
  std::optional<LowerWitness> witness;
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_admissible = 0;
};

// m = min over admissible edge pairs of the pair's minimum separating cut;
// m <= kappa_1 whenever a super cut exists, and m is infinite iff no super
// cut exists. With `symmetry` (sound for edge-transitive input) the first
// edge is fixed to the lexicographically smallest edge.
EdgePairBound edge_pair_lower_bound(const Graph& g, bool symmetry = false,
                                    unsigned workers = 0);

// S' = cut plus every singleton component of G - cut. One pass suffices:
// removing a singleton component never shrinks another component.
SuperCutCertificate augment_cut_to_super(const Graph& g, const MinCutAnswer& answer);

enum class SuperStatus { Exact, Interval, NoSuperCut, NotApplicable };

enum class Strategy { Auto, FlowOnly, OracleOnly };

struct SuperConnectivityResult {
  SuperStatus status = SuperStatus::NotApplicable;
  std::optional<std::uint32_t> lower_bound;  // nullopt only for NoSuperCut / NotApplicable
  std::optional<std::uint32_t> upper_bound;  // nullopt: no super cut exhibited
  std::optional<SuperCutCertificate> upper_witness;
  std::optional<LowerWitness> lower_witness;
  std::uint64_t pairs_considered = 0;
  std::uint64_t pairs_admissible = 0;
  std::uint64_t oracle_subsets = 0;
};

// Certified interval for kappa_1. Lower bound from the edge-pair sweep; upper
// bound from constructive cuts over all edges and from augmenting every
// edge-pair minimum cut. Auto uses the oracle on graphs with <= 16 vertices.
// The symmetry reduction is applied only when the graph is Kneser-generated
// or the caller asserts transitivity.
SuperConnectivityResult super_connectivity(const Graph& g, Strategy strategy = Strategy::Auto,
                                           const OracleBudget& budget = {},
                                           bool assume_transitive = false,
                                           unsigned workers = 0);

// True iff kappa_1 > kappa or no super cut exists. Throws Undecided when the
// interval straddles kappa.
bool is_super_connected(const Graph& g, const OracleBudget& budget = {},
                        bool assume_transitive = false, unsigned workers = 0);

}  // namespace kappa1

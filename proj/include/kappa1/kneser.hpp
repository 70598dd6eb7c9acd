#pragma once

#include <cstdint>

#include "kappa1/graph.hpp"

namespace kappa1 {

// C(n, k) with the zero convention: 0 when k > n. Overflow past uint64 is
// reported as BadArgument rather than wrapped.
std::uint64_t binomial(int n, int k);

// Lexicographic rank of a k-subset of [1, n] among all k-subsets, and its
// inverse. rank({1,..,k}) = 0.
std::uint64_t rank_subset(const LabelSet& labels, int n);
LabelSet unrank_subset(std::uint64_t id, int n, int k);

struct KneserOptions {
  std::uint64_t vertex_cap = 1'000'000;      // guards accidental huge n
  std::uint64_t memory_cap_bytes = 2'000'000'000;  // adjacency rows are V^2 bits
};

// KG(n, k): vertices are the k-subsets of {1..n} in lexicographic order
// (vertex 0 = {1,..,k}); u ~ v iff their label sets are disjoint.
Graph kneser_graph(int n, int k, const KneserOptions& options = {});

}  // namespace kappa1

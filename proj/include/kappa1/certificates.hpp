#pragma once

#include <cstddef>
#include <vector>

#include "kappa1/graph.hpp"

namespace kappa1 {

// A vertex cut plus the component partition of G - cut. Checkable without
// trusting the solver that produced it.
struct CutCertificate {
  VertexSet cut;
  std::vector<VertexSet> component_partition;
};

// As CutCertificate, with every component of size >= 2.
struct SuperCutCertificate {
  VertexSet cut;
  std::vector<VertexSet> component_partition;
};

struct ValidationReport {
  bool is_cut = false;    // at least 2 components
  bool is_super = false;  // is_cut and every component has size >= 2
  std::vector<std::size_t> component_sizes;
  std::vector<Vertex> isolated;  // singleton components
};

// Pure recomputation from g and S; independent of every solver path.
ValidationReport validate_super_cut(const Graph& g, const VertexSet& S);

}  // namespace kappa1

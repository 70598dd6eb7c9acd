#include "kappa1/certificates.hpp"

namespace kappa1 {

ValidationReport validate_super_cut(const Graph& g, const VertexSet& S) {
  ValidationReport report;
  auto parts = components(g, S);
  report.component_sizes.reserve(parts.size());
  for (const auto& part : parts) {
    std::size_t size = part.count();
    report.component_sizes.push_back(size);
    if (size == 1) report.isolated.push_back(static_cast<Vertex>(part.first()));
  }
  report.is_cut = parts.size() >= 2;
  report.is_super = report.is_cut && report.isolated.empty();
  return report;
}

}  // namespace kappa1

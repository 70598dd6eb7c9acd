#include "kappa1/kneser.hpp"

#include <limits>
#include <string>

#include "kappa1/error.hpp"

namespace kappa1 {

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0)
    fail(ErrorCode::BadArgument,
         "binomial(" + std::to_string(n) + "," + std::to_string(k) + ") with negative argument");
  if (k > n) return 0;  // the zero convention used throughout
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (int i = 1; i <= k; ++i) {
    std::uint64_t num = static_cast<std::uint64_t>(n - k + i);
    // multiply first, checking for overflow; the division is always exact
    if (result > std::numeric_limits<std::uint64_t>::max() / num)
      fail(ErrorCode::BadArgument,
           "binomial(" + std::to_string(n) + "," + std::to_string(k) + ") overflows uint64");
    result = result * num / static_cast<std::uint64_t>(i);
  }
  return result;
}

std::uint64_t rank_subset(const LabelSet& labels, int n) {
  if (!labels.valid(n))
    fail(ErrorCode::BadArgument, "label set " + to_string(labels) + " invalid for n=" +
                                     std::to_string(n));
  const int k = static_cast<int>(labels.size());
  // count the k-subsets strictly before `labels` in lex order: positions
  // where a smaller unused label could have been chosen
  std::uint64_t rank = 0;
  int prev = 0;
  for (int i = 0; i < k; ++i) {
    for (int c = prev + 1; c < labels.labels[i]; ++c)
      rank += binomial(n - c, k - 1 - i);
    prev = labels.labels[i];
  }
  return rank;
}

LabelSet unrank_subset(std::uint64_t id, int n, int k) {
  if (k < 0 || n < 0 || id >= binomial(n, k))
    fail(ErrorCode::BadArgument, "rank " + std::to_string(id) + " out of range for C(" +
                                     std::to_string(n) + "," + std::to_string(k) + ")");
  LabelSet out;
  out.labels.reserve(k);
  int c = 1;
  for (int i = 0; i < k; ++i) {
    while (true) {
      std::uint64_t block = binomial(n - c, k - 1 - i);
      if (id < block) break;
      id -= block;
      ++c;
    }
    out.labels.push_back(c);
    ++c;
  }
  return out;
}

Graph kneser_graph(int n, int k, const KneserOptions& options) {
  if (k < 1) fail(ErrorCode::BadArgument, "k must be >= 1, got " + std::to_string(k));
  if (n < k)
    fail(ErrorCode::BadArgument,
         "KG(" + std::to_string(n) + "," + std::to_string(k) + ") needs n >= k");
  const std::uint64_t v = binomial(n, k);
  if (v > options.vertex_cap)
    fail(ErrorCode::CapExceeded, "KG(" + std::to_string(n) + "," + std::to_string(k) + ") has " +
                                     std::to_string(v) + " vertices, cap is " +
                                     std::to_string(options.vertex_cap));
  // V bitset rows of V bits each, plus the same again inside the flow solvers
  const std::uint64_t bytes = v * ((v + 63) / 64) * 8;
  if (bytes > options.memory_cap_bytes)
    fail(ErrorCode::CapExceeded, "adjacency for KG(" + std::to_string(n) + "," +
                                     std::to_string(k) + ") needs " + std::to_string(bytes) +
                                     " bytes, cap is " + std::to_string(options.memory_cap_bytes));

  std::vector<LabelSet> labels;
  labels.reserve(v);
  for (std::uint64_t id = 0; id < v; ++id) labels.push_back(unrank_subset(id, n, k));

  std::vector<Edge> edges;
  for (Vertex a = 0; a < v; ++a)
    for (Vertex b = a + 1; b < v; ++b)
      if (labels[a].disjoint(labels[b])) edges.emplace_back(a, b);

  return Graph(v, edges, std::move(labels), KneserParams{n, k},
               /*trust_label_invariant=*/true);
}

}  // namespace kappa1

#include "support/corpus.hpp"

#include <algorithm>
#include <unordered_set>

namespace corpus {

namespace {

struct Canonizer {
  const SmallGraph* g;
  int n;
  int total_bits;
  std::uint32_t best;
  std::array<int, 8> order{};
  std::uint8_t used = 0;

  // Bits already emitted once d vertices are placed.
  static int placed_bits(int d) { return d * (d - 1) / 2; }

  void dfs(int d, std::uint32_t code) {
    if (d == n) {
      best = code;  // the depth n-1 check already ensured code <= best
      return;
    }
    for (int w = 0; w < n; ++w) {
      if (used & (1u << w)) continue;
      std::uint32_t bits = 0;
      for (int i = 0; i < d; ++i)
        bits = (bits << 1) | ((g->rows[order[i]] >> w) & 1u);
      std::uint32_t extended = (code << d) | bits;
      // Compare the whole prefix against the current best each time; best
      // only shrinks, so a stale "equal so far" flag would over-explore.
      if (extended > (best >> (total_bits - placed_bits(d + 1)))) continue;
      order[d] = w;
      used |= 1u << w;
      dfs(d + 1, extended);
      used &= ~(1u << w);
    }
  }
};

SmallGraph decode(std::uint32_t code, int n) {
  SmallGraph g;
  g.n = n;
  int pos = n * (n - 1) / 2;
  for (int j = 1; j < n; ++j)
    for (int i = 0; i < j; ++i) {
      --pos;
      if ((code >> pos) & 1u) {
        g.rows[i] |= std::uint8_t(1u << j);
        g.rows[j] |= std::uint8_t(1u << i);
      }
    }
  return g;
}

}  // namespace

std::uint32_t canonical_code(const SmallGraph& g) {
  if (g.n <= 1) return 0;
  Canonizer c;
  c.g = &g;
  c.n = g.n;
  c.total_bits = g.n * (g.n - 1) / 2;
  c.best = c.total_bits >= 32 ? ~0u : (1u << c.total_bits) - 1u;
  c.dfs(0, 0);
  return c.best;
}

std::vector<SmallGraph> all_graphs(int n) {
  std::vector<std::uint32_t> codes{0};  // the 1-vertex graph
  for (int size = 2; size <= n; ++size) {
    std::unordered_set<std::uint32_t> seen;
    for (std::uint32_t parent : codes) {
      SmallGraph base = decode(parent, size - 1);
      base.n = size;
      for (std::uint32_t nb = 0; nb < (1u << (size - 1)); ++nb) {
        SmallGraph candidate = base;
        candidate.rows[size - 1] = std::uint8_t(nb);
        for (int i = 0; i < size - 1; ++i)
          if ((nb >> i) & 1u) candidate.rows[i] |= std::uint8_t(1u << (size - 1));
        seen.insert(canonical_code(candidate));
      }
    }
    codes.assign(seen.begin(), seen.end());
    std::sort(codes.begin(), codes.end());
  }
  std::vector<SmallGraph> out;
  out.reserve(codes.size());
  for (std::uint32_t code : codes) out.push_back(decode(code, n));
  return out;
}

bool is_connected(const SmallGraph& g) {
  if (g.n == 0) return false;
  std::uint8_t all = std::uint8_t((1u << g.n) - 1u);
  std::uint8_t seen = 1;
  std::uint8_t frontier = 1;
  while (frontier) {
    std::uint8_t next = 0;
    for (int v = 0; v < g.n; ++v)
      if ((frontier >> v) & 1u) next |= g.rows[v];
    frontier = std::uint8_t(next & ~seen);
    seen |= next;
  }
  return seen == all;
}

kappa1::Graph to_graph(const SmallGraph& g) {
  std::vector<kappa1::Edge> edges;
  for (int u = 0; u < g.n; ++u)
    for (int v = u + 1; v < g.n; ++v)
      if ((g.rows[u] >> v) & 1u)
        edges.emplace_back(static_cast<kappa1::Vertex>(u), static_cast<kappa1::Vertex>(v));
  return kappa1::Graph(static_cast<std::size_t>(g.n), edges);
}

std::vector<kappa1::Graph> connected_graphs(int n) {
  std::vector<kappa1::Graph> out;
  for (const auto& g : all_graphs(n))
    if (is_connected(g)) out.push_back(to_graph(g));
  return out;
}

kappa1::Graph random_connected(std::mt19937& rng, int n, double p) {
  std::vector<int> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::shuffle(perm.begin(), perm.end(), rng);

  std::vector<std::uint16_t> rows(n, 0);
  auto connect = [&](int u, int v) {
    rows[u] |= std::uint16_t(1u << v);
    rows[v] |= std::uint16_t(1u << u);
  };
  for (int i = 1; i < n; ++i) {
    std::uniform_int_distribution<int> earlier(0, i - 1);
    connect(perm[i], perm[earlier(rng)]);
  }
  std::bernoulli_distribution extra(p);
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if (!((rows[u] >> v) & 1u) && extra(rng)) connect(u, v);

  std::vector<kappa1::Edge> edges;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v)
      if ((rows[u] >> v) & 1u)
        edges.emplace_back(static_cast<kappa1::Vertex>(u), static_cast<kappa1::Vertex>(v));
  return kappa1::Graph(static_cast<std::size_t>(n), edges);
}

}  // namespace corpus

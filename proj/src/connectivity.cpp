#include "kappa1/connectivity.hpp"

#include <algorithm>
#include <string>
#include <tuple>

#include "kappa1/error.hpp"
#include "kappa1/parallel.hpp"

namespace kappa1 {

namespace {

bool is_complete(const Graph& g) {
  const std::size_t v = g.vertex_count();
  return g.edge_count() == v * (v - 1) / 2;
}

VertexSet pair_set(std::size_t universe, Vertex a, Vertex b) {
  VertexSet s(universe);
  s.set(a);
  s.set(b);
  return s;
}

VertexSet single_set(std::size_t universe, Vertex a) {
  VertexSet s(universe);
  s.set(a);
  return s;
}

// (size, terminal pair, cut) — the deterministic order for picking among
// minimum cuts found by concurrent sweeps.
struct PairCandidate {
  std::uint32_t size;
  Vertex s, t;
  MinCutAnswer answer;
};

bool better_pair(const PairCandidate& a, const PairCandidate& b) {
  if (a.size != b.size) return a.size < b.size;
  if (a.s != b.s) return a.s < b.s;
  if (a.t != b.t) return a.t < b.t;
  return VertexSet::compare_lex(a.answer.cut, b.answer.cut) < 0;
}

}  // namespace

VertexConnectivity vertex_connectivity(const Graph& g, bool symmetry, unsigned workers) {
  const std::size_t v_count = g.vertex_count();
  if (v_count < 2) fail(ErrorCode::TooSmall, "vertex connectivity needs at least 2 vertices");

  VertexConnectivity result;
  if (is_complete(g)) {
    result.kappa = static_cast<std::uint32_t>(v_count - 1);
    result.complete = true;
    return result;
  }

  std::vector<std::pair<Vertex, Vertex>> pairs;
  if (symmetry) {
    for (Vertex t = 1; t < v_count; ++t)
      if (!g.adjacent(0, t)) pairs.emplace_back(0, t);
    if (pairs.empty())
      fail(ErrorCode::BadArgument,
           "symmetry reduction found no non-adjacent pair at vertex 0; "
           "the graph cannot be vertex-transitive");
  } else {
    for (Vertex s = 0; s < v_count; ++s)
      for (Vertex t = s + 1; t < v_count; ++t)
        if (!g.adjacent(s, t)) pairs.emplace_back(s, t);
  }

  using Best = std::optional<PairCandidate>;
  Best best = parallel_chunk_reduce<Best>(
      pairs.size(), std::nullopt,
      [&](std::uint64_t i) -> Best {
        auto [s, t] = pairs[static_cast<std::size_t>(i)];
        MinCutAnswer answer =
            min_vertex_cut(g, single_set(v_count, s), single_set(v_count, t));
        return PairCandidate{answer.size, s, t, std::move(answer)};
      },
      [](Best acc, Best item) -> Best {
        if (!item) return acc;
        if (!acc || better_pair(*item, *acc)) return item;
        return acc;
      },
      workers);

  result.kappa = best->size;
  result.witness = CutCertificate{best->answer.cut, components(g, best->answer.cut)};
  return result;
}

SuperCutCertificate constructive_super_cut(const Graph& g, Vertex u, Vertex v) {
  if (u >= g.vertex_count() || v >= g.vertex_count() || u == v || !g.adjacent(u, v))
    fail(ErrorCode::NotAnEdge,
         "(" + std::to_string(u) + "," + std::to_string(v) + ") is not an edge");
  VertexSet cut = g.neighbors(u) | g.neighbors(v);
  cut.reset(u);
  cut.reset(v);
  auto parts = components(g, cut);
  if (parts.size() < 2)
    fail(ErrorCode::NotASuperCut, "deleting the joint neighborhood leaves the graph connected");
  bool pair_found = false;
  for (const auto& part : parts) {
    std::size_t size = part.count();
    if (size < 2)
      fail(ErrorCode::NotASuperCut,
           "vertex " + std::to_string(part.first()) + " is isolated by the cut");
    if (part.test(u)) pair_found = size == 2 && part.test(v);
  }
  if (!pair_found)
    fail(ErrorCode::NotASuperCut, "the edge's component is not exactly the two endpoints");
  return SuperCutCertificate{std::move(cut), std::move(parts)};
}

SuperCutCertificate augment_cut_to_super(const Graph& g, const MinCutAnswer& answer) {
  auto parts = components(g, answer.cut);
  VertexSet augmented = answer.cut;
  // A singleton component has its whole neighborhood inside the cut, so
  // absorbing it cannot split or shrink any other component.
  std::vector<VertexSet> keep;
  for (auto& part : parts) {
    if (part.count() == 1)
      augmented.set(static_cast<std::size_t>(part.first()));
    else
      keep.push_back(std::move(part));
  }
  if (keep.size() < 2)
    fail(ErrorCode::CannotAugment,
         "fewer than two components of size >= 2 remain after absorbing singletons");
  return SuperCutCertificate{std::move(augmented), std::move(keep)};
}

namespace {

bool admissible_pair(const Graph& g, const Edge& e1, const Edge& e2) {
  auto [a, b] = e1;
  auto [c, d] = e2;
  if (a == c || a == d || b == c || b == d) return false;
  return !g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, c) && !g.adjacent(b, d);
}

struct SweepAccum {
  std::uint64_t admissible = 0;
  std::optional<LowerWitness> best_lower;
  std::optional<SuperCutCertificate> best_upper;
};

bool better_lower(const LowerWitness& a, const LowerWitness& b) {
  if (a.answer.size != b.answer.size) return a.answer.size < b.answer.size;
  auto key = [](const LowerWitness& w) {
    return std::tie(w.pair.first.first, w.pair.first.second, w.pair.second.first,
                    w.pair.second.second);
  };
  if (key(a) != key(b)) return key(a) < key(b);
  return VertexSet::compare_lex(a.answer.cut, b.answer.cut) < 0;
}

bool better_upper(const SuperCutCertificate& a, const SuperCutCertificate& b) {
  std::size_t sa = a.cut.count(), sb = b.cut.count();
  if (sa != sb) return sa < sb;
  return VertexSet::compare_lex(a.cut, b.cut) < 0;
}

// Shared engine for edge_pair_lower_bound and the kappa_1 sweep. Pairs are
// enumerated in a fixed order ((0,j) ascending under symmetry, (i,j) i<j
// lexicographic otherwise); the fold picks minima under the deterministic
// orders above, so the outcome is schedule-independent.
EdgePairBound sweep_pairs(const Graph& g, bool symmetry, unsigned workers, bool with_upper,
                          std::optional<SuperCutCertificate>* upper_out) {
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "edge-pair bound needs a connected graph");
  const auto edges = g.edges();
  const std::uint64_t e = edges.size();

  std::vector<std::pair<std::uint32_t, std::uint32_t>> pair_index;
  if (symmetry) {
    for (std::uint32_t j = 1; j < e; ++j) pair_index.emplace_back(0, j);
  } else {
    for (std::uint32_t i = 0; i < e; ++i)
      for (std::uint32_t j = i + 1; j < e; ++j) pair_index.emplace_back(i, j);
  }

  SweepAccum total = parallel_chunk_reduce<SweepAccum>(
      pair_index.size(), SweepAccum{},
      [&](std::uint64_t p) -> SweepAccum {
        SweepAccum out;
        auto [i, j] = pair_index[static_cast<std::size_t>(p)];
        const Edge& e1 = edges[i];
        const Edge& e2 = edges[j];
        if (!admissible_pair(g, e1, e2)) return out;
        out.admissible = 1;
        VertexSet A = pair_set(g.vertex_count(), e1.first, e1.second);
        VertexSet B = pair_set(g.vertex_count(), e2.first, e2.second);
        MinCutAnswer answer = min_vertex_cut(g, A, B);
        if (with_upper) out.best_upper = augment_cut_to_super(g, answer);
        out.best_lower = LowerWitness{EdgePairTerminals{e1, e2}, std::move(answer)};
        return out;
      },
      [](SweepAccum acc, SweepAccum item) -> SweepAccum {
        acc.admissible += item.admissible;
        if (item.best_lower &&
            (!acc.best_lower || better_lower(*item.best_lower, *acc.best_lower)))
          acc.best_lower = std::move(item.best_lower);
        if (item.best_upper &&
            (!acc.best_upper || better_upper(*item.best_upper, *acc.best_upper)))
          acc.best_upper = std::move(item.best_upper);
        return acc;
      },
      workers);

  EdgePairBound bound;
  bound.pairs_considered = pair_index.size();
  bound.pairs_admissible = total.admissible;
  if (total.best_lower) {
    bound.m = total.best_lower->answer.size;
    bound.witness = std::move(total.best_lower);
  }
  if (upper_out) *upper_out = std::move(total.best_upper);
  return bound;
}

}  // namespace

EdgePairBound edge_pair_lower_bound(const Graph& g, bool symmetry, unsigned workers) {
  return sweep_pairs(g, symmetry, workers, /*with_upper=*/false, nullptr);
}

namespace {

SuperConnectivityResult flow_sweep(const Graph& g, bool symmetry, unsigned workers) {
  SuperConnectivityResult result;
  std::optional<SuperCutCertificate> augmented;
  EdgePairBound bound = sweep_pairs(g, symmetry, workers, /*with_upper=*/true, &augmented);
  result.pairs_considered = bound.pairs_considered;
  result.pairs_admissible = bound.pairs_admissible;
  if (!bound.m) {
    // No admissible pair: every component of any G-S with >= 2 vertices
    // would contain an edge, and two such edges would form an admissible
    // pair — so no super cut exists.
    result.status = SuperStatus::NoSuperCut;
    return result;
  }
  result.lower_bound = *bound.m;
  result.lower_witness = std::move(bound.witness);

  std::optional<SuperCutCertificate> best = std::move(augmented);
  for (const auto& [u, v] : g.edges()) {
    SuperCutCertificate candidate;
    try {
      candidate = constructive_super_cut(g, u, v);
    } catch (const Error&) {
      continue;  // this edge's joint neighborhood is not a super cut
    }
    if (!best || better_upper(candidate, *best)) best = std::move(candidate);
  }

  if (best) {
    result.upper_bound = static_cast<std::uint32_t>(best->cut.count());
    result.upper_witness = std::move(best);
  }
  result.status = (result.upper_bound && *result.upper_bound == *result.lower_bound)
                      ? SuperStatus::Exact
                      : SuperStatus::Interval;
  return result;
}

SuperConnectivityResult from_oracle(const Graph& g, const SuperOracleResult& oracle) {
  SuperConnectivityResult result;
  result.oracle_subsets = oracle.subsets_enumerated;
  if (oracle.status == OracleStatus::Exact) {
    result.status = SuperStatus::Exact;
    result.lower_bound = oracle.value;
    result.upper_bound = oracle.value;
    result.upper_witness = oracle.certificate;
    return result;
  }
  // NoSuperCutUpTo: a super cut leaves two components of >= 2 vertices, so
  // its size is at most |V| - 4; a completed cap at or past that bound rules
  // every super cut out.
  if (oracle.value + 4 >= g.vertex_count()) {
    result.status = SuperStatus::NoSuperCut;
  } else {
    result.status = SuperStatus::Interval;
    result.lower_bound = oracle.value + 1;
  }
  return result;
}

}  // namespace

SuperConnectivityResult super_connectivity(const Graph& g, Strategy strategy,
                                           const OracleBudget& budget, bool assume_transitive,
                                           unsigned workers) {
  if (g.vertex_count() < 4)
    fail(ErrorCode::TooSmall, "super connectivity needs at least 4 vertices");
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "super connectivity needs a connected graph");

  const bool symmetry = g.kneser_params().has_value() || assume_transitive;

  if (strategy == Strategy::OracleOnly) {
    SuperOracleResult oracle = brute_force_super_connectivity(g, budget, workers);
    if (oracle.status == OracleStatus::BudgetExceeded)
      fail(ErrorCode::BudgetExceeded, "oracle budget exhausted after " +
                                          std::to_string(oracle.subsets_enumerated) + " subsets");
    return from_oracle(g, oracle);
  }

  if (strategy == Strategy::Auto && g.vertex_count() <= 16) {
    // Small enough to settle exhaustively: raise the size cap to |V| - 4 so
    // the outcome is Exact or a definitive NoSuperCut.
    OracleBudget full = budget;
    full.max_cut_size =
        std::max(full.max_cut_size, static_cast<std::uint32_t>(g.vertex_count() - 4));
    SuperOracleResult oracle = brute_force_super_connectivity(g, full, workers);
    if (oracle.status != OracleStatus::BudgetExceeded) {
      SuperConnectivityResult result = from_oracle(g, oracle);
      if (result.status != SuperStatus::Interval) return result;
    }
    SuperConnectivityResult result = flow_sweep(g, symmetry, workers);
    result.oracle_subsets = oracle.subsets_enumerated;
    return result;
  }

  return flow_sweep(g, symmetry, workers);
}

bool is_super_connected(const Graph& g, const OracleBudget& budget, bool assume_transitive,
                        unsigned workers) {
  if (!g.is_connected()) fail(ErrorCode::Disconnected, "super connectivity needs a connected graph");
  if (g.vertex_count() < 4) return true;  // no room for two components of size >= 2
  if (is_complete(g)) return true;        // no vertex cut at all

  std::uint32_t kappa = vertex_connectivity(g, g.kneser_params().has_value() || assume_transitive,
                                            workers)
                            .kappa;
  SuperConnectivityResult sc = super_connectivity(g, Strategy::Auto, budget, assume_transitive,
                                                  workers);
  if (sc.status == SuperStatus::NoSuperCut) return true;
  if (sc.status == SuperStatus::Exact) return *sc.lower_bound > kappa;
  // Interval: lower > kappa decides one way, upper == kappa the other.
  if (sc.lower_bound && *sc.lower_bound > kappa) return true;
  if (sc.upper_bound && *sc.upper_bound == kappa) return false;
  fail(ErrorCode::Undecided, "kappa_1 interval straddles kappa = " + std::to_string(kappa));
}

}  // namespace kappa1

#include "kappa1/oracle.hpp"

#include <atomic>
#include <bit>
#include <string>

#include "kappa1/error.hpp"
#include "kappa1/kneser.hpp"
#include "kappa1/parallel.hpp"

namespace kappa1 {

namespace {

constexpr std::uint64_t kTooMany = ~std::uint64_t{0};

// C(n,k), or kTooMany once the value exceeds cap — for budget arithmetic.
std::uint64_t binomial_capped(std::uint64_t n, std::uint64_t k, std::uint64_t cap) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    std::uint64_t num = n - k + i;
    if (result > kTooMany / num) return kTooMany;
    result = result * num / i;
    // the running value C(n-k+i, i) never decreases, so an overshoot is final
    if (result > cap) return kTooMany;
  }
  return result;
}

void check_budget(const OracleBudget& budget) {
  if (budget.max_cut_size < 1 || budget.max_subset_count < 1)
    fail(ErrorCode::BadArgument, "oracle budget fields must be positive");
}

struct SearchOutcome {
  bool hit = false;
  std::vector<Vertex> hit_subset;  // lexicographically first passing subset
  std::uint32_t hit_size = 0;
  std::uint32_t completed = 0;     // levels 1..completed finished with no hit
  std::uint64_t enumerated = 0;    // position-based, schedule-independent
  bool budget_stopped = false;
};

struct LevelHit {
  Vertex leading;
  std::vector<Vertex> subset;
};

// One size level, chunked by leading element. Every chunk enumerates its
// subsets in lexicographic order and reports its first pass; chunks whose
// leading element exceeds an already-found hit abort early, which cannot
// change the minimum. The reduce keeps the smallest leading element, i.e.
// the lexicographically first passing subset of the level.
template <typename Check>
std::optional<LevelHit> run_level(std::size_t v_count, std::uint32_t s, unsigned workers,
                                  const Check& check) {
  const std::uint64_t chunk_count = v_count >= s ? v_count - s + 1 : 0;
  std::atomic<std::uint32_t> best_leading{~std::uint32_t{0}};

  using Hit = std::optional<LevelHit>;
  return parallel_chunk_reduce<Hit>(
      chunk_count, std::nullopt,
      [&](std::uint64_t chunk) -> Hit {
        const auto lead = static_cast<Vertex>(chunk);
        std::vector<Vertex> idx(s);
        for (std::uint32_t i = 0; i < s; ++i) idx[i] = lead + i;
        std::uint32_t tick = 0;
        while (true) {
          if (++tick == 1024) {
            tick = 0;
            if (best_leading.load(std::memory_order_relaxed) < lead) return std::nullopt;
          }
          if (check(idx)) {
            std::uint32_t seen = best_leading.load(std::memory_order_relaxed);
            while (lead < seen &&
                   !best_leading.compare_exchange_weak(seen, lead, std::memory_order_relaxed)) {
            }
            return LevelHit{lead, idx};
          }
          // advance positions 1..s-1; position 0 is this chunk's identity
          std::uint32_t p = s;
          while (--p >= 1 && idx[p] == v_count - s + p) {
          }
          if (p < 1) return std::nullopt;
          ++idx[p];
          for (std::uint32_t q = p + 1; q < s; ++q) idx[q] = idx[q - 1] + 1;
        }
      },
      [](Hit acc, Hit item) -> Hit {
        if (!item) return acc;
        if (!acc || item->leading < acc->leading) return item;
        return acc;
      },
      workers);
}

std::uint64_t lex_rank(const std::vector<Vertex>& subset, std::size_t v_count) {
  LabelSet labels;
  labels.labels.reserve(subset.size());
  for (Vertex v : subset) labels.labels.push_back(static_cast<int>(v) + 1);
  return rank_subset(labels, static_cast<int>(v_count));
}

// Size-ordered search: level s is started only when its full C(V,s) fits in
// the remaining subset budget, so the outcome never depends on how far
// individual workers got. `level_cap` is the largest size any passing subset
// can have (V-4 for super cuts, V-2 for plain cuts); levels above it are
// vacuously complete.
template <typename Check>
SearchOutcome search(std::size_t v_count, const OracleBudget& budget, std::uint32_t level_cap,
                     unsigned workers, const Check& check) {
  SearchOutcome outcome;
  for (std::uint32_t s = 1; s <= budget.max_cut_size; ++s) {
    if (s > level_cap || s > v_count) {
      outcome.completed = s;
      continue;
    }
    std::uint64_t level_size = binomial_capped(v_count, s, budget.max_subset_count);
    if (level_size > budget.max_subset_count - outcome.enumerated) {
      outcome.budget_stopped = true;
      return outcome;
    }
    auto hit = run_level(v_count, s, workers, check);
    if (hit) {
      outcome.hit = true;
      outcome.hit_size = s;
      outcome.hit_subset = std::move(hit->subset);
      outcome.enumerated += lex_rank(outcome.hit_subset, v_count) + 1;
      return outcome;
    }
    outcome.enumerated += level_size;
    outcome.completed = s;
  }
  return outcome;
}

// Adjacency as single machine words, for graphs of at most 64 vertices —
// component scans become a handful of word operations per candidate.
struct MaskView {
  std::vector<std::uint64_t> rows;
  std::uint64_t all;

  explicit MaskView(const Graph& g) : rows(g.vertex_count(), 0) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      g.neighbors(v).for_each([&](Vertex w) { rows[v] |= std::uint64_t{1} << w; });
    all = g.vertex_count() == 64 ? ~std::uint64_t{0}
                                 : (std::uint64_t{1} << g.vertex_count()) - 1;
  }

  // components of G - S: count and minimum size, early-exiting on isolated
  // vertices when min_component_size == 2
  bool passes(std::uint64_t removed, std::size_t min_component_size) const {
    std::uint64_t rest = all & ~removed;
    int component_count = 0;
    while (rest) {
      std::uint64_t comp = rest & (~rest + 1);
      std::uint64_t frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        std::uint64_t bits = frontier;
        while (bits) {
          next |= rows[std::countr_zero(bits)];
          bits &= bits - 1;
        }
        frontier = next & rest & ~comp;
        comp |= frontier;
      }
      if (static_cast<std::size_t>(std::popcount(comp)) < min_component_size) return false;
      ++component_count;
      rest &= ~comp;
    }
    return component_count >= 2;
  }
};

std::uint64_t to_mask(const std::vector<Vertex>& subset) {
  std::uint64_t m = 0;
  for (Vertex v : subset) m |= std::uint64_t{1} << v;
  return m;
}

// Fallback for graphs wider than a machine word.
bool passes_wide(const Graph& g, const std::vector<Vertex>& subset,
                 std::size_t min_component_size) {
  VertexSet removed = VertexSet::of(g.vertex_count(), subset);
  auto parts = components(g, removed);
  if (parts.size() < 2) return false;
  for (const auto& part : parts)
    if (part.count() < min_component_size) return false;
  return true;
}

template <typename ResultT>
ResultT run_oracle(const Graph& g, const OracleBudget& budget, unsigned workers,
                   std::uint32_t slack, std::size_t min_component_size) {
  const std::size_t v_count = g.vertex_count();
  const std::uint32_t level_cap =
      v_count > slack ? static_cast<std::uint32_t>(v_count - slack) : 0;

  SearchOutcome outcome;
  if (v_count <= 64) {
    MaskView view(g);
    outcome = search(
        v_count, budget, level_cap, workers,
        [&](const std::vector<Vertex>& subset) {
          return view.passes(to_mask(subset), min_component_size);
        });
  } else {
    outcome = search(
        v_count, budget, level_cap, workers,
        [&](const std::vector<Vertex>& subset) {
          return passes_wide(g, subset, min_component_size);
        });
  }

  ResultT result;
  result.subsets_enumerated = outcome.enumerated;
  if (outcome.hit) {
    result.status = OracleStatus::Exact;
    result.value = outcome.hit_size;
    VertexSet cut = VertexSet::of(v_count, outcome.hit_subset);
    auto parts = components(g, cut);
    result.certificate = {std::move(cut), std::move(parts)};
  } else if (outcome.completed > 0) {
    result.status = OracleStatus::NoSuperCutUpTo;
    result.value = outcome.completed;
  } else {
    result.status = OracleStatus::BudgetExceeded;
    result.value = 0;
  }
  return result;
}

}  // namespace

SuperOracleResult brute_force_super_connectivity(const Graph& g, const OracleBudget& budget,
                                                 unsigned workers) {
  check_budget(budget);
  if (!g.is_connected())
    fail(ErrorCode::Disconnected, "the super-cut oracle needs a connected graph");
  return run_oracle<SuperOracleResult>(g, budget, workers, /*slack=*/4,
                                       /*min_component_size=*/2);
}

KappaOracleResult brute_force_vertex_connectivity(const Graph& g, const OracleBudget& budget,
                                                  unsigned workers) {
  check_budget(budget);
  if (!g.is_connected())
    fail(ErrorCode::Disconnected, "the connectivity oracle needs a connected graph");
  if (g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2)
    fail(ErrorCode::BadArgument, "complete graphs have no vertex cut");
  KappaOracleResult result = run_oracle<KappaOracleResult>(g, budget, workers, /*slack=*/2,
                                                           /*min_component_size=*/1);
  // completing all levels without a hit just means max_cut_size < kappa;
  // report it as budget starvation with value = the last completed level
  if (result.status == OracleStatus::NoSuperCutUpTo)
    result.status = OracleStatus::BudgetExceeded;
  return result;
}

}  // namespace kappa1

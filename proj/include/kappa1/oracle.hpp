#pragma once

#include <cstdint>
#include <optional>

#include "kappa1/certificates.hpp"
#include "kappa1/graph.hpp"

namespace kappa1 {

struct OracleBudget {
  std::uint32_t max_cut_size = 8;
  std::uint64_t max_subset_count = 100'000'000;
};

enum class OracleStatus {
  Exact,            // minimum found; certificate attached
  NoSuperCutUpTo,   // every size level up to `value` completed with no hit
  BudgetExceeded,   // subset budget exhausted before any size level completed
};

// Ground truth by size-ordered subset enumeration. Enumeration order is
// fixed (sizes ascending, lexicographic within a size), so the first passing
// subset is the minimum and the certificate is deterministic. Levels whose
// subset count would blow the remaining budget are not started, which keeps
// the reported outcome independent of worker scheduling.
struct SuperOracleResult {
  OracleStatus status = OracleStatus::BudgetExceeded;
  std::uint32_t value = 0;  // kappa_1 when Exact; completed cap when NoSuperCutUpTo
  std::optional<SuperCutCertificate> certificate;
  std::uint64_t subsets_enumerated = 0;
};

struct KappaOracleResult {
  OracleStatus status = OracleStatus::BudgetExceeded;  // Exact or BudgetExceeded
  std::uint32_t value = 0;  // kappa when Exact; last completed level otherwise
  std::optional<CutCertificate> certificate;
  std::uint64_t subsets_enumerated = 0;
};

SuperOracleResult brute_force_super_connectivity(const Graph& g, const OracleBudget& budget,
                                                 unsigned workers = 0);

// Requires a connected, non-complete graph.
KappaOracleResult brute_force_vertex_connectivity(const Graph& g, const OracleBudget& budget,
                                                  unsigned workers = 0);

}  // namespace kappa1

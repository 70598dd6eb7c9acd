#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "kappa1/connectivity.hpp"
#include "kappa1/graph.hpp"
#include "kappa1/kneser.hpp"

namespace kappa1 {

enum class TripleKind { Triangle, Type1Path, Type2Path, Other };

const char* to_string(TripleKind kind);

struct TripleClass {
  TripleKind kind = TripleKind::Other;
  std::vector<int> shared_labels;  // 1 label for Type 1 ends, 2 for Type 2
  int middle_index = -1;           // position (0..2) of the path's middle vertex
  std::string diagnostic;          // set when kind == Other
};

// Classifies three distinct 3-label sets as a triangle (pairwise disjoint),
// an induced 2-edge path whose ends share one label (Type 1) or two labels
// (Type 2), or Other.
TripleClass classify_triple(const LabelSet& a, const LabelSet& b, const LabelSet& c);

// Exact count, over all 3-subsets of [1, n], of vertices sharing at least one
// label with each of the three triple vertices, the triple itself excluded.
std::uint64_t meeting_count(int n, const std::array<LabelSet, 3>& triple);

// 27 for triangles, 3n+3 for Type 1 paths, 6n-18 for Type 2 paths.
std::uint64_t claim_bound(const TripleClass& cls, int n);

// 2(C(n-k,k) - 1) - C(n-2k,k); the zero convention on the last term collapses
// the two branches (2k+1 <= n < 3k and n >= 3k) into one expression.
std::int64_t conjecture_value(int n, int k);

struct ResidualIdentity {
  std::int64_t lhs = 0;  // C(n,3) - conjecture_value(n,3)
  std::int64_t rhs = 0;  // 9n - 34
  bool equal = false;
};

ResidualIdentity residual_identity(int n);

struct ClaimReport {
  std::array<LabelSet, 3> triple;
  TripleClass cls;
  std::uint64_t exact_count = 0;
  std::uint64_t bound = 0;
  bool holds = false;  // exact_count <= bound
};

struct ClassSweepStats {
  TripleKind kind = TripleKind::Other;
  std::uint64_t examined = 0;
  std::uint64_t violations = 0;
  std::uint64_t max_count = 0;
};

struct ClaimSweepResult {
  int n = 0;
  std::vector<ClaimReport> canonical;     // the paper's representative triples
  std::vector<ClassSweepStats> sweep;     // present when a full sweep ran
  bool full_sweep = false;
};

// Reports for the canonical representative triples of each class present at
// this n, plus (for n <= 12, or when forced) an exhaustive sweep over every
// classified triple asserting the bound for each one.
ClaimSweepResult claim_sweep(int n, std::optional<bool> full = std::nullopt,
                             unsigned workers = 0);

enum class Verdict { Confirmed, UpperConfirmed, Refuted };

const char* to_string(Verdict verdict);

struct TheoremReport {
  int n = 0;
  std::int64_t expected = 0;  // conjecture_value(n, 3)
  SuperConnectivityResult result;
  Verdict verdict = Verdict::Refuted;
};

// Builds KG(n,3), runs the kappa_1 solver and compares with the closed form.
TheoremReport verify_theorem(int n, Strategy strategy = Strategy::Auto,
                             const OracleBudget& budget = {}, unsigned workers = 0,
                             const KneserOptions& options = {});

}  // namespace kappa1

#include "kappa1/analysis.hpp"

#include <algorithm>
#include <string>

#include "kappa1/error.hpp"
#include "kappa1/kneser.hpp"
#include "kappa1/parallel.hpp"

namespace kappa1 {

const char* to_string(TripleKind kind) {
  switch (kind) {
    case TripleKind::Triangle: return "triangle";
    case TripleKind::Type1Path: return "type1-path";
    case TripleKind::Type2Path: return "type2-path";
    case TripleKind::Other: return "other";
  }
  return "other";
}

const char* to_string(Verdict verdict) {
  switch (verdict) {
    case Verdict::Confirmed: return "confirmed";
    case Verdict::UpperConfirmed: return "upper-confirmed";
    case Verdict::Refuted: return "refuted";
  }
  return "refuted";
}

namespace {

void check_triple_member(const LabelSet& s) {
  if (s.size() != 3 || !s.valid(s.max_label()))
    fail(ErrorCode::BadArgument, "triple member " + to_string(s) + " is not a valid 3-subset");
}

}  // namespace

TripleClass classify_triple(const LabelSet& a, const LabelSet& b, const LabelSet& c) {
  check_triple_member(a);
  check_triple_member(b);
  check_triple_member(c);
  if (a == b || b == c || a == c)
    fail(ErrorCode::DuplicateVertex, "triple contains two equal label sets");

  const bool ab = a.disjoint(b);
  const bool bc = b.disjoint(c);
  const bool ac = a.disjoint(c);
  const int edge_count = int(ab) + int(bc) + int(ac);

  TripleClass cls;
  if (edge_count == 3) {
    cls.kind = TripleKind::Triangle;
    return cls;
  }
  if (edge_count < 2) {
    cls.kind = TripleKind::Other;
    cls.diagnostic = "triple induces fewer than 2 edges";
    return cls;
  }

  const LabelSet* end1;
  const LabelSet* end2;
  if (ab && ac) {
    cls.middle_index = 0;
    end1 = &b;
    end2 = &c;
  } else if (ab && bc) {
    cls.middle_index = 1;
    end1 = &a;
    end2 = &c;
  } else {
    cls.middle_index = 2;
    end1 = &a;
    end2 = &b;
  }
  cls.shared_labels = end1->shared_labels(*end2);
  switch (cls.shared_labels.size()) {
    case 1: cls.kind = TripleKind::Type1Path; break;
    case 2: cls.kind = TripleKind::Type2Path; break;
    default:
      // sharing 0 would make the ends adjacent (a triangle), 3 would make
      // them equal; neither can coexist with exactly 2 induced edges
      cls.kind = TripleKind::Other;
      cls.middle_index = -1;
      cls.shared_labels.clear();
      cls.diagnostic = "path ends share an impossible number of labels";
      break;
  }
  return cls;
}

std::uint64_t meeting_count(int n, const std::array<LabelSet, 3>& triple) {
  if (n > 64) fail(ErrorCode::BadArgument, "meeting_count supports n <= 64");
  std::uint64_t masks[3] = {0, 0, 0};
  for (int i = 0; i < 3; ++i) {
    check_triple_member(triple[i]);
    for (int l : triple[i].labels) {
      if (l > n)
        fail(ErrorCode::LabelOutOfRange,
             "label " + std::to_string(l) + " exceeds n = " + std::to_string(n));
      masks[i] |= std::uint64_t{1} << (l - 1);
    }
  }
  std::uint64_t count = 0;
  for (int x = 1; x <= n - 2; ++x) {
    for (int y = x + 1; y <= n - 1; ++y) {
      for (int z = y + 1; z <= n; ++z) {
        std::uint64_t m = (std::uint64_t{1} << (x - 1)) | (std::uint64_t{1} << (y - 1)) |
                          (std::uint64_t{1} << (z - 1));
        if ((m & masks[0]) && (m & masks[1]) && (m & masks[2]) && m != masks[0] &&
            m != masks[1] && m != masks[2])
          ++count;
      }
    }
  }
  return count;
}

std::uint64_t claim_bound(const TripleClass& cls, int n) {
  if (n < 7) fail(ErrorCode::DomainError, "claim bounds are stated for n >= 7");
  switch (cls.kind) {
    case TripleKind::Triangle: return 27;
    case TripleKind::Type1Path: return 3 * static_cast<std::uint64_t>(n) + 3;
    case TripleKind::Type2Path: return 6 * static_cast<std::uint64_t>(n) - 18;
    case TripleKind::Other: break;
  }
  fail(ErrorCode::UnclassifiedTriple, "no bound applies to an unclassified triple");
}

std::int64_t conjecture_value(int n, int k) {
  if (k < 1 || n < 2 * k + 1)
    fail(ErrorCode::DomainError, "formula needs n >= 2k+1 and k >= 1, got n=" +
                                     std::to_string(n) + " k=" + std::to_string(k));
  const auto inner = static_cast<std::int64_t>(binomial(n - k, k));
  const std::int64_t unified = 2 * (inner - 1) - static_cast<std::int64_t>(binomial(n - 2 * k, k));
  // the explicit two-branch form must agree (the zero convention makes the
  // 2k+1 <= n < 3k branch a special case)
  const std::int64_t branched =
      n < 3 * k ? 2 * (inner - 1)
                : 2 * (inner - 1) - static_cast<std::int64_t>(binomial(n - 2 * k, k));
  if (unified != branched)
    fail(ErrorCode::BadArgument, "formula branches disagree; binomial convention broken");
  return unified;
}

ResidualIdentity residual_identity(int n) {
  if (n < 9) fail(ErrorCode::DomainError, "the residual identity is stated for n >= 9");
  ResidualIdentity identity;
  identity.lhs = static_cast<std::int64_t>(binomial(n, 3)) - conjecture_value(n, 3);
  identity.rhs = 9 * static_cast<std::int64_t>(n) - 34;
  identity.equal = identity.lhs == identity.rhs;
  return identity;
}

namespace {

ClaimReport make_report(int n, std::array<LabelSet, 3> triple) {
  ClaimReport report;
  report.cls = classify_triple(triple[0], triple[1], triple[2]);
  report.triple = std::move(triple);
  report.exact_count = meeting_count(n, report.triple);
  report.bound = claim_bound(report.cls, n);
  report.holds = report.exact_count <= report.bound;
  return report;
}

std::size_t kind_slot(TripleKind kind) {
  switch (kind) {
    case TripleKind::Triangle: return 0;
    case TripleKind::Type1Path: return 1;
    case TripleKind::Type2Path: return 2;
    case TripleKind::Other: break;
  }
  return 3;
}

struct SweepTotals {
  // triangle, type1, type2
  std::uint64_t examined[3] = {0, 0, 0};
  std::uint64_t violations[3] = {0, 0, 0};
  std::uint64_t max_count[3] = {0, 0, 0};
};

SweepTotals merge(SweepTotals a, const SweepTotals& b) {
  for (int i = 0; i < 3; ++i) {
    a.examined[i] += b.examined[i];
    a.violations[i] += b.violations[i];
    a.max_count[i] = std::max(a.max_count[i], b.max_count[i]);
  }
  return a;
}

}  // namespace

ClaimSweepResult claim_sweep(int n, std::optional<bool> full, unsigned workers) {
  if (n < 7) fail(ErrorCode::DomainError, "claim sweeps are stated for n >= 7");
  ClaimSweepResult result;
  result.n = n;

  if (n >= 9)
    result.canonical.push_back(
        make_report(n, {LabelSet{{1, 2, 3}}, LabelSet{{4, 5, 6}}, LabelSet{{7, 8, 9}}}));
  if (n >= 8)
    result.canonical.push_back(
        make_report(n, {LabelSet{{1, 2, 3}}, LabelSet{{4, 5, 6}}, LabelSet{{1, 7, 8}}}));
  result.canonical.push_back(
      make_report(n, {LabelSet{{1, 2, 3}}, LabelSet{{4, 5, 6}}, LabelSet{{1, 2, 7}}}));

  result.full_sweep = full.value_or(n <= 12);
  if (!result.full_sweep) return result;

  // Sweep every vertex triple of KG(n,3) that classifies, using one bitset
  // intersection per triple: meets[v] = non-neighbors of v = vertices
  // sharing at least one label with v.
  const Graph g = kneser_graph(n, 3);
  const std::size_t v_count = g.vertex_count();
  std::vector<VertexSet> meets;
  meets.reserve(v_count);
  for (Vertex v = 0; v < v_count; ++v) meets.push_back(VertexSet::full(v_count) - g.neighbors(v));

  const std::uint64_t bounds[3] = {27, 3 * static_cast<std::uint64_t>(n) + 3,
                                   6 * static_cast<std::uint64_t>(n) - 18};

  SweepTotals totals = parallel_chunk_reduce<SweepTotals>(
      v_count, SweepTotals{},
      [&](std::uint64_t chunk) {
        SweepTotals local;
        const auto a = static_cast<Vertex>(chunk);
        for (Vertex b = a + 1; b < v_count; ++b) {
          const bool ab = g.adjacent(a, b);
          for (Vertex c = b + 1; c < v_count; ++c) {
            const bool bc = g.adjacent(b, c);
            const bool ac = g.adjacent(a, c);
            const int edges = int(ab) + int(bc) + int(ac);
            if (edges < 2) continue;
            std::size_t slot;
            if (edges == 3) {
              slot = 0;
            } else {
              // ends of the induced path = the non-adjacent pair
              Vertex e1 = !bc ? b : a;
              Vertex e2 = !ab ? b : c;
              slot = g.label(e1).shared_count(g.label(e2));
              if (slot != 1 && slot != 2) continue;  // unreachable for distinct 3-sets
            }
            VertexSet meet = meets[a] & meets[b];
            meet &= meets[c];
            std::uint64_t count = meet.count();
            if (meet.test(a)) --count;
            if (meet.test(b)) --count;
            if (meet.test(c)) --count;
            local.examined[slot] += 1;
            local.max_count[slot] = std::max(local.max_count[slot], count);
            if (count > bounds[slot]) local.violations[slot] += 1;
          }
        }
        return local;
      },
      [](SweepTotals acc, SweepTotals item) { return merge(std::move(acc), item); },
      workers);

  for (TripleKind kind : {TripleKind::Triangle, TripleKind::Type1Path, TripleKind::Type2Path}) {
    ClassSweepStats stats;
    stats.kind = kind;
    stats.examined = totals.examined[kind_slot(kind)];
    stats.violations = totals.violations[kind_slot(kind)];
    stats.max_count = totals.max_count[kind_slot(kind)];
    result.sweep.push_back(stats);
  }
  return result;
}

TheoremReport verify_theorem(int n, Strategy strategy, const OracleBudget& budget,
                             unsigned workers, const KneserOptions& options) {
  TheoremReport report;
  report.n = n;
  report.expected = conjecture_value(n, 3);  // throws DomainError below n = 7
  const Graph g = kneser_graph(n, 3, options);
  report.result = super_connectivity(g, strategy, budget, /*assume_transitive=*/false, workers);

  const auto& r = report.result;
  const auto expected = report.expected;
  if (r.status == SuperStatus::Exact) {
    report.verdict = static_cast<std::int64_t>(*r.lower_bound) == expected ? Verdict::Confirmed
                                                                           : Verdict::Refuted;
  } else if (r.status == SuperStatus::Interval) {
    if (r.lower_bound && static_cast<std::int64_t>(*r.lower_bound) > expected)
      report.verdict = Verdict::Refuted;
    else if (r.upper_bound && static_cast<std::int64_t>(*r.upper_bound) == expected)
      report.verdict = Verdict::UpperConfirmed;
    else
      report.verdict = Verdict::Refuted;  // a certified smaller super cut exists
  } else {
    report.verdict = Verdict::Refuted;  // formula promises a finite value
  }
  return report;
}

}  // namespace kappa1

// kappa1: vertex connectivity and super-connectivity toolkit.
//
// Exit codes: 0 success / decided, 1 verification mismatch (refuted),
// 2 bad input, 3 undecided (open interval or exhausted budget).

#include <cstdio>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "kappa1/analysis.hpp"
#include "kappa1/connectivity.hpp"
#include "kappa1/error.hpp"
#include "kappa1/graph_io.hpp"
#include "kappa1/kneser.hpp"
#include "kappa1/oracle.hpp"
#include "kappa1/parallel.hpp"
#include "kappa1/report.hpp"

namespace {

using namespace kappa1;
using nlohmann::json;

constexpr int kOk = 0;
constexpr int kRefuted = 1;
constexpr int kBadInput = 2;
constexpr int kUndecided = 3;

struct CommonFlags {
  bool json = false;
  unsigned threads = 0;
  std::uint64_t budget = OracleBudget{}.max_subset_count;
  std::uint32_t max_cut_size = OracleBudget{}.max_cut_size;
  std::string strategy = "auto";
  bool assume_transitive = false;
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_solver_flags = true) {
  cmd->add_flag("--json", flags.json, "emit a JSON report instead of text");
  cmd->add_option("--threads", flags.threads,
                  "worker count (default: KAPPA1_THREADS, then hardware)");
  if (with_solver_flags) {
    cmd->add_option("--budget", flags.budget, "oracle subset budget");
    cmd->add_option("--max-cut-size", flags.max_cut_size, "oracle size cap");
    cmd->add_option("--strategy", flags.strategy, "auto|flow|oracle")
        ->check(CLI::IsMember({"auto", "flow", "oracle"}));
    cmd->add_flag("--assume-transitive", flags.assume_transitive,
                  "enable symmetry reductions on unlabeled input");
  }
}

Strategy parse_strategy(const std::string& name) {
  if (name == "flow") return Strategy::FlowOnly;
  if (name == "oracle") return Strategy::OracleOnly;
  return Strategy::Auto;
}

OracleBudget make_budget(const CommonFlags& flags) {
  return OracleBudget{flags.max_cut_size, flags.budget};
}

void emit(const json& doc) { std::cout << doc.dump(2) << "\n"; }

std::string set_to_text(const VertexSet& set, const Graph& g) {
  std::string out;
  set.for_each([&](Vertex v) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
    if (g.has_labels()) out += to_string(g.label(v));
  });
  return out;
}

int cmd_gen(int n, int k, const std::string& out_path, const CommonFlags& flags) {
  Graph g = kneser_graph(n, k);
  save_graph_file(g, out_path);
  if (flags.json) {
    emit(report_envelope("gen", json{{"n", n},
                                     {"k", k},
                                     {"vertices", g.vertex_count()},
                                     {"edges", g.edge_count()},
                                     {"path", out_path}}));
  } else {
    std::cout << "wrote KG(" << n << "," << k << "): " << g.vertex_count() << " vertices, "
              << g.edge_count() << " edges -> " << out_path << "\n";
  }
  return kOk;
}

int cmd_kappa(const std::string& path, const CommonFlags& flags) {
  Graph g = load_graph_file(path);
  bool symmetry = g.kneser_params().has_value() || flags.assume_transitive;
  auto result = vertex_connectivity(g, symmetry, flags.threads);
  if (flags.json) {
    emit(report_envelope("kappa", to_json(result, g)));
    return kOk;
  }
  if (result.complete) {
    std::cout << "kappa = " << result.kappa << " (complete graph; no vertex cut)\n";
  } else {
    std::cout << "kappa = " << result.kappa << "\n";
    std::cout << "cut: " << set_to_text(result.witness->cut, g) << "\n";
  }
  return kOk;
}

int cmd_kappa1(const std::string& path, const CommonFlags& flags) {
  Graph g = load_graph_file(path);
  auto result = super_connectivity(g, parse_strategy(flags.strategy), make_budget(flags),
                                   flags.assume_transitive, flags.threads);
  if (flags.json) emit(report_envelope("kappa1", to_json(result, g)));
  switch (result.status) {
    case SuperStatus::Exact:
      if (!flags.json) {
        std::cout << "kappa1 = " << *result.lower_bound << " (exact)\n";
        std::cout << "cut: " << set_to_text(result.upper_witness->cut, g) << "\n";
      }
      return kOk;
    case SuperStatus::NoSuperCut:
      if (!flags.json) std::cout << "no super cut exists\n";
      return kOk;
    case SuperStatus::Interval:
      if (!flags.json) {
        std::cout << "kappa1 in [" << *result.lower_bound << ", "
                  << (result.upper_bound ? std::to_string(*result.upper_bound) : "?")
                  << "] (undecided)\n";
      }
      return kUndecided;
    case SuperStatus::NotApplicable: break;
  }
  return kUndecided;
}

int cmd_oracle(const std::string& path, bool kappa_mode, const CommonFlags& flags) {
  Graph g = load_graph_file(path);
  OracleBudget budget = make_budget(flags);
  if (kappa_mode) {
    auto result = brute_force_vertex_connectivity(g, budget, flags.threads);
    if (flags.json) {
      emit(report_envelope("oracle-kappa", to_json(result, g)));
    } else if (result.status == OracleStatus::Exact) {
      std::cout << "kappa = " << result.value << " (" << result.subsets_enumerated
                << " subsets)\n";
    } else {
      std::cout << "undecided: kappa > " << result.value << " (budget exhausted)\n";
    }
    return result.status == OracleStatus::Exact ? kOk : kUndecided;
  }
  auto result = brute_force_super_connectivity(g, budget, flags.threads);
  if (flags.json) emit(report_envelope("oracle-kappa1", to_json(result, g)));
  switch (result.status) {
    case OracleStatus::Exact:
      if (!flags.json) {
        std::cout << "kappa1 = " << result.value << " (" << result.subsets_enumerated
                  << " subsets)\n";
        std::cout << "cut: " << set_to_text(result.certificate->cut, g) << "\n";
      }
      return kOk;
    case OracleStatus::NoSuperCutUpTo:
      if (!flags.json)
        std::cout << "no super cut of size <= " << result.value << " ("
                  << result.subsets_enumerated << " subsets)\n";
      return kOk;
    case OracleStatus::BudgetExceeded: break;
  }
  if (!flags.json) std::cout << "undecided: budget exhausted before any size level completed\n";
  return kUndecided;
}

int cmd_claims(int n, std::optional<bool> full, const CommonFlags& flags) {
  auto result = claim_sweep(n, full, flags.threads);
  if (flags.json) {
    emit(report_envelope("claims", to_json(result)));
  } else {
    for (const auto& report : result.canonical)
      std::cout << to_string(report.cls.kind) << ": count=" << report.exact_count
                << " bound=" << report.bound << (report.holds ? " ok" : " VIOLATION") << "\n";
    if (result.full_sweep)
      for (const auto& stats : result.sweep)
        std::cout << "sweep " << to_string(stats.kind) << ": examined=" << stats.examined
                  << " max=" << stats.max_count << " violations=" << stats.violations << "\n";
  }
  bool ok = true;
  for (const auto& report : result.canonical) ok = ok && report.holds;
  for (const auto& stats : result.sweep) ok = ok && stats.violations == 0;
  return ok ? kOk : kRefuted;
}

int cmd_verify(int n_min, int n_max, const CommonFlags& flags) {
  if (n_min > n_max) fail(ErrorCode::BadArgument, "empty range");
  json reports = json::array();
  int exit_code = kOk;
  for (int n = n_min; n <= n_max; ++n) {
    auto report = verify_theorem(n, parse_strategy(flags.strategy), make_budget(flags),
                                 flags.threads);
    if (flags.json) {
      reports.push_back(to_json(report));
    } else {
      std::cout << "n=" << n << ": expected " << report.expected << ", verdict "
                << to_string(report.verdict);
      if (report.result.lower_bound)
        std::cout << " [" << *report.result.lower_bound << ", "
                  << (report.result.upper_bound ? std::to_string(*report.result.upper_bound)
                                                : "?")
                  << "]";
      std::cout << "\n";
    }
    if (report.verdict == Verdict::Refuted)
      exit_code = kRefuted;
    else if (report.verdict == Verdict::UpperConfirmed && exit_code == kOk)
      exit_code = kUndecided;
  }
  if (flags.json) emit(report_envelope("verify", reports));
  return exit_code;
}

int cmd_formula(int n, int k, const CommonFlags& flags) {
  std::int64_t value = conjecture_value(n, k);
  json doc{{"n", n}, {"k", k}, {"value", value}};
  if (k == 3 && n >= 9) doc["residual_identity"] = to_json(residual_identity(n));
  if (flags.json) {
    emit(report_envelope("formula", doc));
  } else {
    std::cout << "kappa1(KG(" << n << "," << k << ")) = " << value << " (conjectured formula)\n";
    if (k == 3 && n >= 9) {
      auto identity = residual_identity(n);
      std::cout << "residual: C(n,3) - value = " << identity.lhs << ", 9n-34 = " << identity.rhs
                << (identity.equal ? " (equal)" : " (DIFFER)") << "\n";
    }
  }
  return kOk;
}

int cmd_export(const std::string& path, const std::string& out_path, const CommonFlags& flags) {
  Graph g = load_graph_file(path);
  save_text_file(export_dot(g), out_path);
  if (flags.json) {
    emit(report_envelope("export", json{{"vertices", g.vertex_count()},
                                        {"edges", g.edge_count()},
                                        {"path", out_path}}));
  } else {
    std::cout << "wrote DOT (" << g.vertex_count() << " vertices) -> " << out_path << "\n";
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"vertex connectivity and super-connectivity with certificates"};
  app.require_subcommand(1);

  CommonFlags flags;

  int gen_n = 0, gen_k = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "generate a Kneser graph file");
  gen->add_option("n", gen_n, "label universe size")->required();
  gen->add_option("k", gen_k, "subset size")->required();
  gen->add_option("out", gen_out, "output path")->required();
  add_common(gen, flags, false);

  std::string kappa_path;
  auto* kappa = app.add_subcommand("kappa", "vertex connectivity of a graph file");
  kappa->add_option("graph", kappa_path, "graph file")->required();
  add_common(kappa, flags);

  std::string kappa1_path;
  auto* kappa1 = app.add_subcommand("kappa1", "super-connectivity with certificates");
  kappa1->add_option("graph", kappa1_path, "graph file")->required();
  add_common(kappa1, flags);

  std::string oracle_path;
  bool oracle_kappa = false;
  auto* oracle = app.add_subcommand("oracle", "brute-force ground truth (small graphs)");
  oracle->add_option("graph", oracle_path, "graph file")->required();
  oracle->add_flag("--kappa", oracle_kappa, "plain connectivity instead of kappa1");
  add_common(oracle, flags);

  int claims_n = 0;
  bool claims_full = false, claims_quick = false;
  auto* claims = app.add_subcommand("claims", "counting-claim bounds for KG(n,3)");
  claims->add_option("n", claims_n, "label universe size")->required();
  claims->add_flag("--full", claims_full, "force the exhaustive triple sweep");
  claims->add_flag("--quick", claims_quick, "canonical triples only");
  add_common(claims, flags);

  int verify_min = 0, verify_max = 0;
  auto* verify = app.add_subcommand("verify", "check the kappa1 formula on KG(n,3)");
  verify->add_option("n_min", verify_min, "first n")->required();
  verify->add_option("n_max", verify_max, "last n")->required();
  add_common(verify, flags);

  int formula_n = 0, formula_k = 0;
  auto* formula = app.add_subcommand("formula", "closed-form kappa1 value");
  formula->add_option("n", formula_n, "label universe size")->required();
  formula->add_option("k", formula_k, "subset size")->required();
  add_common(formula, flags, false);

  std::string export_path, export_out;
  auto* exp = app.add_subcommand("export", "write a DOT rendering of a graph file");
  exp->add_option("graph", export_path, "graph file")->required();
  exp->add_option("out", export_out, "output path")->required();
  add_common(exp, flags, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kBadInput;
  }

  try {
    if (gen->parsed()) return cmd_gen(gen_n, gen_k, gen_out, flags);
    if (kappa->parsed()) return cmd_kappa(kappa_path, flags);
    if (kappa1->parsed()) return cmd_kappa1(kappa1_path, flags);
    if (oracle->parsed()) return cmd_oracle(oracle_path, oracle_kappa, flags);
    if (claims->parsed()) {
      std::optional<bool> full;
      if (claims_full) full = true;
      if (claims_quick) full = false;
      return cmd_claims(claims_n, full, flags);
    }
    if (verify->parsed()) return cmd_verify(verify_min, verify_max, flags);
    if (formula->parsed()) return cmd_formula(formula_n, formula_k, flags);
    if (exp->parsed()) return cmd_export(export_path, export_out, flags);
  } catch (const kappa1::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    switch (e.code()) {
      case ErrorCode::Undecided:
      case ErrorCode::BudgetExceeded: return kUndecided;
      default: return kBadInput;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadInput;
  }
  return kBadInput;
}

// pgroup-audit: analyze finite p-groups given by weighted power-commutator
// presentations, audit the central-automorphism order conditions over the
// built-in corpus and imported presentation files, and cross-check the hom
// formulas against brute-force automorphism enumeration.

#include <CLI11.hpp>
#include <iostream>
#include <string>
#include <vector>

#include "pgroup/audit.hpp"
#include "pgroup/corpus.hpp"

namespace {

void add_budget_flags(CLI::App* cmd, pgroup::RunOptions& opts) {
  cmd->add_option("--budget-homs", opts.analysis.budget_homs,
                  "largest homomorphism set the brute-force enumerator will "
                  "materialize (default 10000)");
  cmd->add_option("--budget-subgroups", opts.analysis.budget_subgroups,
                  "subgroup enumeration budget for the direct-factor search "
                  "(default 100000)");
  cmd->add_option("--budget-order", opts.analysis.max_table_order,
                  "largest group order for which a multiplication table is "
                  "built (default 4096)");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Finite p-group central-automorphism analysis and audit tool.\n"
      "Exit codes: 0 ok, 1 usage, 2 file not found, 3 parse error,\n"
      "4 consistency failure, 5 theorem/lemma violation, 6 oracle mismatch."};
  app.require_subcommand(1);

  pgroup::RunOptions opts;
  std::string target;
  std::vector<std::string> paths;
  bool list_corpus = false;

  CLI::App* analyze = app.add_subcommand(
      "analyze", "full report for one corpus entry or presentation file");
  analyze->add_option("target", target,
                      "corpus entry name or path to a presentation file");
  analyze->add_flag("--json", opts.json, "machine-readable JSON output");
  analyze->add_flag("--oracle", opts.analysis.run_oracle,
                    "add brute-force |Autcent_Z| / |Autcent| columns");
  analyze->add_flag("--list", list_corpus, "list corpus entries and exit");
  add_budget_flags(analyze, opts);

  CLI::App* audit = app.add_subcommand(
      "audit",
      "theorem/lemma battery over the corpus plus optional imported files "
      "or directories");
  audit->add_option("paths", paths, "presentation files or directories");
  audit->add_flag("--json", opts.json, "one JSON object per group");
  audit->add_flag("--corpus-only", opts.corpus_only, "ignore import paths");
  add_budget_flags(audit, opts);

  CLI::App* verify = app.add_subcommand(
      "verify", "formula vs. brute-force counts for every loaded group");
  verify->add_option("paths", paths, "presentation files or directories");
  verify->add_flag("--corpus-only", opts.corpus_only, "ignore import paths");
  add_budget_flags(verify, opts);

  CLI::App* consistency = app.add_subcommand(
      "consistency", "presentation consistency checks only");
  consistency->add_option("paths", paths,
                          "presentation files or directories");
  consistency->add_flag("--corpus-only", opts.corpus_only,
                        "ignore import paths");
  add_budget_flags(consistency, opts);

  CLI11_PARSE(app, argc, argv);

  try {
    if (analyze->parsed()) {
      if (list_corpus) {
        for (const auto& e : pgroup::builtin_corpus())
          std::cout << e.name << "  (" << e.provenance << ")\n";
        return pgroup::kExitOk;
      }
      if (target.empty()) {
        std::cerr << "analyze: missing target (corpus name or file)\n";
        return pgroup::kExitUsage;
      }
      return pgroup::run_analyze(target, opts, std::cout, std::cerr);
    }
    if (audit->parsed())
      return pgroup::run_audit(paths, opts, std::cout, std::cerr);
    if (verify->parsed())
      return pgroup::run_verify(paths, opts, std::cout, std::cerr);
    if (consistency->parsed())
      return pgroup::run_consistency(paths, opts, std::cout, std::cerr);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return pgroup::kExitUsage;
  }
  return pgroup::kExitUsage;
}

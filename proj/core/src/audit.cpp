#include "pgroup/audit.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>

#include "pgroup/parser.hpp"
#include "pgroup/report.hpp"

namespace pgroup {

namespace {

namespace fs = std::filesystem;

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void bump(int& worst, int code) {
  if (worst == kExitOk) worst = code;
}

std::shared_ptr<const FiniteGroupView> build_view(
    const LoadedGroup& g, const AnalysisOptions& opts) {
  return std::make_shared<const FiniteGroupView>(
      FiniteGroupView::from_presentation(g.presentation, opts.max_table_order));
}

}  // namespace

LoadResult load_inputs(const std::vector<std::string>& paths,
                       bool include_corpus, bool check_consistency) {
  LoadResult result;

  if (include_corpus)
    for (const auto& e : builtin_corpus())
      result.groups.push_back({e.name, "corpus", e.presentation});

  std::vector<fs::path> files;
  for (const auto& p : paths) {
    fs::path path(p);
    std::error_code ec;
    if (fs::is_directory(path, ec)) {
      std::vector<fs::path> listing;
      for (const auto& entry : fs::directory_iterator(path, ec))
        if (entry.is_regular_file()) listing.push_back(entry.path());
      std::sort(listing.begin(), listing.end());
      files.insert(files.end(), listing.begin(), listing.end());
    } else if (fs::is_regular_file(path, ec)) {
      files.push_back(path);
    } else {
      result.errors.push_back("not found: " + p);
      bump(result.worst_exit, kExitFileNotFound);
    }
  }

  for (const auto& f : files) {
    try {
      std::string text = read_file(f);
      auto groups = parse_presentations(text, f.string());
      for (auto& g : groups) {
        if (check_consistency) {
          auto report = g.check_consistency();
          if (!report.passed) {
            result.errors.push_back(
                f.string() + ": group '" + g.name() +
                "' fails consistency: " + report.failures.front());
            bump(result.worst_exit, kExitConsistencyError);
            continue;
          }
        }
        result.groups.push_back(
            {g.name(), f.string(),
             std::make_shared<const PcPresentation>(std::move(g))});
      }
    } catch (const ParseError& e) {
      result.errors.push_back(e.what());
      bump(result.worst_exit, kExitParseError);
    } catch (const Error& e) {
      result.errors.push_back(e.what());
      bump(result.worst_exit, kExitParseError);
    }
  }

  // Deterministic aggregation order regardless of input arrangement.
  std::stable_sort(result.groups.begin(), result.groups.end(),
                   [](const LoadedGroup& a, const LoadedGroup& b) {
                     return a.name < b.name;
                   });
  return result;
}

int run_analyze(const std::string& target, const RunOptions& opts,
                std::ostream& out, std::ostream& err) {
  std::vector<LoadedGroup> groups;
  if (const CorpusEntry* e = find_corpus_entry(target)) {
    groups.push_back({e->name, "corpus", e->presentation});
  } else {
    LoadResult loaded = load_inputs({target}, false, false);
    if (!loaded.errors.empty()) {
      for (const auto& d : loaded.errors) err << d << "\n";
      return loaded.worst_exit;
    }
    groups = std::move(loaded.groups);
  }

  for (const auto& g : groups) {
    auto report = g.presentation->check_consistency();
    if (!report.passed) {
      err << "group '" << g.name << "' fails its consistency check:\n";
      for (const auto& f : report.failures) err << "  " << f << "\n";
      return kExitConsistencyError;
    }
    try {
      auto view = build_view(g, opts.analysis);
      AnalysisReport r = analyze_group(view, opts.analysis);
      out << (opts.json ? render_json(r) : render_text(r)) << "\n";
    } catch (const Error& e) {
      err << "group '" << g.name << "': " << e.what() << "\n";
      return kExitUsage;
    }
  }
  return kExitOk;
}

namespace {

struct StatementTally {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::uint64_t unknown = 0;
  std::uint64_t not_applicable = 0;

  void add(bool applicable, Verdict holds) {
    if (!applicable) {
      ++not_applicable;
      return;
    }
    if (holds == Verdict::True) ++pass;
    else if (holds == Verdict::False) ++fail;
    else ++unknown;
  }
};

}  // namespace

int run_audit(const std::vector<std::string>& paths, const RunOptions& opts,
              std::ostream& out, std::ostream& err) {
  LoadResult loaded =
      load_inputs(opts.corpus_only ? std::vector<std::string>{} : paths, true,
                  true);
  for (const auto& d : loaded.errors) err << d << "\n";

  AnalysisOptions analysis = opts.analysis;
  analysis.run_oracle = true;  // the audit wants ground truth when affordable

  int exit_code = loaded.worst_exit;
  std::map<std::string, StatementTally> tallies;
  std::uint64_t analyzed = 0;
  std::uint64_t abelian_skipped = 0;

  for (const auto& g : loaded.groups) {
    AnalysisReport r;
    try {
      auto view = build_view(g, analysis);
      r = analyze_group(view, analysis);
    } catch (const Error& e) {
      err << "group '" << g.name << "': " << e.what() << "\n";
      bump(exit_code, kExitUsage);
      continue;
    }
    ++analyzed;
    if (r.abelian) {
      ++abelian_skipped;
      if (opts.json) out << render_json(r) << "\n";
      continue;
    }

    tallies["theorem_" + r.theorem.regime].add(
        r.theorem.expected != Verdict::Unknown, r.theorem.consistent);
    bool theorem_violation = r.theorem.consistent == Verdict::False;
    bool lemma_violation = false;
    for (const auto& l : r.lemmas) {
      tallies["lemma_" + l.key].add(l.applicable, l.holds);
      if (l.applicable && l.holds == Verdict::False) lemma_violation = true;
    }

    if (opts.json) {
      out << render_json(r) << "\n";
    } else if (theorem_violation || lemma_violation) {
      out << "VIOLATION in group " << g.name << ":\n" << render_text(r);
    }
    if (theorem_violation || lemma_violation)
      bump(exit_code, kExitTheoremViolation);
  }

  if (!opts.json) {
    out << "audit: " << analyzed << " group(s), " << abelian_skipped
        << " abelian (condition not applicable)\n";
    for (const auto& [key, t] : tallies) {
      out << "  " << key;
      for (std::size_t i = key.size(); i < 24; ++i) out << ' ';
      out << "pass " << t.pass << ", fail " << t.fail << ", unknown "
          << t.unknown << ", n/a " << t.not_applicable << "\n";
    }
    out << (exit_code == kExitOk ? "audit: PASS\n" : "audit: FAIL\n");
  }
  return exit_code;
}

int run_verify(const std::vector<std::string>& paths, const RunOptions& opts,
               std::ostream& out, std::ostream& err) {
  LoadResult loaded =
      load_inputs(opts.corpus_only ? std::vector<std::string>{} : paths, true,
                  true);
  for (const auto& d : loaded.errors) err << d << "\n";

  AnalysisOptions analysis = opts.analysis;
  analysis.run_oracle = true;

  int exit_code = loaded.worst_exit;
  std::uint64_t mismatches = 0;
  std::uint64_t skipped = 0;

  for (const auto& g : loaded.groups) {
    AnalysisReport r;
    try {
      auto view = build_view(g, analysis);
      r = analyze_group(view, analysis);
    } catch (const Error& e) {
      err << "group '" << g.name << "': " << e.what() << "\n";
      bump(exit_code, kExitUsage);
      continue;
    }
    if (r.abelian) {
      out << g.name << ": skipped (abelian; the formulas require a non-abelian "
             "group)\n";
      ++skipped;
      continue;
    }
    if (!r.autcentz_oracle) {
      out << g.name << ": skipped (" << r.oracle_note << ")\n";
      ++skipped;
      continue;
    }

    bool ok_z = *r.autcentz_oracle == r.autcentz_formula;
    out << g.name << ": |Autcent_Z| formula " << r.autcentz_formula
        << " / oracle " << *r.autcentz_oracle << (ok_z ? "" : "  MISMATCH");
    if (!ok_z) ++mismatches;

    if (r.autcent_formula_valid == Verdict::True) {
      bool ok_c = *r.autcent_oracle == r.autcent_formula;
      out << "; |Autcent| formula " << r.autcent_formula << " / oracle "
          << *r.autcent_oracle << (ok_c ? "" : "  MISMATCH");
      if (!ok_c) ++mismatches;
    } else {
      out << "; |Autcent| oracle " << *r.autcent_oracle
          << " (formula not asserted: purity "
          << (r.purity.verdict == Purity::FactorFound ? "factor found"
                                                      : "inconclusive")
          << ")";
    }
    if (r.inner_center_embeds && !*r.inner_center_embeds) {
      out << "; inner-center embedding FAILED";
      ++mismatches;
    }
    out << "\n";
  }

  out << "verify: " << mismatches << " mismatch(es), " << skipped
      << " skipped\n";
  if (mismatches > 0) bump(exit_code, kExitOracleMismatch);
  return exit_code;
}

int run_consistency(const std::vector<std::string>& paths,
                    const RunOptions& opts, std::ostream& out,
                    std::ostream& err) {
  LoadResult loaded =
      load_inputs(opts.corpus_only ? std::vector<std::string>{} : paths, true,
                  false);
  for (const auto& d : loaded.errors) err << d << "\n";

  int exit_code = loaded.worst_exit;
  for (const auto& g : loaded.groups) {
    auto report = g.presentation->check_consistency();
    out << g.name << ": "
        << (report.passed ? "pass, order " + std::to_string(report.closure_size)
                          : "FAIL")
        << "\n";
    if (!report.passed) {
      for (const auto& f : report.failures) out << "  " << f << "\n";
      bump(exit_code, kExitConsistencyError);
    }
  }
  return exit_code;
}

}  // namespace pgroup

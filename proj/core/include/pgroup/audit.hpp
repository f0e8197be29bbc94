#ifndef PGROUP_AUDIT_HPP
#define PGROUP_AUDIT_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "pgroup/analysis.hpp"
#include "pgroup/corpus.hpp"

namespace pgroup {

/// Exit codes shared by the library drivers and the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitFileNotFound = 2,
  kExitParseError = 3,
  kExitConsistencyError = 4,
  kExitTheoremViolation = 5,
  kExitOracleMismatch = 6,
};

struct RunOptions {
  AnalysisOptions analysis;
  bool json = false;
  bool corpus_only = false;  // ignore import paths, audit the corpus alone
};

/// Resolves inputs for a batch run: each path may be a presentation file or a
/// directory of presentation files (scanned in sorted order). Parse or
/// consistency failures become diagnostics; surviving groups are returned
/// sorted by name.
struct LoadedGroup {
  std::string name;
  std::string source;  // "corpus" or the file path
  std::shared_ptr<const PcPresentation> presentation;
};

struct LoadResult {
  std::vector<LoadedGroup> groups;
  std::vector<std::string> errors;   // per-file diagnostics
  int worst_exit = kExitOk;
};

LoadResult load_inputs(const std::vector<std::string>& paths,
                       bool include_corpus, bool check_consistency);

/// `analyze`: full report for one corpus entry or file. Returns an exit code
/// and writes the rendered report(s) or the diagnostic to the streams.
int run_analyze(const std::string& target, const RunOptions& opts,
                std::ostream& out, std::ostream& err);

/// `audit`: theorem and lemma battery over the corpus and any imports;
/// nonzero exit iff a theorem violation or lemma counterexample is found.
int run_audit(const std::vector<std::string>& paths, const RunOptions& opts,
              std::ostream& out, std::ostream& err);

/// `verify`: formula vs. brute-force counts; nonzero exit on any mismatch.
int run_verify(const std::vector<std::string>& paths, const RunOptions& opts,
               std::ostream& out, std::ostream& err);

/// `consistency`: presentation checks only.
int run_consistency(const std::vector<std::string>& paths,
                    const RunOptions& opts, std::ostream& out,
                    std::ostream& err);

}  // namespace pgroup

#endif  // PGROUP_AUDIT_HPP

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace nm {

enum class OnMismatch { Fail, FlagDiscrepancy };

struct CheckResult {
  bool ok = false;
  std::string detail;
};

struct CorpusEntry {
  std::string id;
  std::string provenance;
  std::string assertion;
  OnMismatch status_on_mismatch = OnMismatch::Fail;
  std::function<CheckResult()> run;
};

enum class Outcome { Pass, Fail, Discrepancy, Error };

struct CorpusResult {
  std::string id;
  Outcome outcome = Outcome::Fail;
  std::string detail;
};

std::string outcome_name(Outcome o);

/// Every entry, sorted by id.
const std::vector<CorpusEntry>& corpus();

/// Runs entries whose id matches the shell-style glob (all when empty).
std::vector<CorpusResult> run_corpus(const std::optional<std::string>& glob = std::nullopt);
std::string format_corpus(const std::vector<CorpusResult>& results);
bool corpus_passed(const std::vector<CorpusResult>& results);

}  // namespace nm

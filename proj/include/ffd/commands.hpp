#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "ffd/report.hpp"
#include "ffd/rng.hpp"

namespace ffd::cli {

enum ExitCode : int { kFree = 0, kError = 1, kNonFree = 2, kUndecided = 3 };

int exit_code_for(Verdict v);

/// Entry point shared by the executable and the tests; args exclude the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct CampaignConfig {
  std::vector<int> ms;
  int count = 200;
  std::uint64_t seed = 1;
  double tol = kPhaseTol;
  /// Extra product-notation words (sin angles) appended to the matching m.
  std::vector<std::string> include_words;
};

struct CampaignSample {
  int m;
  std::size_t index;
  std::string word;  // product notation with angles
  Verdict verdict;
  int n_distinct;
  int n_distinct_diffs;
};

struct CampaignSummary {
  std::vector<CampaignSample> samples;
  std::vector<CampaignSample> counterexamples;
};

/// Random G words over generators 1..m: every generator at least once, length m..2m.
std::vector<int> random_covering_word(int m, Rng& rng);

CampaignSummary run_campaign(const CampaignConfig& cfg);
json to_json(const CampaignSummary& s, const CampaignConfig& cfg);

struct GoldenResult {
  std::string name;
  bool pass;
  json detail;
};

/// The published numerical experiments; phase_tol <= 0 keeps the per-row rounding tolerance.
std::vector<GoldenResult> reproduce_appendix_b(double phase_tol = 0);

}  // namespace ffd::cli

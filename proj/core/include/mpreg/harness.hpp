#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mpreg/bundle.hpp"
#include "mpreg/splitting.hpp"

namespace mpreg {

struct EnumerationConfig {
  std::vector<Space> spaces;
  int degree_lo = -2;
  int degree_hi = 2;
  bool cotangent = false;
  int cotangent_lo = -1;
  int cotangent_hi = 2;
  int max_summands = 2;
  std::vector<TheoremId> theorems;
  int jobs = 1;
  /// Enumerate only the extremal-summand menu bundles (one per corner type).
  bool menu_only = false;
  int witness_samples = 5;
  /// Run the ACM closed-form and regularity-comparison cross-checks.
  bool findings = true;
};

/// Key-value text, one "key = value" per line, '#' comments. Keys: spaces, degrees,
/// cotangent, cotangent_twists, max_summands, theorems, jobs, menu_only,
/// witness_samples, findings. Throws ParseError.
EnumerationConfig parse_config(std::string_view text);

/// All summands over the configured atom ranges, sorted and unique.
std::vector<BoxSummand> enumerate_summands(const Space& space, const EnumerationConfig& config);
/// Multisets of 1..max_summands summands; canonical and pairwise distinct.
std::vector<Bundle> enumerate_bundles(const Space& space, const EnumerationConfig& config);
/// One bundle per corner type of the space.
std::vector<Bundle> menu_bundles(const Space& space);
/// Total number of bundles the config enumerates, computed without enumerating.
unsigned long long enumeration_count(const EnumerationConfig& config);

struct TheoremStats {
  long long applicable = 0;
  long long not_applicable = 0;
  long long consistent = 0;
  long long inconsistent = 0;
  long long detector_disagreements = 0;
};

struct VerdictSample {
  std::string space;
  std::string bundle;
  TheoremVerdict verdict;
};

struct AcmCheck {
  std::string space;
  long long checked = 0;
  /// Brute force vs the closed form; must stay empty.
  std::vector<std::vector<int>> closed_form_mismatches;
  /// Brute force vs the printed s = 2 inequality (informational).
  long long printed_rule_disagreements = 0;
  std::vector<std::vector<int>> printed_rule_samples;
};

struct ComparisonCheck {
  std::string space;
  long long bundles = 0;
  /// HW-regular at p but not regular at p, over a grid of p.
  long long hw_implies_paper_violations = 0;
  /// Regular at p + (-m+1, -n+1) but not HW-regular at p.
  long long literal_shift_violations = 0;
  /// Regular at p + (-n+1, -m+1) but not HW-regular at p.
  long long swapped_shift_violations = 0;
};

struct RunReport {
  unsigned long long bundles = 0;
  std::vector<TheoremId> theorems;
  std::map<TheoremId, TheoremStats> stats;
  std::vector<VerdictSample> inconsistent_samples;
  std::vector<VerdictSample> detector_samples;
  std::vector<AcmCheck> acm;
  std::vector<ComparisonCheck> comparison;
  double seconds = 0.0;

  long long inconsistent_total() const;
  bool passed() const { return inconsistent_total() == 0; }
};

AcmCheck acm_check(const Space& space, int degree_lo, int degree_hi);
ComparisonCheck comparison_check(const Space& space, const std::vector<Bundle>& bundles);

RunReport verify_paper(const EnumerationConfig& config);

}  // namespace mpreg

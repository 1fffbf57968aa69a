#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpreg/bundle.hpp"
#include "mpreg/integer.hpp"

namespace mpreg {

enum class Definition { Paper, HoffmannWang };

std::string to_string(Definition definition);
/// "paper" or "hw"; throws std::invalid_argument otherwise.
Definition parse_definition(const std::string& text);

/// A required vanishing that fails: h^i(E(p + k)) = dim != 0.
struct Failure {
  int i;
  MultiTwist k;
  Dim dim;
};

struct RegularityReport {
  Definition definition;
  std::optional<int> value;
  /// Witnesses of non-regularity at (value-1, ..., value-1).
  std::vector<Failure> failures;
  /// Regularity at value+1 was verified as well.
  bool monotone_checked = false;
};

/// (p_1, ..., p_s)-regular: h^i(E(p + k)) = 0 for i >= 1, sum k = -i, -n_j <= k_j <= 0.
bool is_regular_at(const Bundle& bundle, const MultiTwist& p);

/// Hoffmann-Wang (s = 2 only): h^i(E(p + (j, k))) = 0 for i >= 1, j + k = -i-1, j, k < 0.
/// Throws PreconditionError when s != 2.
bool is_hw_regular_at(const Bundle& bundle, const MultiTwist& p);

bool is_regular_at(const Bundle& bundle, const MultiTwist& p, Definition definition);

std::vector<Failure> regularity_failures(const Bundle& bundle, const MultiTwist& p, Definition definition);

/// Per-summand lower bound on Reg used to start the scan.
int reg_lower_bound(const Bundle& bundle);

/// Least balanced p such that the bundle is (p, ..., p)-regular.
RegularityReport reg(const Bundle& bundle, Definition definition = Definition::Paper);

}  // namespace mpreg

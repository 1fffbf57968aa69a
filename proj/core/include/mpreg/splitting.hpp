#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mpreg/bundle.hpp"
#include "mpreg/integer.hpp"

namespace mpreg {

/// T1/T2/C1/C2/T0/P4 live on P^n x P^m; T3/T2B/T4/P4B are their arbitrary-s versions.
enum class TheoremId { T1, T2, C1, C2, T0, P4, T3, T2B, T4, P4B };

std::string to_string(TheoremId id);
/// Case-insensitive; throws std::invalid_argument for unknown ids.
TheoremId parse_theorem_id(const std::string& text);
const std::vector<TheoremId>& all_theorems();

/// h^i(E((t, ..., t) + k)) = dim != 0 for a vanishing the condition requires.
struct Witness {
  int i;
  MultiTwist k;
  int t;
  Dim dim;
};

struct ConditionResult {
  bool holds = true;
  std::vector<Witness> witnesses;
};

/// Extremal summand type. Every type is indexed by a corner h in prod [0, n_j] with at
/// least one h_j = n_j; its shape is the box of Omega^{h_j}(h_j + 1) over the factors
/// (h_j = 0 gives O(1), h_j = n_j gives O). On P^n x P^m the corners (n,m), (n,0),
/// (0,m), (n,a), (a,m) are Triv, E01, E10, CotSecond(a), CotFirst(a).
struct SummandTag {
  enum class Kind { Triv, E01, E10, CotSecond, CotFirst, GeneralBox };

  Kind kind;
  int a = 0;
  std::vector<int> corner;

  static SummandTag from_corner(const Space& space, std::vector<int> corner);

  BoxSummand shape(const Space& space) const;
  std::string name() const;

  bool operator==(const SummandTag&) const = default;
};

/// All corner types of a space, in a fixed order.
std::vector<SummandTag> menu_tags(const Space& space);

// ---- ACM ------------------------------------------------------------------

/// h^i(E(t, ..., t)) = 0 for all 1 <= i <= d-1 and all t.
bool is_acm(const Bundle& bundle);
std::optional<Witness> acm_witness(const Bundle& bundle);

/// Closed form for a line bundle O(a): for every j there are h, k != j with
/// a_j - a_h <= n_h and a_j - a_k >= -n_j. On P^n x P^m: b - a <= n and a - b <= m.
bool acm_closed_form_line(const Space& space, const std::vector<int>& degrees);
/// Same, taking a summand; throws UnsupportedAtomError for a non-line summand.
bool acm_closed_form_line(const Space& space, const BoxSummand& summand);
/// The inequality as printed for s = 2: a - b >= -m and b - a >= -n.
bool acm_printed_rule(const Space& space, const std::vector<int>& degrees);

// ---- Theorem conditions ---------------------------------------------------

/// Balanced twists, i = 1..d-1, sum k = -i, -n_j <= k_j <= 0.
ConditionResult condition_t1(const Bundle& bundle);
/// Balanced twists, i = 1..d-1, -i <= sum k <= 0, k in the box, excluding the nonzero
/// corners whose coordinates all lie in {0, -n_j}.
ConditionResult condition_t2(const Bundle& bundle);
/// s = 2, rank < n+m. Interior part for i = 1..r-1 plus the boundary part for
/// i = 1..d-1, i != n, m, j + k = -i with j = -n or k = -m.
ConditionResult condition_c1(const Bundle& bundle);
/// s = 2, rank < n and rank < m. i = 1..r-1, j + k >= -i, j, k <= 0.
ConditionResult condition_c2(const Bundle& bundle);
/// Reg = 0. Fixed twist (-1, ..., -1); i = 1..min(r, d)-1, sum k >= -i, -n_j < k_j <= 0.
ConditionResult condition_t0(const Bundle& bundle);
/// rank 2, Reg = 0, all n_j > 2. h^1(E(-k)) = 0 for k >= 0, sum k <= 1.
ConditionResult condition_p4(const Bundle& bundle);

/// Boundary family over every i = 1..d-1 (no i != n, m exclusion), s = 2.
std::vector<Witness> boundary_failures(const Bundle& bundle);

/// Theorem preconditions; returns the violated hypothesis, if any.
std::optional<std::string> check_preconditions(const Bundle& bundle, TheoremId theorem);

/// Throws PreconditionError when check_preconditions fails.
ConditionResult evaluate_condition(const Bundle& bundle, TheoremId theorem);

/// Tags whose characteristic group h^{|h|}(E(-1, ..., -1) (x) O(-h)) is nonzero.
/// Requires Reg = 0 (PreconditionError); an empty result throws FindingError.
std::vector<SummandTag> detect_extremal_summand(const Bundle& bundle);

/// Structural membership in the theorem's split form.
bool classify_form(const Bundle& bundle, TheoremId theorem);

struct TheoremVerdict {
  TheoremId theorem;
  bool applicable = true;
  std::string note;
  bool condition_holds = false;
  bool form_holds = false;
  bool consistent = false;
  std::vector<Witness> witnesses;
  std::vector<SummandTag> detected;
  /// T0/T4 with condition true: every detected tag is an actual summand.
  std::optional<bool> detector_agrees;
};

TheoremVerdict verify_theorem(const Bundle& bundle, TheoremId theorem);

}  // namespace mpreg

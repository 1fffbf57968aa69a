#include "mpreg/splitting.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "mpreg/cohomology.hpp"
#include "mpreg/errors.hpp"
#include "mpreg/regularity.hpp"
#include "mpreg/window.hpp"

namespace mpreg {

namespace {

constexpr const char* kTheoremNames[] = {"T1", "T2", "C1", "C2", "T0", "P4", "T3", "T2B", "T4", "P4B"};

// Calls fn(v) for every integer vector with lo[j] <= v[j] <= hi[j].
template <typename Fn>
void for_each_vector(const std::vector<int>& lo, const std::vector<int>& hi, Fn&& fn) {
  const std::size_t s = lo.size();
  for (std::size_t j = 0; j < s; ++j) {
    if (lo[j] > hi[j]) return;
  }
  std::vector<int> v = lo;
  while (true) {
    fn(v);
    std::size_t j = s;
    while (j > 0 && v[j - 1] == hi[j - 1]) {
      v[j - 1] = lo[j - 1];
      --j;
    }
    if (j == 0) return;
    ++v[j - 1];
  }
}

// Box prod [-n_j + strict, 0].
template <typename Fn>
void for_each_k(const Space& space, bool strict, Fn&& fn) {
  std::vector<int> lo;
  std::vector<int> hi(static_cast<std::size_t>(space.size()), 0);
  for (int n : space.factors()) lo.push_back(strict ? -n + 1 : -n);
  for_each_vector(lo, hi, [&](const std::vector<int>& k) { fn(MultiTwist(k)); });
}

// Adds a witness when h^i(E((t,...,t) + k)) is nonzero for some t.
void check_balanced(const Bundle& bundle, int i, const MultiTwist& k, ConditionResult& result) {
  const TwistWindow window = nonvanishing_t_window(bundle, k, i);
  if (window.empty()) return;
  const int t = *window.representative();
  result.holds = false;
  result.witnesses.push_back({i, k, t, h_bundle(bundle, k + t, i)});
}

// Adds a witness when h^i(E((t,...,t) + k)) is nonzero for this fixed t.
void check_fixed(const Bundle& bundle, int i, const MultiTwist& k, int t, ConditionResult& result) {
  const MultiTwist at = k + t;
  if (!h_bundle_nonzero(bundle, at, i)) return;
  result.holds = false;
  result.witnesses.push_back({i, k, t, h_bundle(bundle, at, i)});
}

bool is_excluded_corner(const Space& space, const MultiTwist& k) {
  bool nonzero = false;
  for (int j = 0; j < space.size(); ++j) {
    if (k[j] != 0 && k[j] != -space[j]) return false;
    nonzero |= k[j] != 0;
  }
  return nonzero;
}

bool two_factor_theorem(TheoremId id) {
  switch (id) {
    case TheoremId::T1:
    case TheoremId::T2:
    case TheoremId::C1:
    case TheoremId::C2:
    case TheoremId::T0:
    case TheoremId::P4:
      return true;
    default:
      return false;
  }
}

int reg_value(const Bundle& bundle) { return *reg(bundle).value; }

void require(const Bundle& bundle, TheoremId id) {
  if (auto reason = check_preconditions(bundle, id)) throw PreconditionError(to_string(id) + ": " + *reason);
}

bool steps_of_one(const BoxSummand& s, bool allow_one) {
  if (!s.is_line()) return false;
  const std::vector<int> d = s.degrees();
  const int low = *std::min_element(d.begin(), d.end());
  return std::all_of(d.begin(), d.end(), [&](int x) { return x == low || (allow_one && x == low + 1); });
}

// O(l), l in {0,1}^s, l != (1,...,1).
bool is_small_corner_line(const BoxSummand& s) {
  if (!s.is_line()) return false;
  const std::vector<int> d = s.degrees();
  bool has_zero = false;
  for (int x : d) {
    if (x != 0 && x != 1) return false;
    has_zero |= x == 0;
  }
  return has_zero;
}

bool is_effective_line(const BoxSummand& s) {
  if (!s.is_line()) return false;
  const std::vector<int> d = s.degrees();
  return std::all_of(d.begin(), d.end(), [](int x) { return x >= 0; });
}

}  // namespace

std::string to_string(TheoremId id) { return kTheoremNames[static_cast<int>(id)]; }

TheoremId parse_theorem_id(const std::string& text) {
  std::string upper;
  for (char c : text) upper += static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  for (TheoremId id : all_theorems()) {
    if (to_string(id) == upper) return id;
  }
  throw std::invalid_argument("unknown theorem id '" + text + "'");
}

const std::vector<TheoremId>& all_theorems() {
  static const std::vector<TheoremId> ids{TheoremId::T1, TheoremId::T2, TheoremId::C1,  TheoremId::C2,
                                          TheoremId::T0, TheoremId::P4, TheoremId::T3,  TheoremId::T2B,
                                          TheoremId::T4, TheoremId::P4B};
  return ids;
}

// ---- Summand tags ----------------------------------------------------------

SummandTag SummandTag::from_corner(const Space& space, std::vector<int> corner) {
  if (static_cast<int>(corner.size()) != space.size()) throw std::invalid_argument("corner arity mismatch");
  bool has_top = false;
  bool all_top = true;
  for (int j = 0; j < space.size(); ++j) {
    const int h = corner[static_cast<std::size_t>(j)];
    if (h < 0 || h > space[j]) throw std::invalid_argument("corner coordinate outside [0, n_j]");
    has_top |= h == space[j];
    all_top &= h == space[j];
  }
  if (!has_top) throw std::invalid_argument("a corner needs some h_j = n_j");

  SummandTag tag{Kind::GeneralBox, 0, std::move(corner)};
  if (all_top) {
    tag.kind = Kind::Triv;
  } else if (space.size() == 2) {
    const int n = space[0];
    const int m = space[1];
    const int h0 = tag.corner[0];
    const int h1 = tag.corner[1];
    if (h0 == n && h1 == 0) {
      tag.kind = Kind::E01;
    } else if (h0 == 0 && h1 == m) {
      tag.kind = Kind::E10;
    } else if (h0 == n) {
      tag.kind = Kind::CotSecond;
      tag.a = h1;
    } else {
      tag.kind = Kind::CotFirst;
      tag.a = h0;
    }
  }
  return tag;
}

BoxSummand SummandTag::shape(const Space& space) const {
  std::vector<Atom> atoms;
  for (int j = 0; j < space.size(); ++j) {
    const int h = corner[static_cast<std::size_t>(j)];
    atoms.push_back(Atom::cotangent(space[j], h, h + 1));
  }
  return BoxSummand(std::move(atoms));
}

std::string SummandTag::name() const {
  switch (kind) {
    case Kind::Triv:
      return "Triv";
    case Kind::E01:
      return "E01";
    case Kind::E10:
      return "E10";
    case Kind::CotSecond:
      return "CotSecond(" + std::to_string(a) + ")";
    case Kind::CotFirst:
      return "CotFirst(" + std::to_string(a) + ")";
    case Kind::GeneralBox:
      break;
  }
  std::string out = "GeneralBox(";
  for (std::size_t j = 0; j < corner.size(); ++j) out += (j ? "," : "") + std::to_string(corner[j]);
  return out + ")";
}

std::vector<SummandTag> menu_tags(const Space& space) {
  std::vector<SummandTag> tags;
  std::vector<int> lo(static_cast<std::size_t>(space.size()), 0);
  for_each_vector(lo, space.factors(), [&](const std::vector<int>& h) {
    for (int j = 0; j < space.size(); ++j) {
      if (h[static_cast<std::size_t>(j)] == space[j]) {
        tags.push_back(SummandTag::from_corner(space, h));
        return;
      }
    }
  });
  // Triv first, then the named s = 2 kinds.
  std::stable_sort(tags.begin(), tags.end(), [](const SummandTag& a, const SummandTag& b) {
    return static_cast<int>(a.kind) < static_cast<int>(b.kind);
  });
  return tags;
}

// ---- ACM -------------------------------------------------------------------

bool is_acm(const Bundle& bundle) { return !acm_witness(bundle).has_value(); }

std::optional<Witness> acm_witness(const Bundle& bundle) {
  const Space& space = bundle.space();
  const MultiTwist zero = MultiTwist::zero(space.size());
  for (int i = 1; i <= space.dim() - 1; ++i) {
    const TwistWindow window = nonvanishing_t_window(bundle, zero, i);
    if (window.empty()) continue;
    const int t = *window.representative();
    return Witness{i, zero, t, h_bundle(bundle, zero + t, i)};
  }
  return std::nullopt;
}

bool acm_closed_form_line(const Space& space, const std::vector<int>& a) {
  const int s = space.size();
  if (static_cast<int>(a.size()) != s) throw std::invalid_argument("degree arity mismatch");
  if (s == 1) return true;
  for (int j = 0; j < s; ++j) {
    bool upper = false;
    bool lower = false;
    for (int h = 0; h < s; ++h) {
      if (h == j) continue;
      upper |= a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(h)] <= space[h];
      lower |= a[static_cast<std::size_t>(j)] - a[static_cast<std::size_t>(h)] >= -space[j];
    }
    if (!upper || !lower) return false;
  }
  return true;
}

bool acm_closed_form_line(const Space& space, const BoxSummand& summand) {
  if (!summand.is_line()) throw UnsupportedAtomError("ACM closed form applies to line bundles only");
  return acm_closed_form_line(space, summand.degrees());
}

bool acm_printed_rule(const Space& space, const std::vector<int>& degrees) {
  if (space.size() != 2 || degrees.size() != 2) throw std::invalid_argument("printed ACM rule is stated for s = 2");
  const int n = space[0];
  const int m = space[1];
  const int a = degrees[0];
  const int b = degrees[1];
  return a - b >= -m && b - a >= -n;
}

// ---- Conditions ------------------------------------------------------------

ConditionResult condition_t1(const Bundle& bundle) {
  ConditionResult result;
  const int d = bundle.space().dim();
  for_each_k(bundle.space(), false, [&](const MultiTwist& k) {
    const int i = -k.sum();
    if (i >= 1 && i <= d - 1) check_balanced(bundle, i, k, result);
  });
  return result;
}

ConditionResult condition_t2(const Bundle& bundle) {
  ConditionResult result;
  const Space& space = bundle.space();
  const int d = space.dim();
  for_each_k(space, false, [&](const MultiTwist& k) {
    if (is_excluded_corner(space, k)) return;
    for (int i = std::max(1, -k.sum()); i <= d - 1; ++i) check_balanced(bundle, i, k, result);
  });
  std::stable_sort(result.witnesses.begin(), result.witnesses.end(),
                   [](const Witness& a, const Witness& b) { return a.i < b.i; });
  return result;
}

ConditionResult condition_c1(const Bundle& bundle) {
  require(bundle, TheoremId::C1);
  const int n = bundle.space()[0];
  const int m = bundle.space()[1];
  const int d = n + m;
  const int r = static_cast<int>(rank(bundle));
  ConditionResult result;
  for (int i = 1; i <= r - 1; ++i) {
    for (int j = -n + 1; j <= 0; ++j) {
      for (int k = -m + 1; k <= 0; ++k) {
        if (j + k >= -i) check_balanced(bundle, i, MultiTwist{j, k}, result);
      }
    }
  }
  for (int i = 1; i <= d - 1; ++i) {
    if (i == n || i == m) continue;
    for (int j = -n; j <= 0; ++j) {
      const int k = -i - j;
      if (k < -m || k > 0) continue;
      if (j == -n || k == -m) check_balanced(bundle, i, MultiTwist{j, k}, result);
    }
  }
  return result;
}

ConditionResult condition_c2(const Bundle& bundle) {
  require(bundle, TheoremId::C2);
  const int r = static_cast<int>(rank(bundle));
  ConditionResult result;
  for (int i = 1; i <= r - 1; ++i) {
    for (int j = -i; j <= 0; ++j) {
      for (int k = -i - j; k <= 0; ++k) check_balanced(bundle, i, MultiTwist{j, k}, result);
    }
  }
  return result;
}

ConditionResult condition_t0(const Bundle& bundle) {
  require(bundle, bundle.space().size() == 2 ? TheoremId::T0 : TheoremId::T4);
  const int d = bundle.space().dim();
  const long long r = rank(bundle);
  const int top = static_cast<int>(std::min<long long>(r, d)) - 1;
  ConditionResult result;
  for (int i = 1; i <= top; ++i) {
    for_each_k(bundle.space(), true, [&](const MultiTwist& k) {
      if (k.sum() >= -i) check_fixed(bundle, i, k, -1, result);
    });
  }
  return result;
}

ConditionResult condition_p4(const Bundle& bundle) {
  require(bundle, bundle.space().size() == 2 ? TheoremId::P4 : TheoremId::P4B);
  const int s = bundle.space().size();
  ConditionResult result;
  check_fixed(bundle, 1, MultiTwist::zero(s), 0, result);
  for (int j = 0; j < s; ++j) {
    MultiTwist k = MultiTwist::zero(s);
    k[j] = -1;
    check_fixed(bundle, 1, k, 0, result);
  }
  return result;
}

std::vector<Witness> boundary_failures(const Bundle& bundle) {
  if (bundle.space().size() != 2) throw PreconditionError("boundary family is stated for s = 2");
  const int n = bundle.space()[0];
  const int m = bundle.space()[1];
  ConditionResult result;
  for (int i = 1; i <= n + m - 1; ++i) {
    for (int j = -n; j <= 0; ++j) {
      const int k = -i - j;
      if (k < -m || k > 0) continue;
      if (j == -n || k == -m) check_balanced(bundle, i, MultiTwist{j, k}, result);
    }
  }
  return result.witnesses;
}

std::optional<std::string> check_preconditions(const Bundle& bundle, TheoremId theorem) {
  const Space& space = bundle.space();
  if (two_factor_theorem(theorem) && space.size() != 2) return "stated on P^n x P^m (s = 2)";
  const long long r = rank(bundle);
  switch (theorem) {
    case TheoremId::C1:
      if (r >= space.dim()) return "needs rank < n + m";
      break;
    case TheoremId::C2:
      if (r >= space[0] || r >= space[1]) return "needs rank < n and rank < m";
      break;
    case TheoremId::T0:
    case TheoremId::T4:
      if (reg_value(bundle) != 0) return "needs Reg(E) = 0, got " + std::to_string(reg_value(bundle));
      break;
    case TheoremId::P4:
    case TheoremId::P4B: {
      if (r != 2) return "needs rank 2";
      for (int n : space.factors()) {
        if (n <= 2) return "needs every n_j > 2";
      }
      if (reg_value(bundle) != 0) return "needs Reg(E) = 0, got " + std::to_string(reg_value(bundle));
      break;
    }
    default:
      break;
  }
  return std::nullopt;
}

ConditionResult evaluate_condition(const Bundle& bundle, TheoremId theorem) {
  require(bundle, theorem);
  switch (theorem) {
    case TheoremId::T1:
    case TheoremId::T3:
      return condition_t1(bundle);
    case TheoremId::T2:
    case TheoremId::T2B:
      return condition_t2(bundle);
    case TheoremId::C1:
      return condition_c1(bundle);
    case TheoremId::C2:
      return condition_c2(bundle);
    case TheoremId::T0:
    case TheoremId::T4:
      return condition_t0(bundle);
    case TheoremId::P4:
    case TheoremId::P4B:
      return condition_p4(bundle);
  }
  throw std::logic_error("unhandled theorem id");
}

std::vector<SummandTag> detect_extremal_summand(const Bundle& bundle) {
  const int r = reg_value(bundle);
  if (r != 0) throw PreconditionError("extremal summand detection needs Reg(E) = 0, got " + std::to_string(r));
  const Space& space = bundle.space();
  const MultiTwist minus_one = MultiTwist::balanced(space.size(), -1);
  std::vector<SummandTag> found;
  for (const SummandTag& tag : menu_tags(space)) {
    const MultiTwist h(tag.corner);
    if (h_bundle_nonzero(bundle, minus_one - h, h.sum())) found.push_back(tag);
  }
  if (found.empty()) throw FindingError("Reg(E) = 0 but no extremal group is nonzero");
  return found;
}

bool classify_form(const Bundle& bundle, TheoremId theorem) {
  const auto& summands = bundle.summands();
  switch (theorem) {
    case TheoremId::T1:
    case TheoremId::T3:
      return std::all_of(summands.begin(), summands.end(), [](const BoxSummand& s) { return steps_of_one(s, false); });
    case TheoremId::T2:
    case TheoremId::T2B:
    case TheoremId::C1:
    case TheoremId::C2:
      return std::all_of(summands.begin(), summands.end(), [](const BoxSummand& s) { return steps_of_one(s, true); });
    case TheoremId::T0:
    case TheoremId::T4: {
      for (const SummandTag& tag : menu_tags(bundle.space())) {
        if (bundle.contains(tag.shape(bundle.space()))) return true;
      }
      return false;
    }
    case TheoremId::P4:
    case TheoremId::P4B: {
      if (summands.size() != 2) return false;
      const BoxSummand& x = summands[0];
      const BoxSummand& y = summands[1];
      return (is_small_corner_line(x) && is_effective_line(y)) || (is_small_corner_line(y) && is_effective_line(x));
    }
  }
  return false;
}

TheoremVerdict verify_theorem(const Bundle& bundle, TheoremId theorem) {
  TheoremVerdict verdict;
  verdict.theorem = theorem;
  if (auto reason = check_preconditions(bundle, theorem)) {
    verdict.applicable = false;
    verdict.note = *reason;
    return verdict;
  }
  ConditionResult condition = evaluate_condition(bundle, theorem);
  verdict.condition_holds = condition.holds;
  verdict.witnesses = std::move(condition.witnesses);
  verdict.form_holds = classify_form(bundle, theorem);
  verdict.consistent = verdict.condition_holds == verdict.form_holds;

  if (theorem == TheoremId::T0 || theorem == TheoremId::T4) {
    try {
      verdict.detected = detect_extremal_summand(bundle);
    } catch (const FindingError& e) {
      verdict.note = e.what();
    }
    if (verdict.condition_holds) {
      const Space& space = bundle.space();
      verdict.detector_agrees =
          !verdict.detected.empty() &&
          std::all_of(verdict.detected.begin(), verdict.detected.end(),
                      [&](const SummandTag& tag) { return bundle.contains(tag.shape(space)); });
    }
  }
  return verdict;
}

}  // namespace mpreg

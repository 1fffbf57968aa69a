#include "mpreg/window.hpp"

#include <algorithm>

namespace mpreg {

Interval intersect(const Interval& a, const Interval& b) noexcept {
  Interval r;
  if (a.lo && b.lo) r.lo = std::max(*a.lo, *b.lo);
  else r.lo = a.lo ? a.lo : b.lo;
  if (a.hi && b.hi) r.hi = std::min(*a.hi, *b.hi);
  else r.hi = a.hi ? a.hi : b.hi;
  return r;
}

namespace {

// a before b in the order of lower ends, rays first.
bool lower_less(const Interval& a, const Interval& b) {
  if (!a.lo) return static_cast<bool>(b.lo);
  if (!b.lo) return false;
  return *a.lo < *b.lo;
}

// a and b overlap or touch (a starts no later than b).
bool mergeable(const Interval& a, const Interval& b) {
  if (!a.hi || !b.lo) return true;
  return *b.lo <= *a.hi + 1;
}

}  // namespace

void TwistWindow::add(Interval interval) {
  if (interval.empty()) return;
  parts_.push_back(interval);
  std::sort(parts_.begin(), parts_.end(), lower_less);
  std::vector<Interval> merged;
  for (const Interval& part : parts_) {
    if (!merged.empty() && mergeable(merged.back(), part)) {
      Interval& last = merged.back();
      if (!part.hi) last.hi.reset();
      else if (last.hi) last.hi = std::max(*last.hi, *part.hi);
    } else {
      merged.push_back(part);
    }
  }
  parts_ = std::move(merged);
}

bool TwistWindow::has_ray() const noexcept {
  return std::any_of(parts_.begin(), parts_.end(), [](const Interval& p) { return !p.bounded(); });
}

bool TwistWindow::contains(int t) const noexcept {
  return std::any_of(parts_.begin(), parts_.end(), [t](const Interval& p) { return p.contains(t); });
}

std::optional<int> TwistWindow::representative() const noexcept {
  if (parts_.empty()) return std::nullopt;
  const Interval& first = parts_.front();
  if (first.lo) return first.lo;
  return first.hi;  // (-inf, hi]; a two-sided ray never arises from these constraints
}

namespace {

struct Candidate {
  int degree;
  Interval range;
};

// Degrees q where atom(t + k) can have cohomology, with the t-range for each.
std::vector<Candidate> atom_candidates(int n, const Atom& atom, int k) {
  const int c = atom.twist() + k;
  if (atom.is_line()) {
    return {{0, {-c, std::nullopt}}, {n, {std::nullopt, -n - 1 - c}}};
  }
  const int p = atom.p();
  return {{0, {p + 1 - c, std::nullopt}}, {p, {-c, -c}}, {n, {std::nullopt, p - n - 1 - c}}};
}

void collect(const std::vector<std::vector<Candidate>>& choices, std::size_t j, int degree, const Interval& range,
             int target, TwistWindow& out) {
  if (range.empty() || degree > target) return;
  if (j == choices.size()) {
    if (degree == target) out.add(range);
    return;
  }
  for (const Candidate& c : choices[j]) collect(choices, j + 1, degree + c.degree, intersect(range, c.range), target, out);
}

}  // namespace

TwistWindow summand_window(const Space& space, const BoxSummand& summand, const MultiTwist& k, int i) {
  TwistWindow window;
  if (i < 0 || i > space.dim()) return window;
  std::vector<std::vector<Candidate>> choices;
  choices.reserve(static_cast<std::size_t>(space.size()));
  for (int j = 0; j < space.size(); ++j) choices.push_back(atom_candidates(space[j], summand[j], k[j]));
  collect(choices, 0, 0, Interval{}, i, window);
  return window;
}

TwistWindow nonvanishing_t_window(const Bundle& bundle, const MultiTwist& k, int i) {
  TwistWindow window;
  for (const BoxSummand& s : bundle.summands()) {
    const TwistWindow part = summand_window(bundle.space(), s, k, i);
    for (const Interval& interval : part.intervals()) window.add(interval);
  }
  return window;
}

}  // namespace mpreg

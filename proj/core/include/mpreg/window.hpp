#pragma once

#include <optional>
#include <vector>

#include "mpreg/bundle.hpp"

namespace mpreg {

/// Integer interval; a missing end is a ray in that direction.
struct Interval {
  std::optional<int> lo;
  std::optional<int> hi;

  bool empty() const noexcept { return lo && hi && *lo > *hi; }
  bool bounded() const noexcept { return lo.has_value() && hi.has_value(); }
  bool contains(int t) const noexcept { return (!lo || t >= *lo) && (!hi || t <= *hi); }
  bool operator==(const Interval&) const = default;
};

Interval intersect(const Interval& a, const Interval& b) noexcept;

/// Finite union of disjoint, non-adjacent intervals in increasing order.
class TwistWindow {
 public:
  void add(Interval interval);

  const std::vector<Interval>& intervals() const noexcept { return parts_; }
  bool empty() const noexcept { return parts_.empty(); }
  bool has_ray() const noexcept;
  bool contains(int t) const noexcept;
  /// Smallest element, or the largest when the first part is a downward ray.
  std::optional<int> representative() const noexcept;

 private:
  std::vector<Interval> parts_;
};

/// { t : h^i(E((t,...,t) + k)) != 0 }, exactly.
TwistWindow nonvanishing_t_window(const Bundle& bundle, const MultiTwist& k, int i);

/// Same set for a single summand.
TwistWindow summand_window(const Space& space, const BoxSummand& summand, const MultiTwist& k, int i);

}  // namespace mpreg

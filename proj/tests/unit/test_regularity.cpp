#include <functional>

#include "doctest.h"
#include "mpreg/cohomology.hpp"
#include "mpreg/dsl.hpp"
#include "mpreg/errors.hpp"
#include "mpreg/harness.hpp"
#include "mpreg/regularity.hpp"

using namespace mpreg;

namespace {

// Direct transcription of the definition with plain loops.
bool brute_regular(const Bundle& e, const MultiTwist& p) {
  const Space& s = e.space();
  std::vector<int> k(static_cast<std::size_t>(s.size()));
  std::function<bool(int)> rec = [&](int j) {
    if (j == s.size()) {
      int sum = 0;
      for (int x : k) sum += x;
      const int i = -sum;
      return i < 1 || h_bundle(e, p + MultiTwist(k), i) == 0;
    }
    for (int v = -s[j]; v <= 0; ++v) {
      k[static_cast<std::size_t>(j)] = v;
      if (!rec(j + 1)) return false;
    }
    return true;
  };
  return rec(0);
}

bool brute_hw(const Bundle& e, const MultiTwist& p) {
  const int d = e.space().dim();
  for (int i = 1; i <= d; ++i) {
    for (int j = -i; j <= -1; ++j) {
      const int k = -i - 1 - j;
      if (k >= 0) continue;
      if (h_bundle(e, p + MultiTwist{j, k}, i) != 0) return false;
    }
  }
  return true;
}

int brute_reg(const Bundle& e) {
  const int s = e.space().size();
  for (int p = -30; p <= 30; ++p) {
    if (brute_regular(e, MultiTwist::balanced(s, p))) return p;
  }
  return 1000;
}

std::vector<Bundle> small_family(const Space& s) {
  EnumerationConfig c;
  c.degree_lo = -2;
  c.degree_hi = 2;
  c.max_summands = 2;
  return enumerate_bundles(s, c);
}

}  // namespace

TEST_CASE("frozen regularity values") {
  CHECK(*reg(line_bundle(Space{2, 2}, {0, 0})).value == 0);
  const RegularityReport r = reg(line_bundle(Space{2, 2}, {2, -1}));
  CHECK(*r.value == 1);
  CHECK(r.monotone_checked);
  CHECK_FALSE(r.failures.empty());
  CHECK(*reg(parse_bundle(Space{2, 3}, "O(0,0) + O(2,3)")).value == 0);
  CHECK(*reg(parse_bundle(Space{2, 3}, "O(0)*W1(2)")).value == 0);
  CHECK(*reg(parse_bundle(Space{2, 3}, "O(0)*W2(3)")).value == 0);
}

TEST_CASE("line bundles on P2xP2 are regular iff both degrees are effective") {
  const Space s{2, 2};
  for (int a = -3; a <= 3; ++a) {
    for (int b = -3; b <= 3; ++b) CHECK(is_regular_at(line_bundle(s, {a, b}), MultiTwist{0, 0}) == (a >= 0 && b >= 0));
  }
}

TEST_CASE("regularity against brute force") {
  for (const Space& s : {Space{1, 1}, Space{1, 2}, Space{2, 2}}) {
    for (const Bundle& e : small_family(s)) {
      for (int p = -2; p <= 2; ++p) {
        const MultiTwist pp{p, -p};
        CHECK(is_regular_at(e, pp) == brute_regular(e, pp));
        CHECK(is_hw_regular_at(e, pp) == brute_hw(e, pp));
      }
      CHECK(*reg(e).value == brute_reg(e));
      CHECK(reg_lower_bound(e) <= *reg(e).value);
    }
  }
  const Bundle w = parse_bundle(Space{2, 3}, "O(-1)*W1(1) + W1(2)*O(0)");
  CHECK(*reg(w).value == brute_reg(w));
}

TEST_CASE("monotone in each factor") {
  for (const Space& s : {Space{1, 2}, Space{2, 2}}) {
    for (const Bundle& e : small_family(s)) {
      for (int a = -3; a <= 2; ++a) {
        for (int b = -3; b <= 2; ++b) {
          if (!is_regular_at(e, MultiTwist{a, b})) continue;
          CHECK(is_regular_at(e, MultiTwist{a + 1, b}));
          CHECK(is_regular_at(e, MultiTwist{a, b + 1}));
        }
      }
    }
  }
}

TEST_CASE("regularity restricts to hyperplanes") {
  const Space s{2, 3};
  EnumerationConfig c;
  c.degree_lo = -2;
  c.degree_hi = 2;
  c.max_summands = 1;
  for (const Bundle& e : enumerate_bundles(s, c)) {
    for (int factor = 0; factor < 2; ++factor) {
      const Bundle r = restrict_to_hyperplane(e, factor);
      for (int a = -2; a <= 2; ++a) {
        for (int b = -2; b <= 2; ++b) {
          if (is_regular_at(e, MultiTwist{a, b})) CHECK(is_regular_at(r, MultiTwist{a, b}));
        }
      }
    }
  }
}

TEST_CASE("Hoffmann-Wang regularity") {
  const Space s{1, 1};
  CHECK_FALSE(is_hw_regular_at(line_bundle(s, {-1, -1}), MultiTwist{0, 0}));
  CHECK(h_bundle(line_bundle(s, {-1, -1}), MultiTwist{-2, -1}, 2) == 2);
  CHECK(is_hw_regular_at(line_bundle(s, {0, 0}), MultiTwist{0, 0}));
  CHECK(is_hw_regular_at(line_bundle(s, {1, 1}), MultiTwist{0, 0}));
  CHECK_THROWS_AS(is_hw_regular_at(line_bundle(Space{1, 1, 1}, {0, 0, 0}), MultiTwist{0, 0, 0}), PreconditionError);
  const RegularityReport hw = reg(line_bundle(s, {0, 0}), Definition::HoffmannWang);
  CHECK(hw.definition == Definition::HoffmannWang);
  CHECK(hw.value.has_value());
}

TEST_CASE("definitions parse") {
  CHECK(parse_definition("paper") == Definition::Paper);
  CHECK(parse_definition("hw") == Definition::HoffmannWang);
  CHECK(to_string(Definition::HoffmannWang) == "hw");
  CHECK_THROWS_AS(parse_definition("other"), std::invalid_argument);
}

TEST_CASE("reg is independent of summand order") {
  const Space s{2, 3};
  CHECK(reg(parse_bundle(s, "O(1,0) + O(-1,2) + O(0)*W1(1)")).value ==
        reg(parse_bundle(s, "O(0)*W1(1) + O(-1,2) + O(1,0)")).value);
}

#include "doctest.h"
#include "mpreg/bundle.hpp"
#include "mpreg/dsl.hpp"
#include "mpreg/errors.hpp"

using namespace mpreg;

TEST_CASE("space basics") {
  Space s{2, 3};
  CHECK(s.size() == 2);
  CHECK(s.dim() == 5);
  CHECK(s.canonical_twist() == std::vector<int>{-3, -4});
  CHECK(to_string(s) == "P2xP3");
  CHECK_THROWS_AS(Space(std::vector<int>{}), std::invalid_argument);
  CHECK_THROWS_AS(Space({2, 0}), std::invalid_argument);
}

TEST_CASE("multitwist arithmetic") {
  MultiTwist a{1, -2};
  CHECK((a + 3) == MultiTwist{4, 1});
  CHECK((a + MultiTwist{1, 1}) == MultiTwist{2, -1});
  CHECK((-a) == MultiTwist{-1, 2});
  CHECK(a.sum() == -1);
  CHECK(MultiTwist::balanced(3, -1) == MultiTwist{-1, -1, -1});
  CHECK_THROWS_AS(a + MultiTwist{1}, std::invalid_argument);
}

TEST_CASE("atom normalization and duals") {
  CHECK(Atom::cotangent(3, 0, 2) == Atom::line(2));
  CHECK(Atom::cotangent(3, 3, 2) == Atom::line(-2));
  CHECK_THROWS_AS(Atom::cotangent(2, 3, 0), ParseError);
  const Atom w = Atom::cotangent(3, 1, 2);
  CHECK(w.rank(3) == 3);
  CHECK(Atom::cotangent(4, 2, 0).rank(4) == 6);
  CHECK(w.dual(3) == Atom::cotangent(3, 2, 2));
  CHECK(w.dual(3).dual(3) == w);
  CHECK(Atom::line(4).dual(2) == Atom::line(-4));
  CHECK(w.fits(3));
  CHECK_FALSE(w.fits(1));
}

TEST_CASE("bundle canonical order and rank") {
  Space s{2, 3};
  Bundle a(s, {BoxSummand::line({1, 0}), BoxSummand::line({0, 0})});
  Bundle b(s, {BoxSummand::line({0, 0}), BoxSummand::line({1, 0})});
  CHECK(a == b);
  CHECK(to_dsl(a) == to_dsl(b));
  Bundle c(s, {BoxSummand{Atom::line(0), Atom::cotangent(3, 1, 2)}, BoxSummand::line({0, 1})});
  CHECK(rank(c) == 4);
  CHECK(c.contains(BoxSummand::line({0, 1})));
  CHECK_FALSE(c.is_line_only());
  CHECK_THROWS_AS(Bundle(s, {BoxSummand::line({1})}), ParseError);
  CHECK_THROWS_AS(Bundle(s, {BoxSummand{Atom::cotangent(3, 2, 0), Atom::line(0)}}), ParseError);
  CHECK_THROWS_AS(Bundle(s, {}), std::invalid_argument);
}

TEST_CASE("twist, dual, direct sum") {
  Space s{1, 2};
  Bundle e = line_bundle(s, {1, -1});
  CHECK(twist(e, MultiTwist{-1, 1}) == line_bundle(s, {0, 0}));
  CHECK(dualize(e) == line_bundle(s, {-1, 1}));
  CHECK(dualize(dualize(e)) == e);
  Bundle sum = direct_sum(e, line_bundle(s, {0, 0}));
  CHECK(sum.summand_count() == 2);
  CHECK(rank(sum) == 2);
  CHECK_THROWS_AS(direct_sum(e, line_bundle(Space{2, 2}, {0, 0})), std::invalid_argument);
}

TEST_CASE("restriction to a hyperplane") {
  Space s{2, 3};
  Bundle e = line_bundle(s, {1, -2});
  Bundle r = restrict_to_hyperplane(e, 1);
  CHECK(r.space() == Space{2, 2});
  CHECK(r == line_bundle(Space{2, 2}, {1, -2}));
  CHECK_THROWS_AS(restrict_to_hyperplane(line_bundle(Space{1, 2}, {0, 0}), 0), PreconditionError);
  Bundle w(s, {BoxSummand{Atom::line(0), Atom::cotangent(3, 1, 2)}});
  CHECK_THROWS_AS(restrict_to_hyperplane(w, 1), UnsupportedAtomError);
  CHECK(restrict_to_hyperplane(w, 0).space() == Space{1, 3});
}

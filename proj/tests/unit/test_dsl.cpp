#include "doctest.h"
#include "mpreg/dsl.hpp"
#include "mpreg/errors.hpp"

using namespace mpreg;

TEST_CASE("parse spaces") {
  CHECK(parse_space("P2xP3") == Space{2, 3});
  CHECK(parse_space(" P1 x P1 x P2 ") == Space{1, 1, 2});
  CHECK(parse_space("P4") == Space{4});
  CHECK_THROWS_AS(parse_space("P0xP1"), ParseError);
  CHECK_THROWS_AS(parse_space("Q2"), ParseError);
  CHECK_THROWS_AS(parse_space("P2x"), ParseError);
}

TEST_CASE("parse bundles") {
  const Space s{2, 3};
  CHECK(parse_bundle(s, "O(0,1)") == line_bundle(s, {0, 1}));
  CHECK(parse_bundle(s, "O(0)*O(1)") == line_bundle(s, {0, 1}));
  const Bundle w = parse_bundle(s, "O(0)*W1(2)");
  CHECK(w.summands()[0][1] == Atom::cotangent(3, 1, 2));
  CHECK(parse_bundle(s, "O(0,0) + O(1,0)").summand_count() == 2);
  CHECK(parse_bundle(s, "O(0,0) + O(1,1) @(-1,2)") == parse_bundle(s, "O(-1,2) + O(0,3)"));
  CHECK(parse_bundle(s, "W0(3)*O(1)") == line_bundle(s, {3, 1}));
  CHECK(parse_bundle(Space{1, 1, 1}, "O(1,-1,0)") == line_bundle(Space{1, 1, 1}, {1, -1, 0}));
}

TEST_CASE("parse errors carry kind and position") {
  const Space s{2, 3};
  try {
    parse_bundle(Space{1}, "O(1,1)");
    FAIL("expected an arity error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Arity);
  }
  try {
    parse_bundle(s, "O(0)*W4(1)");
    FAIL("expected a dimension error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Dimension);
    CHECK(e.position() == 5);
  }
  try {
    parse_bundle(s, "O(0,1) + Q");
    FAIL("expected a syntax error");
  } catch (const ParseError& e) {
    CHECK(e.kind() == ParseError::Kind::Syntax);
    CHECK(e.position() == 9);
  }
  CHECK_THROWS_AS(parse_bundle(s, "O(0,1)*O(2)"), ParseError);
  CHECK_THROWS_AS(parse_bundle(s, "O(0,1) @(1)"), ParseError);
  CHECK_THROWS_AS(parse_bundle(s, "O(0,1) trailing"), ParseError);
  CHECK_THROWS_AS(parse_bundle(s, ""), ParseError);
}

TEST_CASE("canonical text round trip") {
  const Space s{2, 3};
  for (const char* text : {"O(0,1)", "O(0)*W1(2) + O(1,0)", "W1(-1)*W2(3) + O(-2,5) + O(-2,5)"}) {
    const Bundle b = parse_bundle(s, text);
    CHECK(parse_bundle(s, to_dsl(b)) == b);
  }
  CHECK(to_dsl(parse_bundle(s, "O(1,0) + O(0,0)")) == "O(0)*O(0) + O(1)*O(0)");
  CHECK(to_dsl(Atom::cotangent(3, 2, -1)) == "W2(-1)");
}

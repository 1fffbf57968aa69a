#include <set>

#include "doctest.h"
#include "json.hpp"
#include "mpreg/cohomology.hpp"
#include "mpreg/dsl.hpp"
#include "mpreg/errors.hpp"
#include "mpreg/harness.hpp"
#include "mpreg/serialize.hpp"

using namespace mpreg;
using nlohmann::json;

TEST_CASE("config parsing") {
  const EnumerationConfig c = parse_config(R"(
# small run
spaces = P1xP1, P2xP3
degrees = -1..2
cotangent = on
cotangent_twists = 0..1
max_summands = 3
theorems = T1, t2b
jobs = 2
witness_samples = 1
findings = false
)");
  CHECK(c.spaces == std::vector<Space>{Space{1, 1}, Space{2, 3}});
  CHECK(c.degree_lo == -1);
  CHECK(c.degree_hi == 2);
  CHECK(c.cotangent);
  CHECK(c.cotangent_hi == 1);
  CHECK(c.max_summands == 3);
  CHECK(c.theorems == std::vector<TheoremId>{TheoremId::T1, TheoremId::T2B});
  CHECK(c.jobs == 2);
  CHECK_FALSE(c.findings);

  CHECK_THROWS_AS(parse_config("degrees = 1..0\nspaces = P1"), ParseError);
  CHECK_THROWS_AS(parse_config("spaces = P1\ncolour = red"), ParseError);
  CHECK_THROWS_AS(parse_config("spaces = P1\nmax_summands"), ParseError);
  CHECK_THROWS_AS(parse_config("spaces = P1\ntheorems = T9"), ParseError);
  CHECK_THROWS_AS(parse_config("degrees = 0..1"), ParseError);
  CHECK_THROWS_AS(parse_config("spaces = P0"), ParseError);
}

TEST_CASE("enumeration is deduplicated and counted up front") {
  EnumerationConfig c;
  c.spaces = {Space{1, 2}, Space{2, 3}};
  c.degree_lo = -1;
  c.degree_hi = 1;
  c.cotangent = true;
  c.cotangent_lo = 0;
  c.cotangent_hi = 1;
  c.max_summands = 2;
  unsigned long long total = 0;
  for (const Space& s : c.spaces) {
    const auto bundles = enumerate_bundles(s, c);
    std::set<std::string> seen;
    for (const Bundle& b : bundles) {
      CHECK(b.space() == s);
      seen.insert(to_dsl(b));
    }
    CHECK(seen.size() == bundles.size());
    total += bundles.size();
  }
  CHECK(enumeration_count(c) == total);
  // P1 allows no cotangent atoms; P2xP3: (3 + 2) * (3 + 4) summands.
  CHECK(enumerate_summands(Space{2, 3}, c).size() == 35);
  c.menu_only = true;
  CHECK(enumeration_count(c) == 4 + 6);
}

TEST_CASE("line-bundle family size") {
  EnumerationConfig c;
  c.max_summands = 3;
  CHECK(enumerate_bundles(Space{1, 1}, c).size() == 3275);
}

TEST_CASE("verify_paper is deterministic across worker counts") {
  EnumerationConfig c;
  c.spaces = {Space{1, 1}, Space{1, 1, 1}};
  c.max_summands = 2;
  c.theorems = {TheoremId::T1, TheoremId::T2, TheoremId::T3, TheoremId::T2B};
  c.jobs = 1;
  const std::string one = run_report_json(verify_paper(c), false);
  c.jobs = 3;
  const std::string three = run_report_json(verify_paper(c), false);
  CHECK(one == three);

  const json doc = json::parse(one);
  CHECK(doc["theorems"]["T1"]["inconsistent"] == 0);
  CHECK(doc["theorems"]["T1"]["not_applicable"] > 0);
  CHECK(doc["theorems"]["T3"]["inconsistent"] == 0);
  CHECK(doc["theorems"]["T2B"]["inconsistent"] > 0);
  CHECK_FALSE(doc.contains("seconds"));
  CHECK(doc["findings"]["acm"].size() == 2);
  CHECK(doc["findings"]["comparison"].size() == 1);
}

TEST_CASE("menu-only T0 run") {
  EnumerationConfig c;
  c.spaces = {Space{2, 3}};
  c.menu_only = true;
  c.theorems = {TheoremId::T0};
  c.findings = false;
  const RunReport r = verify_paper(c);
  CHECK(r.bundles == 6);
  CHECK(r.stats.at(TheoremId::T0).applicable == 6);
  CHECK(r.stats.at(TheoremId::T0).detector_disagreements == 0);
  CHECK(r.passed());
}

TEST_CASE("JSON schemas") {
  const Bundle e = parse_bundle(Space{1, 1}, "O(-2,-2)");
  const json t = json::parse(table_json(cohomology_table(e, {{0, 0}, {0, 0}})));
  CHECK(t["space"] == json::array({1, 1}));
  CHECK(t["bundle"] == "O(-2)*O(-2)");
  CHECK(t["entries"][0]["i"] == 2);
  CHECK(t["entries"][0]["t"] == json::array({0, 0}));
  CHECK(t["entries"][0]["dim"] == "1");
  CHECK(table_csv(cohomology_table(e, {{0, 0}, {0, 0}})) == "i,t1,t2,dim\n2,0,0,1\n");

  const json v = json::parse(verdict_json(verify_theorem(line_bundle(Space{1, 1}, {0, 1}), TheoremId::T1)));
  CHECK(v["theorem"] == "T1");
  CHECK(v["condition"] == false);
  CHECK(v["form"] == false);
  CHECK(v["consistent"] == true);
  CHECK(v["witnesses"][0]["k"] == json::array({-1, 0}));
  CHECK(v["witnesses"][0]["dim"] == "1");
  CHECK(v["detected"].is_array());
}

#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lot/knot.hpp"
#include "lot/log.hpp"
#include "lot/util.hpp"

using namespace lot;

static std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_CASE("gauss code parsing") {
  GaussCode g = parse_gauss(fixture("trefoil.gauss"));
  REQUIRE(g.passages.size() == 6);
  CHECK(g.passages[0] == Passage{1, true, +1});
  CHECK(g.passages[1] == Passage{2, false, +1});
  CHECK(g.passages[5] == Passage{3, false, +1});
  CHECK(is_alternating(g));

  GaussCode multi = parse_gauss("O10- \n # comment\n U10-");
  CHECK(multi.passages[0].crossing == 10);
  CHECK(multi.passages[0].sign == -1);

  GaussCode empty = parse_gauss("# nothing here\n");
  CHECK(empty.passages.empty());
  CHECK(is_alternating(empty));
}

TEST_CASE("gauss code validation errors") {
  CHECK_THROWS_AS(parse_gauss("O1+"), ParseError);            // unmatched
  CHECK_THROWS_AS(parse_gauss("O1+ O1+"), ParseError);        // same side twice
  CHECK_THROWS_AS(parse_gauss("O1+ U1-"), ParseError);        // sign clash
  CHECK_THROWS_AS(parse_gauss("O1+ U1+ O1+"), ParseError);    // triple
  CHECK_THROWS_AS(parse_gauss("X1+ U1+"), ParseError);        // bad kind
  CHECK_THROWS_AS(parse_gauss("O1 U1+"), ParseError);         // missing sign
  CHECK_THROWS_AS(parse_gauss("O+ U+"), ParseError);          // missing id
  try {
    parse_gauss("zzz");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line == 1);
  }
}

TEST_CASE("alternation detection") {
  CHECK(!is_alternating(parse_gauss("O1+ O2+ U1+ U2+")));
  CHECK(is_alternating(parse_gauss("O1+ U1+")));
}

TEST_CASE("trefoil interval matches the wirtinger reading") {
  Log l = loi_of(parse_gauss(fixture("trefoil.gauss")));
  Log expect = parse_log(
      "vertices x0 x1 x2 x3\nedge x1 x0 x2\nedge x0 x2 x1\nedge x2 x1 x3\n");
  CHECK(l == expect);
  CHECK(is_lot(l).ok);
  CHECK(predicates(l).injective);
}

TEST_CASE("single crossing intervals") {
  CHECK(loi_of(parse_gauss("O1+ U1+")) ==
        parse_log("vertices x0 x1\nedge x0 x0 x1\n"));
  CHECK(loi_of(parse_gauss("O1- U1-")) ==
        parse_log("vertices x0 x1\nedge x1 x0 x0\n"));
}

TEST_CASE("empty code yields a single-vertex interval") {
  Log l = loi_of(parse_gauss(""));
  CHECK(l == parse_log("vertices x0\n"));
  CHECK(is_lot(l).ok);
}

TEST_CASE("prefix renames the arcs") {
  Log l = loi_of(parse_gauss("O1+ U1+"), "arc");
  CHECK(l.vertex_names() == std::vector<std::string>{"arc0", "arc1"});
}

TEST_CASE("non-alternating codes still build intervals") {
  Log l = loi_of(parse_gauss("O1+ O2+ U1+ U2+"));
  // both crossings pass over arc 0
  CHECK(l == parse_log("vertices x0 x1 x2\nedge x0 x0 x1\nedge x1 x0 x2\n"));
  CHECK(is_lot(l).ok);
  CHECK(!predicates(l).injective);
}

TEST_CASE("edges come in crossing first-appearance order") {
  // crossing 2 appears first in the passage list
  Log l = loi_of(parse_gauss("O2+ U1+ O1+ U2+"));
  // arcs: O2 over arc0; U1 under_in x0 -> arc1; O1 over arc1; U2 under_in x1
  // crossing 2: x=x1, y=x2, z=x0 -> [x1,x0,x2]
  // crossing 1: x=x0, y=x1, z=x1 -> [x0,x1,x1]
  Log expect = parse_log(
      "vertices x0 x1 x2\nedge x1 x0 x2\nedge x0 x1 x1\n");
  CHECK(l == expect);
}

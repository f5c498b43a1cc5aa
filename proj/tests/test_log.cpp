#include <sstream>

#include "doctest.h"
#include "lot/log.hpp"
#include "lot/presentation.hpp"
#include "lot/util.hpp"

using namespace lot;

static Log interval2() {
  return Log::make({"a", "b", "c"}, {{0, 2, 1}, {1, 0, 2}});
}

TEST_CASE("dsl parsing and canonical serialization") {
  Log g = parse_log("# comment line\nvertices a b c\nedge a c b # trailing\nedge b a c\n");
  CHECK(g.num_vertices() == 3);
  CHECK(g.num_edges() == 2);
  CHECK(g == interval2());
  CHECK(serialize_log(g) == "vertices a b c\nedge a c b\nedge b a c\n");
}

TEST_CASE("edges may precede their vertex declarations") {
  Log g = parse_log("edge a c b\nvertices a b c\n");
  CHECK(g == Log::make({"a", "b", "c"}, {{0, 2, 1}}));
}

TEST_CASE("single vertex round trip") {
  Log g = parse_log("vertices x\n");
  CHECK(serialize_log(g) == "vertices x\n");
  CHECK(g.num_edges() == 0);
}

TEST_CASE("parse errors carry positions") {
  CHECK_THROWS_AS(parse_log("verts a b\n"), ParseError);
  CHECK_THROWS_AS(parse_log("vertices a b\nedge a b\n"), ParseError);
  CHECK_THROWS_AS(parse_log("vertices a b\nedge a c b\n"), ParseError);
  CHECK_THROWS_AS(parse_log("vertices a a\n"), ParseError);
  CHECK_THROWS_AS(parse_log("vertices a-b\n"), ParseError);
  CHECK_THROWS_AS(parse_log("vertices\n"), ParseError);
  try {
    parse_log("vertices a b\nedge a c b\n");
    FAIL("expected throw");
  } catch (const ParseError& e) {
    CHECK(e.line == 2);
    CHECK(std::string(e.what()).find("undeclared vertex 'c'") != std::string::npos);
  }
}

TEST_CASE("json input is sniffed and round trips") {
  Log g = interval2();
  nlohmann::ordered_json j = log_to_json(g);
  CHECK(j["schema"] == "lotcert/1");
  Log back = log_from_json(j);
  CHECK(back == g);
  Log sniffed = parse_log(j.dump());
  CHECK(sniffed == g);
  CHECK_THROWS_AS(parse_log("{ not json"), ParseError);
  CHECK_THROWS_AS(log_from_json(nlohmann::json::object()), Error);
}

TEST_CASE("log construction validates") {
  Log g;
  g.add_vertex("a");
  CHECK_THROWS_AS(g.add_vertex("a"), Error);
  CHECK_THROWS_AS(g.add_vertex("no spaces"), Error);
  CHECK_THROWS_AS(g.add_edge(0, 1, 0), Error);
  CHECK_THROWS_AS(g.vertex("missing"), Error);
  CHECK(!g.find_vertex("missing"));
}

TEST_CASE("tree recognition") {
  CHECK(is_lot(interval2()).ok);
  Log empty;
  CHECK(is_lot(empty).reason == "empty");
  Log cyc = Log::make({"a", "b", "c"}, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
  CHECK(is_lot(cyc).reason == "cycle");
  Log disc = Log::make({"a", "b", "c"}, {});
  CHECK(is_lot(disc).reason == "disconnected");
  Log one = Log::make({"x"}, {});
  CHECK(is_lot(one).ok);
}

TEST_CASE("valency and label counts") {
  Log g = interval2();
  CHECK(g.valency(1) == 2);   // b touches both edges
  CHECK(g.valency(0) == 1);
  CHECK(g.label_count(2) == 1);
  CHECK(g.is_label(0));
  CHECK(!g.is_label(1));
  Log loop = Log::make({"a", "b"}, {{0, 1, 0}});
  CHECK(loop.valency(0) == 2);  // loops count twice
}

TEST_CASE("structural predicates") {
  Predicates p = predicates(interval2());
  CHECK(p.injective);
  CHECK(p.compressed);
  CHECK(p.interior_reduced);
  CHECK(p.boundary_reduced.value());
  CHECK(p.reduced.value());
  CHECK(p.detail.empty());

  // d labels two edges
  Log ni = Log::make({"a", "b", "c", "d"}, {{0, 3, 2}, {2, 3, 1}, {1, 0, 3}});
  Predicates pn = predicates(ni);
  CHECK(!pn.injective);
  CHECK(pn.reduced.value());
  CHECK(pn.detail.find("labels 2 edges") != std::string::npos);

  // edge labeled by its endpoint
  Log nc = Log::make({"a", "b"}, {{0, 0, 1}});
  CHECK(!predicates(nc).compressed);

  // foldable pair: same label, shared head
  Log nf = Log::make({"a", "b", "c", "d"},
                     {{0, 3, 1}, {2, 3, 1}, {1, 0, 3}});
  CHECK(!predicates(nf).interior_reduced);

  // boundary vertex that is not a label
  Log nb = Log::make({"a", "b", "c"}, {{0, 2, 1}, {1, 2, 2}});
  CHECK(!predicates(nb).boundary_reduced.value());
  CHECK(!predicates(nb).reduced.value());

  // boundary/reduced undefined off trees
  Log cyc = Log::make({"a", "b", "c"}, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
  CHECK(!predicates(cyc).boundary_reduced.has_value());
  CHECK(!predicates(cyc).reduced.has_value());
}

TEST_CASE("presentation relators follow the edge relation") {
  Log g = interval2();
  Presentation p = presentation_of(g);
  REQUIRE(p.generators == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(p.relators.size() == 2);
  // edge [a,c,b] -> a c b^-1 c^-1
  Word r0{{0, +1}, {2, +1}, {1, -1}, {2, -1}};
  CHECK(p.relators[0] == r0);
  CHECK(word_str(p, p.relators[0]) == "a c b^-1 c^-1");

  ExponentSums es = exponent_sums(p);
  CHECK(es.all_totals_zero);
  CHECK(!es.all_generator_sums_zero);  // a appears once positively in r0
  CHECK(es.totals == std::vector<int>{0, 0});
  CHECK(es.per_generator[0] == std::vector<int>{1, -1, 0});
}

TEST_CASE("generator inversion is an involution and preserves lengths") {
  Presentation p = presentation_of(interval2());
  Presentation q = invert_generators(p, {2});
  CHECK(q.relators[0] == Word{{0, +1}, {2, -1}, {1, -1}, {2, +1}});
  Presentation back = invert_generators(q, {2});
  CHECK(back.relators == p.relators);
  CHECK(q.generators == p.generators);
}

TEST_CASE("random logs round trip through both formats") {
  Rng rng(7);
  for (int iter = 0; iter < 50; ++iter) {
    Log g;
    int n = 1 + rng.below(6);
    for (int i = 0; i < n; ++i) g.add_vertex("v" + std::to_string(i));
    int m = rng.below(8);
    for (int i = 0; i < m; ++i)
      g.add_edge(rng.below(n), rng.below(n), rng.below(n));
    CHECK(parse_log(serialize_log(g)) == g);
    CHECK(log_from_json(log_to_json(g)) == g);
  }
}

#include <algorithm>
#include <array>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lot/log.hpp"
#include "lot/presentation.hpp"
#include "lot/sublot.hpp"
#include "lot/whitehead.hpp"

using namespace lot;

static std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static std::vector<std::array<int, 2>> sorted_edges(const Multigraph& g) {
  std::vector<std::array<int, 2>> es;
  for (auto [u, v] : g.edges) es.push_back({std::min(u, v), std::max(u, v)});
  std::sort(es.begin(), es.end());
  return es;
}

TEST_CASE("corners of a length-4 relator") {
  // relator a c b^-1 c^-1 from the edge [a,c,b]
  Presentation p = presentation_of(Log::make({"a", "b", "c"}, {{0, 2, 1}}));
  WhiteheadGraph w = whitehead_graph(p);
  REQUIRE(w.corners.size() == 4);
  // exit(a)=a-, entry(c)=c+; and so on cyclically
  CHECK(w.corners[0] == Corner{wg_minus(0), wg_plus(2), 0, 0});
  CHECK(w.corners[1] == Corner{wg_minus(2), wg_minus(1), 0, 1});
  CHECK(w.corners[2] == Corner{wg_plus(1), wg_minus(2), 0, 2});
  CHECK(w.corners[3] == Corner{wg_plus(2), wg_plus(0), 0, 3});
  CHECK(wg_name(p, wg_plus(0)) == "a_plus");
  CHECK(wg_name(p, wg_minus(2)) == "c_minus");

  Presentation empty_rel;
  empty_rel.generators = {"a"};
  empty_rel.relators = {{}};
  CHECK_THROWS_AS(whitehead_graph(empty_rel), Error);
}

TEST_CASE("side restrictions of an interval") {
  Log g = parse_log(fixture("loi3.lot"));  // [a,c,b],[b,d,c],[d,a,c]
  Presentation p = presentation_of(g);
  WhiteheadGraph w = whitehead_graph(p);
  Multigraph plus = restrict_side(w, p, +1);
  Multigraph minus = restrict_side(w, p, -1);
  // a=0 b=1 c=2 d=3
  CHECK(sorted_edges(plus) ==
        std::vector<std::array<int, 2>>{{0, 2}, {0, 3}, {1, 3}});
  CHECK(sorted_edges(minus) ==
        std::vector<std::array<int, 2>>{{0, 2}, {1, 2}, {2, 3}});
  CHECK(is_tree(plus));
  CHECK(is_tree(minus));

  StallingsReport rep = stallings_test(p);
  CHECK(rep.pass);
  CHECK(rep.exponent_sums_ok);
  CHECK(rep.plus.tree);
  CHECK(rep.minus.tree);
  CHECK(rep.side == +1);
}

TEST_CASE("one cyclic side still passes") {
  // trefoil interval: positive side is a triangle, negative side a path
  Log g = parse_log("vertices x0 x1 x2 x3\nedge x1 x0 x2\nedge x0 x2 x1\nedge x2 x1 x3\n");
  StallingsReport rep = stallings_test(presentation_of(g));
  CHECK(rep.pass);
  CHECK(!rep.plus.forest);
  CHECK(!rep.plus.cycle_corners.empty());
  CHECK(rep.minus.tree);
  CHECK(rep.side == -1);
}

TEST_CASE("both sides cyclic fails") {
  Log g = parse_log(
      "vertices x0 x1 x2 x3 p q\n"
      "edge x1 x0 x2\nedge x0 x2 x1\nedge x2 x1 x3\n"
      "edge x3 q p\nedge x3 p q\n");
  StallingsReport rep = stallings_test(presentation_of(g));
  CHECK(!rep.pass);
  CHECK(rep.side == 0);
  CHECK(!rep.plus.forest);
  CHECK(!rep.minus.forest);
  CHECK(rep.exponent_sums_ok);  // tree relators always balance
}

TEST_CASE("nonzero exponent sums block the test") {
  Presentation p;
  p.generators = {"x", "y"};
  p.relators = {Word{{0, +1}, {1, +1}}};  // x y
  StallingsReport rep = stallings_test(p);
  CHECK(!rep.pass);
  CHECK(!rep.exponent_sums_ok);
  CHECK(rep.bad_relators == std::vector<int>{0});
}

TEST_CASE("forest checking on multigraphs") {
  Multigraph tri{3, {{0, 1}, {1, 2}, {2, 0}}, {}, {}};
  ForestReport fr = check_forest(tri);
  CHECK(!fr.forest);
  CHECK(!fr.witness_cycle.empty());
  CHECK(!is_tree(tri));

  Multigraph path{3, {{0, 1}, {1, 2}}, {}, {}};
  ForestReport pr = check_forest(path);
  CHECK(pr.forest);
  CHECK(pr.components == 1);
  CHECK(is_tree(path));

  Multigraph loop{1, {{0, 0}}, {}, {}};
  CHECK(!check_forest(loop).forest);

  Multigraph parallel{2, {{0, 1}, {0, 1}}, {}, {}};
  CHECK(!check_forest(parallel).forest);

  Multigraph two{4, {{0, 1}, {2, 3}}, {}, {}};
  ForestReport tr = check_forest(two);
  CHECK(tr.forest);
  CHECK(tr.components == 2);
  CHECK(!is_tree(two));
}

TEST_CASE("collapsing classes keeps the augmented cycle structure") {
  // path u - w - v with u,v identified: a doubled edge appears
  Multigraph path{3, {{0, 1}, {1, 2}}, {}, {}};
  CollapsedGraph cg = collapse_classes(path, {{0, 2}});
  CHECK(cg.g.n == 2);
  REQUIRE(cg.g.edges.size() == 2);
  CHECK(!check_forest(cg.g).forest);
  CHECK(!relative_forest(path, {{0, 2}}).forest);

  // an intra-class edge disappears
  Multigraph single{2, {{0, 1}}, {}, {}};
  CollapsedGraph cs = collapse_classes(single, {{0, 1}});
  CHECK(cs.g.edges.empty());
  CHECK(relative_forest(single, {{0, 1}}).forest);

  // a loop at an unclassed vertex survives
  Multigraph lp{2, {{1, 1}}, {}, {}};
  CHECK(!relative_forest(lp, {{0}}).forest);

  // node order: classes first, then the rest ascending
  Multigraph m{4, {{0, 3}}, {}, {}};
  CollapsedGraph cm = collapse_classes(m, {{1, 3}});
  CHECK(cm.g.n == 3);  // class node, then 0, then 2
  CHECK(cm.vertex_to_node == std::vector<int>{1, 0, 2, 0});
  CHECK(cm.g.edges[0] == std::array<int, 2>{1, 0});
  CHECK(cm.orig_edge == std::vector<int>{0});
  CHECK(is_relative_tree(Multigraph{3, {{0, 1}, {1, 2}}, {}, {}}, {{0, 2}}) == false);
  CHECK(is_relative_tree(Multigraph{3, {{0, 1}}, {}, {}}, {{1, 2}}));
}

TEST_CASE("subpresentation validation") {
  Log g = Log::make({"a", "b", "c", "d", "e", "f"},
                    {{0, 2, 1}, {1, 0, 2}, {3, 5, 4}, {4, 3, 5}, {2, 0, 3}});
  Presentation p = presentation_of(g);
  SubPresentation t1{{0, 1, 2}, {0, 1}};
  SubPresentation t2{{3, 4, 5}, {2, 3}};
  CHECK_NOTHROW(validate_subpresentations(p, {t1, t2}));

  SubPresentation clash{{2, 3}, {}};
  CHECK_THROWS_AS(validate_subpresentations(p, {t1, clash}), Error);

  // not full: relator 1 is supported in t1's generators but not listed
  SubPresentation partial{{0, 1, 2}, {0}};
  CHECK_THROWS_AS(validate_subpresentations(p, {partial}), Error);

  SubPresentation bad_rel{{0, 1, 2}, {0, 99}};
  CHECK_THROWS_AS(validate_subpresentations(p, {bad_rel}), Error);
}

TEST_CASE("relative test collapses whole sub-presentations") {
  Log g = Log::make({"a", "b", "c", "d", "e", "f"},
                    {{0, 2, 1}, {1, 0, 2}, {3, 5, 4}, {4, 3, 5}, {2, 0, 3}});
  Presentation p = presentation_of(g);
  SubPresentation t1{{0, 1, 2}, {0, 1}};
  SubPresentation t2{{3, 4, 5}, {2, 3}};
  StallingsReport rep = relative_stallings_test(p, {t1, t2});
  CHECK(rep.pass);
  // bridge edge [c,a,d]: its positive corner joins c,a inside one class,
  // so the positive side has two isolated class nodes
  CHECK(rep.plus.forest);
  CHECK(!rep.plus.tree);
  CHECK(rep.plus.components == 2);
  CHECK(rep.minus.tree);

  // with no sub-presentations the test degenerates to the plain one
  StallingsReport plain = relative_stallings_test(p, {});
  StallingsReport direct = stallings_test(p);
  CHECK(plain.pass == direct.pass);
  CHECK(plain.side == direct.side);
}

TEST_CASE("report serialization and dot output") {
  Log g = parse_log(fixture("loi3.lot"));
  Presentation p = presentation_of(g);
  StallingsReport rep = stallings_test(p);
  nlohmann::ordered_json j = stallings_to_json(rep);
  CHECK(j["pass"] == true);
  CHECK(j["plus"]["tree"] == true);
  CHECK(j["minus"]["tree"] == true);
  CHECK(j["side"] == "+");

  std::string dot = dot_whitehead(p, +1);
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(dot.find("a") != std::string::npos);
  std::string full = dot_whitehead(p, 0);
  CHECK(full.find("a_plus") != std::string::npos);
  CHECK(full.find("a_minus") != std::string::npos);
}

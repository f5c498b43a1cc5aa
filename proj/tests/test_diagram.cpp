#include <algorithm>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lot/diagram.hpp"
#include "lot/log.hpp"
#include "lot/presentation.hpp"
#include "lot/util.hpp"

using namespace lot;

static std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

static Presentation interval2_pres() {
  return presentation_of(Log::make({"a", "b", "c"}, {{0, 2, 1}, {1, 0, 2}}));
}

// two mirror-image square faces spelling a c b^-1 c^-1
static Diagram doubled_square() {
  return doubled_relator_disc(interval2_pres(), 0);
}

// spherical "beachball": two vertices, four meridian edges, four bigon
// faces; every corner crosses a distinct Whitehead edge
static Presentation beachball_pres() {
  Presentation p;
  p.generators = {"x", "y", "z", "w"};
  p.relators = {Word{{0, +1}, {1, +1}},
                Word{{1, -1}, {2, -1}},
                Word{{2, +1}, {3, +1}},
                Word{{3, -1}, {0, -1}}};
  return p;
}

static Diagram beachball() {
  Diagram d;
  d.n_vertices = 2;
  d.edges = {{"x", 0, 1}, {"y", 1, 0}, {"z", 0, 1}, {"w", 1, 0}};
  d.faces = {DiagFace{{{0, true}, {1, true}}},
             DiagFace{{{1, false}, {2, false}}},
             DiagFace{{{2, true}, {3, true}}},
             DiagFace{{{3, false}, {0, false}}}};
  d.rotation = {{{0, false}, {3, true}, {2, false}, {1, true}},
                {{0, true}, {1, false}, {2, true}, {3, false}}};
  return d;
}

TEST_CASE("face words and relator matching") {
  Diagram d = doubled_square();
  Presentation p = interval2_pres();
  REQUIRE(d.faces.size() == 2);
  Word w = face_word(d, p, 0);
  CHECK(w == p.relators[0]);
  auto m0 = match_face(d, p, 0);
  REQUIRE(m0.has_value());
  CHECK(m0->relator == 0);
  CHECK(m0->sign == +1);
  CHECK(m0->offset == 0);
  auto m1 = match_face(d, p, 1);
  REQUIRE(m1.has_value());
  CHECK(m1->relator == 0);
  CHECK(m1->sign == -1);
}

TEST_CASE("a doubled relator disc is a valid sphere") {
  Diagram d = doubled_square();
  Presentation p = interval2_pres();
  CHECK(d.n_vertices == 4);
  CHECK(d.edges.size() == 4);
  DiagramReport rep = validate_diagram(d, p);
  CHECK(rep.ok);
  CHECK(rep.violations.empty());

  OrientationCensus cen = orientation_census(d);
  CHECK(cen.sinks == std::vector<int>{2});
  CHECK(cen.sources == std::vector<int>{0});
  CHECK(cen.consistent_faces.empty());
  CHECK(cen.zero_sum_faces == std::vector<int>{0, 1});
}

TEST_CASE("mirror corners cancel, so doubles are never vertex-reduced") {
  Diagram d = doubled_square();
  Presentation p = interval2_pres();
  VertexReducedResult vr = is_vertex_reduced(d, p, {});
  CHECK(!vr.reduced);
  CHECK(vr.witness >= 0);
  CHECK(vr.detail.find("opposite directions") != std::string::npos);

  // exempting the relator's sub-presentation waives those crossings
  SubPresentation whole{{0, 1, 2}, {0, 1}};
  CHECK(is_vertex_reduced(d, p, {whole}).reduced);
}

TEST_CASE("the beachball is vertex-reduced") {
  Diagram d = beachball();
  Presentation p = beachball_pres();
  DiagramReport rep = validate_diagram(d, p);
  REQUIRE(rep.ok);

  CHECK(is_vertex_reduced(d, p, {}).reduced);

  OrientationCensus cen = orientation_census(d);
  CHECK(cen.sinks.empty());
  CHECK(cen.sources.empty());
  CHECK(cen.consistent_faces == std::vector<int>{0, 1, 2, 3});
  CHECK(cen.zero_sum_faces.empty());

  std::vector<CornerCycle> cycles = corner_cycles(d, p);
  REQUIRE(cycles.size() == 2);
  CHECK(cycles[0].corners.size() == 4);
  CHECK(cycles[1].corners.size() == 4);
  std::vector<int> seen;
  for (const CornerCycle& cc : cycles)
    for (const LinkEntry& le : cc.corners) seen.push_back(le.corner);
  std::sort(seen.begin(), seen.end());
  CHECK(seen == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});
}

TEST_CASE("validation pinpoints tampering") {
  Presentation p = interval2_pres();

  SUBCASE("missing face breaks pairing and Euler") {
    Diagram d = doubled_square();
    d.faces.pop_back();
    DiagramReport rep = validate_diagram(d, p);
    CHECK(!rep.ok);
    bool pairing = false;
    for (const std::string& v : rep.violations)
      pairing |= v.find("edge pairing") != std::string::npos;
    CHECK(pairing);
  }
  SUBCASE("unknown label") {
    Diagram d = doubled_square();
    d.edges[0].label = "q";
    DiagramReport rep = validate_diagram(d, p);
    CHECK(!rep.ok);
    CHECK(rep.violations[0].find("not a generator") != std::string::npos);
  }
  SUBCASE("open face boundary") {
    Diagram d = doubled_square();
    std::swap(d.faces[0].boundary[1], d.faces[0].boundary[2]);
    DiagramReport rep = validate_diagram(d, p);
    CHECK(!rep.ok);
    bool closed = false;
    for (const std::string& v : rep.violations)
      closed |= v.find("not closed") != std::string::npos;
    CHECK(closed);
  }
  SUBCASE("face word outside the presentation") {
    // swap which relator the presentation offers
    Presentation q = interval2_pres();
    q.relators.erase(q.relators.begin());
    Diagram d = doubled_square();
    DiagramReport rep = validate_diagram(d, q);
    CHECK(!rep.ok);
    bool unknown = false;
    for (const std::string& v : rep.violations)
      unknown |= v.find("unknown boundary word") != std::string::npos;
    CHECK(unknown);
  }
  SUBCASE("mixed chirality is flagged, full mirror is fine") {
    Diagram d = beachball();
    Presentation bp = beachball_pres();
    std::reverse(d.rotation[0].begin(), d.rotation[0].end());
    DiagramReport rep = validate_diagram(d, bp);
    CHECK(!rep.ok);
    bool mixed = false;
    for (const std::string& v : rep.violations)
      mixed |= v.find("mixes orientations") != std::string::npos;
    CHECK(mixed);

    std::reverse(d.rotation[1].begin(), d.rotation[1].end());
    CHECK(validate_diagram(d, bp).ok);
  }
  SUBCASE("shuffled rotation order") {
    Diagram d = beachball();
    std::swap(d.rotation[0][0], d.rotation[0][1]);
    DiagramReport rep = validate_diagram(d, beachball_pres());
    CHECK(!rep.ok);
    bool inconsistent = false;
    for (const std::string& v : rep.violations)
      inconsistent |= v.find("inconsistent with face corners") != std::string::npos;
    CHECK(inconsistent);
  }
}

TEST_CASE("random doubled discs are valid spheres") {
  Log loi3 = parse_log(fixture("loi3.lot"));
  Presentation p = presentation_of(loi3);
  Rng rng(11);
  for (int iter = 0; iter < 25; ++iter) {
    Diagram d = random_doubled_disc(p, rng, 1 + rng.below(6));
    DiagramReport rep = validate_diagram(d, p);
    if (!rep.ok)
      for (const std::string& v : rep.violations) MESSAGE(v);
    REQUIRE(rep.ok);
    CHECK(!is_vertex_reduced(d, p, {}).reduced);
    Diagram back = diagram_from_json(diagram_to_json(d));
    CHECK(back == d);
  }
}

TEST_CASE("diagram json round trips and tolerates omissions") {
  Diagram d = doubled_square();
  nlohmann::ordered_json j = diagram_to_json(d);
  CHECK(j["schema"] == "lotcert/1");
  Diagram back = diagram_from_json(j);
  CHECK(back == d);

  // rotation omitted: induced from the faces
  nlohmann::json stripped = j;
  stripped.erase("rotation");
  Diagram induced = diagram_from_json(stripped);
  CHECK(validate_diagram(induced, interval2_pres()).ok);

  // vertex count omitted: inferred from edges
  nlohmann::json no_v = j;
  no_v.erase("vertices");
  CHECK(diagram_from_json(no_v).n_vertices == d.n_vertices);

  CHECK_THROWS_AS(diagram_from_json(nlohmann::json::array()), Error);
  nlohmann::json bad = j;
  bad["faces"][0][0] = {"x0", "along"};
  CHECK_THROWS_AS(diagram_from_json(bad), Error);
}

TEST_CASE("doubled disc guards") {
  Presentation p = interval2_pres();
  CHECK_THROWS_AS(doubled_relator_disc(p, 9), Error);
  Presentation empty;
  empty.generators = {"a"};
  CHECK_THROWS_AS(doubled_relator_disc(empty, 0), Error);
  Rng rng(1);
  CHECK_THROWS_AS(random_doubled_disc(empty, rng, 3), Error);
  Presentation shorty;
  shorty.generators = {"a"};
  shorty.relators = {Word{{0, +1}}};
  CHECK_THROWS_AS(random_doubled_disc(shorty, rng, 3), Error);
}

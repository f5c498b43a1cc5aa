#include <fstream>
#include <sstream>

#include "doctest.h"
#include "lot/certify.hpp"
#include "lot/log.hpp"
#include "lot/sublot.hpp"
#include "lot/transform.hpp"
#include "lot/util.hpp"

using namespace lot;

static std::string fixture(const std::string& name) {
  std::ifstream in(std::string(FIXTURES_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST_CASE("single vertex certifies trivially") {
  Log g = parse_log("vertices x\n");
  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  CHECK(r.cert->kind == Certificate::Kind::SingleVertex);
  CHECK(check_certificate(g, *r.cert).ok);
}

TEST_CASE("interval certifies without flips") {
  Log g = parse_log(fixture("loi2.lot"));
  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  CHECK(r.cert->kind == Certificate::Kind::Case2);
  CHECK(r.cert->sublots.empty());
  CHECK(r.cert->flips.empty());
  CHECK(r.cert->report.pass);
  CheckResult c = check_certificate(g, *r.cert);
  CHECK(c.ok);
  CHECK(c.relied_on.empty());
}

TEST_CASE("reorientation search flips the bad edge") {
  // [b,c,a],[b,a,c]: both negative corners land on {a,c}
  Log g = Log::make({"a", "b", "c"}, {{1, 2, 0}, {1, 0, 2}});
  ReorientResult rr = find_reorientation(g, {});
  REQUIRE(rr.found);
  CHECK(rr.flips == std::vector<EdgeId>{1});

  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  CHECK(r.cert->kind == Certificate::Kind::Case2);
  CHECK(r.cert->flips == std::vector<EdgeId>{1});
  CHECK(check_certificate(g, *r.cert).ok);
}

TEST_CASE("unreduced input gets a reduction node") {
  Log g = parse_log("vertices a b c d\nedge a c b\nedge b a c\nedge c a d\n");
  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  REQUIRE(r.cert->kind == Certificate::Kind::Reduced);
  CHECK(r.cert->trace.moves.size() == 1);
  REQUIRE(r.cert->inner);
  CHECK(r.cert->inner->kind == Certificate::Kind::Case2);
  CHECK(check_certificate(g, *r.cert).ok);
}

TEST_CASE("triple overlap certifies through the amalgam case") {
  Log g = parse_log(fixture("triple_overlap.lot"));
  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  REQUIRE(r.cert->kind == Certificate::Kind::Case1);
  CHECK(r.cert->ti == std::vector<EdgeId>{0, 1, 2, 3, 4, 5});
  CHECK(r.cert->tj == std::vector<EdgeId>{0, 1, 2, 3, 6, 7});
  CHECK(r.cert->tij == std::vector<EdgeId>{0, 1, 2, 3});
  REQUIRE(r.cert->cert_i);
  REQUIRE(r.cert->cert_j);
  REQUIRE(r.cert->cert_ij);
  CHECK(!contains_assumed(*r.cert));
  CheckResult c = check_certificate(g, *r.cert);
  CHECK(c.ok);
  CHECK(c.relied_on.empty());
}

TEST_CASE("intersections can be a single shared vertex") {
  // maximal sub-LOTs {0,1} and {2,3} share exactly the vertex c
  Log g = Log::make({"a", "b", "c", "d", "e"},
                    {{0, 2, 1}, {1, 0, 2}, {2, 4, 3}, {3, 2, 4}});
  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  REQUIRE(r.cert->kind == Certificate::Kind::Case1);
  CHECK(r.cert->tij.empty());
  CHECK(r.cert->tij_vertex == "c");
  CHECK(r.cert->cert_ij->kind == Certificate::Kind::SingleVertex);
  CHECK(check_certificate(g, *r.cert).ok);
}

TEST_CASE("noninjective tree without assumptions fails with a reason") {
  Log g = parse_log(fixture("noninjective.lot"));
  CertifyResult r = certify(g);
  REQUIRE(!r.ok);
  CHECK(r.path == "(root)");
  CHECK(r.reason.find("relative injectivity failed") == 0);
  CHECK(r.reason.find("not injective") != std::string::npos);
}

TEST_CASE("whole-tree assumption discharges certification") {
  Log g = parse_log(fixture("noninjective.lot"));
  Assumption a{{0, 1, 2}, "externally verified"};
  CertifyResult r = certify(g, {a});
  REQUIRE(r.ok);
  CHECK(r.cert->kind == Certificate::Kind::Assumed);
  CHECK(contains_assumed(*r.cert));
  CheckResult c = check_certificate(g, *r.cert);
  CHECK(c.ok);
  REQUIRE(c.relied_on.size() == 1);
  CHECK(c.relied_on[0].find("externally verified") != std::string::npos);
}

TEST_CASE("assumptions must name sub-LOTs") {
  Log g = parse_log(fixture("noninjective.lot"));
  CHECK_THROWS_AS(certify(g, {Assumption{{0}, "bogus"}}), Error);
  CHECK_THROWS_AS(certify(g, {Assumption{{0, 7}, "bogus"}}), Error);
}

TEST_CASE("assumption matching no decomposition piece is an error") {
  Log g = parse_log(fixture("triple_overlap.lot"));
  // the third maximal sub-LOT is not part of the chosen amalgam pair
  Assumption t2{{1, 2, 4, 5, 6, 7}, "straddles the decomposition"};
  CHECK_THROWS_AS(certify(g, {t2}), Error);
}

TEST_CASE("helpful but unnecessary assumptions never hurt") {
  Log g = parse_log(fixture("triple_overlap.lot"));
  // the spine {1,2} sits inside both amalgam parts and the intersection;
  // the parts certify on their own, so nothing should bury the assumption
  Assumption spine{{1, 2}, "spine attestation"};
  CertifyResult r = certify(g, {spine});
  REQUIRE(r.ok);
  REQUIRE(r.cert->kind == Certificate::Kind::Case1);
  CHECK(!contains_assumed(*r.cert->cert_i));
  CHECK(!contains_assumed(*r.cert->cert_j));
  CHECK(contains_assumed(*r.cert->cert_ij));
  CheckResult c = check_certificate(g, *r.cert);
  CHECK(c.ok);
  REQUIRE(c.relied_on.size() == 1);
  CHECK(c.relied_on[0].find("spine attestation") != std::string::npos);
}

TEST_CASE("assuming the whole intersection is honored") {
  Log g = parse_log(fixture("triple_overlap.lot"));
  Assumption tij{{0, 1, 2, 3}, "intersection attestation"};
  CertifyResult r = certify(g, {tij});
  REQUIRE(r.ok);
  REQUIRE(r.cert->kind == Certificate::Kind::Case1);
  CHECK(r.cert->cert_ij->kind == Certificate::Kind::Assumed);
  CHECK(check_certificate(g, *r.cert).ok);
}

TEST_CASE("certificates survive json round trips") {
  Log g = parse_log(fixture("triple_overlap.lot"));
  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  nlohmann::ordered_json file = cert_file_json(g, *r.cert);
  CHECK(file["schema"] == "lotcert/1");
  CHECK(log_from_json(nlohmann::json(file["lot"])) == g);
  std::unique_ptr<Certificate> back = cert_from_json(file["certificate"]);
  CHECK(check_certificate(g, *back).ok);
  // serialization is stable
  CHECK(cert_to_json(g, *back) == nlohmann::ordered_json(file["certificate"]));
}

TEST_CASE("checker rejects tampered certificates") {
  Log g = parse_log(fixture("triple_overlap.lot"));
  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  nlohmann::ordered_json cert_json = cert_to_json(g, *r.cert);

  SUBCASE("intersection edited") {
    Certificate c;
    c = std::move(*cert_from_json(cert_json));
    c.tij.pop_back();
    CheckResult res = check_certificate(g, c);
    CHECK(!res.ok);
    CHECK(res.reason.find("intersection") != std::string::npos);
  }
  SUBCASE("parts swapped for non-maximal sets") {
    Certificate c = std::move(*cert_from_json(cert_json));
    c.ti = {0, 1, 2, 3};
    CheckResult res = check_certificate(g, c);
    CHECK(!res.ok);
  }
  SUBCASE("wrong kind at the root") {
    Certificate c;
    c.kind = Certificate::Kind::SingleVertex;
    CHECK(!check_certificate(g, c).ok);
  }
  SUBCASE("assumed node with foreign edges") {
    Certificate c;
    c.kind = Certificate::Kind::Assumed;
    c.assumption = {{0, 1}, "fake"};
    CHECK(!check_certificate(g, c).ok);
  }
}

TEST_CASE("checker rejects flips inside sub-LOTs and bogus reports") {
  // path a-b-c-d-e-f-g; {0,1} and {2,3} are label-closed blocks, the bridge
  // edges 4 and 5 carry labels from the far block so neither block extends
  Log g = Log::make(
      {"a", "b", "c", "d", "e", "f", "g"},
      {{0, 2, 1}, {1, 0, 2}, {4, 6, 5}, {5, 4, 6}, {2, 5, 3}, {3, 1, 4}});
  CertifyResult r = certify(g);
  REQUIRE(r.ok);
  REQUIRE(r.cert->kind == Certificate::Kind::Case2);
  REQUIRE(r.cert->sublots.size() == 2);
  CHECK(check_certificate(g, *r.cert).ok);

  Certificate tampered = std::move(*cert_from_json(cert_to_json(g, *r.cert)));
  tampered.flips.push_back(0);  // edge 0 lies inside the first sub-LOT
  CheckResult res = check_certificate(g, tampered);
  CHECK(!res.ok);
  CHECK(res.reason.find("flips") != std::string::npos);
}

TEST_CASE("certify rejects non-trees") {
  Log cyc = Log::make({"a", "b", "c"}, {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}});
  CHECK_THROWS_AS(certify(cyc), Error);
}

TEST_CASE("cert json rejects unknown kinds") {
  nlohmann::json j = {{"kind", "nonsense"}};
  CHECK_THROWS_AS(cert_from_json(j), Error);
}

#pragma once
// Asphericity certificates for LOTs.
//
// certify() builds a recursive certificate:
//
//   SingleVertex  trivial base case (one vertex, no edges)
//   Reduced       a reduction trace plus a certificate for the reduced LOT
//   Case1         two maximal proper sub-LOTs intersect; their union is the
//                 whole LOT and certificates for both parts and for the
//                 intersection combine (the intersection may degenerate to a
//                 single shared vertex, whose inclusion is harmless)
//   Case2         the maximal proper sub-LOTs are pairwise disjoint: after
//                 collapsing them the LOT is injective, and some
//                 reorientation of the edges outside the sub-LOTs makes both
//                 polarities of the Whitehead graph trees relative to the
//                 sub-LOT classes
//   Assumed       externally supplied asphericity of a sub-LOT, matched by
//                 exact edge set; recorded, never verified
//
// check_certificate() re-derives every claim from scratch: traces are
// replayed, sub-LOTs are recomputed and compared, relative injectivity and
// the two-sided relative tree condition are re-run, and flip sets must stay
// outside the collapsed sub-LOTs.  An Assumed node strictly inside a Case1
// side is rejected (the intersection-inclusion argument needs the side's
// certificate to be self-contained or the side itself to be assumed).

#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "lot/log.hpp"
#include "lot/sublot.hpp"
#include "lot/transform.hpp"
#include "lot/whitehead.hpp"

namespace lot {

struct Assumption {
  std::vector<EdgeId> edges;  // sorted edge ids of the assumed sub-LOT
  std::string reason;
  friend bool operator==(const Assumption&, const Assumption&) = default;
};

struct Certificate {
  enum class Kind { SingleVertex, Reduced, Case1, Case2, Assumed };
  Kind kind = Kind::SingleVertex;

  // Reduced
  ReductionTrace trace;
  std::unique_ptr<Certificate> inner;

  // Case1 (edge ids relative to this node's LOT; tij may be empty, then
  // tij_vertex names the single shared vertex)
  std::vector<EdgeId> ti, tj, tij;
  std::string tij_vertex;
  std::unique_ptr<Certificate> cert_i, cert_j, cert_ij;

  // Case2
  std::vector<std::vector<EdgeId>> sublots;
  std::vector<EdgeId> flips;
  StallingsReport report;
  std::vector<std::unique_ptr<Certificate>> subcerts;

  // Assumed
  Assumption assumption;
};

// Search for edge flips (outside the given sub-LOTs, which stay untouched)
// after which both Whitehead graph polarities are trees relative to the
// sub-LOT classes.  Depth-first over the collapsed LOT's edge orientations in
// id order, unflipped branch first, pruning a branch as soon as either
// polarity acquires a cycle; the first full assignment that also verifies on
// the uncollapsed LOT wins, so the returned flip set is minimal in the
// keep-first order.
struct ReorientResult {
  bool found = false;
  std::vector<EdgeId> flips;  // parent edge ids, sorted
  std::string reason;
};
ReorientResult find_reorientation(const Log& t, const std::vector<SubLot>& ts);

struct CertifyResult {
  bool ok = false;
  std::unique_ptr<Certificate> cert;  // set when ok
  std::string reason;                 // set when !ok
  std::string path;                   // node path of the failure
};
CertifyResult certify(const Log& t, const std::vector<Assumption>& assumptions = {});

struct CheckResult {
  bool ok = false;
  std::string reason;
  std::string path;
  std::vector<std::string> relied_on;  // human-readable assumption records
};
CheckResult check_certificate(const Log& t, const Certificate& c);

bool contains_assumed(const Certificate& c);

nlohmann::ordered_json cert_to_json(const Log& t, const Certificate& c);
std::unique_ptr<Certificate> cert_from_json(const nlohmann::json& j);
// full document: {"schema", "lot", "certificate"}
nlohmann::ordered_json cert_file_json(const Log& t, const Certificate& c);

}  // namespace lot

// ---------------------------------------------------------------------------
// Combinatorial spherical diagrams over a presentation.
//
// A diagram is a cell decomposition of the 2-sphere: labeled oriented edges
// between numbered vertices, faces given as closed cyclic dart sequences, and
// an explicit rotation system (the cyclic order of edge-ends around each
// vertex).  A dart traverses an edge either `along` (tail to head, reading the
// label positively) or `against` (reading it inverted).  A diagram is valid
// when every face closes up, every edge is traversed exactly once in each
// direction, every vertex link is a single circle, the rotation system agrees
// with the face corners, Euler's formula V - E + F = 2 holds, the 1-skeleton
// is connected, and every face word is a cyclic permutation of a relator or
// an inverted relator.
//
// Reading the corners around a vertex yields a closed walk in the Whitehead
// graph of the presentation; `is_vertex_reduced` asks whether some vertex
// walk crosses the same Whitehead-graph edge twice in opposite directions,
// ignoring crossings whose relator belongs to one of the designated
// sub-presentations.  `orientation_census` reports sinks, sources,
// consistently oriented faces and faces with balanced direction counts.
// ---------------------------------------------------------------------------
#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lot/presentation.hpp"
#include "lot/util.hpp"
#include "lot/whitehead.hpp"

namespace lot {

struct DiagramEdge {
  std::string label;  // generator name
  int tail = 0;
  int head = 0;
  bool operator==(const DiagramEdge&) const = default;
};

struct Dart {
  int edge = 0;
  bool along = true;
  bool operator==(const Dart&) const = default;
};

struct DiagFace {
  std::vector<Dart> boundary;
  bool operator==(const DiagFace&) const = default;
};

// edge end: the head or tail side of an edge, as listed in a rotation
struct EdgeEnd {
  int edge = 0;
  bool head = false;
  bool operator==(const EdgeEnd&) const = default;
};

struct Diagram {
  int n_vertices = 0;
  std::vector<DiagramEdge> edges;
  std::vector<DiagFace> faces;
  std::vector<std::vector<EdgeEnd>> rotation;  // one cyclic list per vertex
  bool operator==(const Diagram&) const = default;
};

struct DiagramReport {
  bool ok = false;
  std::vector<std::string> violations;
};

// which relator a face spells: word == cyclic shift by `offset` of r^sign
struct FaceMatch {
  int relator = -1;
  int sign = +1;
  int offset = 0;
};

// one corner of the link walk around a vertex
struct LinkEntry {
  int face = -1;     // face owning the corner
  int pos = -1;      // corner sits after boundary[pos]
  int relator = -1;  // relator the face spells
  int rel_pos = -1;  // corner position within that relator
  bool forward = true;
  int corner = -1;  // index into whitehead_graph(p).corners
};

struct CornerCycle {
  int vertex = -1;
  std::vector<LinkEntry> corners;
};

struct VertexReducedResult {
  bool reduced = false;
  int witness = -1;  // vertex carrying a cancelling corner pair
  std::string detail;
};

struct OrientationCensus {
  std::vector<int> sinks, sources;
  std::vector<int> consistent_faces, zero_sum_faces;
};

// the word spelled by a face boundary (throws on labels outside p)
Word face_word(const Diagram& d, const Presentation& p, int face);

// first relator (then +1 before -1, then smallest shift) the face spells
std::optional<FaceMatch> match_face(const Diagram& d, const Presentation& p,
                                    int face);

DiagramReport validate_diagram(const Diagram& d, const Presentation& p);

CornerCycle corner_cycle(const Diagram& d, const Presentation& p, int v);
std::vector<CornerCycle> corner_cycles(const Diagram& d, const Presentation& p);

VertexReducedResult is_vertex_reduced(const Diagram& d, const Presentation& p,
                                      const std::vector<SubPresentation>& ts);

OrientationCensus orientation_census(const Diagram& d);

// sphere made of a relator disc and its mirror image
Diagram doubled_relator_disc(const Presentation& p, int relator);

// sphere made by doubling a disc grown face-by-face along boundary edges;
// may stop below n_faces when no relator fits any boundary edge
Diagram random_doubled_disc(const Presentation& p, Rng& rng, int n_faces);

Diagram diagram_from_json(const nlohmann::json& j);
nlohmann::ordered_json diagram_to_json(const Diagram& d);

}  // namespace lot

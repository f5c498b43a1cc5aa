#pragma once
// Sub-LOTs: connected, label-closed subgraphs with at least one edge.
//
// A sub-LOT is determined by its edge set: connectivity forces the vertex
// set to be exactly the endpoints of the chosen edges, and label-closure
// asks that every label of a chosen edge is among those endpoints.  Edge
// subsets are enumerated by bitmask, so enumeration is capped at 26 edges
// (desk scale; everything here is exponential by nature).

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "lot/log.hpp"
#include "lot/presentation.hpp"

namespace lot {

struct SubLot {
  std::vector<EdgeId> edges;      // sorted ascending
  std::vector<VertexId> vertices; // sorted ascending; == endpoints(edges)
  friend bool operator==(const SubLot&, const SubLot&) = default;
};

// Validates edge ids, connectivity and label-closure; derives the vertices.
SubLot sublot_from_edges(const Log& g, std::vector<EdgeId> edges);
bool is_sublot(const Log& g, const std::vector<EdgeId>& edges,
               std::string* why = nullptr);

// All sub-LOTs, ordered by their sorted edge-id sequence (lexicographically).
std::vector<SubLot> enumerate_sublots(const Log& g);

// Proper sub-LOTs maximal under edge-set inclusion, same order.
std::vector<SubLot> maximal_proper_sublots(const Log& t);

// Standalone LOG for a sub-LOT: vertices and edges keep the parent's order.
// vmap/emap (optional) receive new-id -> parent-id tables.
Log extract_log(const Log& g, const SubLot& s,
                std::vector<VertexId>* vmap = nullptr,
                std::vector<EdgeId>* emap = nullptr);

// Collapse of pairwise vertex-disjoint sub-LOTs: each T_i is contracted to
// its lexicographically smallest vertex (by name), edges inside a T_i drop
// out, all other edges keep their relative order and get dense ids again.
struct Collapse {
  Log collapsed;
  std::vector<VertexId> reps;                      // per class: parent vertex id
  std::vector<std::optional<VertexId>> vertex_map; // parent id -> collapsed id
  std::vector<std::optional<EdgeId>> edge_map;     // parent id -> collapsed id
};
Collapse collapse_sublots(const Log& t, const std::vector<SubLot>& ts);

// Injectivity of the collapsed LOT ("relative injectivity").
struct RelInjectivity {
  bool ok;
  std::string detail;
};
RelInjectivity is_relatively_injective(const Log& t, const std::vector<SubLot>& ts);

// Sub-presentation spanned by a sub-LOT (generators = vertices, relators =
// edge relators).  Full by construction for tree inputs.
SubPresentation sub_presentation(const Log& g, const SubLot& s);

nlohmann::ordered_json sublot_to_json(const Log& g, const SubLot& s);
SubLot sublot_from_json(const Log& g, const nlohmann::json& j);

}  // namespace lot

#pragma once
// Labeled oriented graphs (LOGs) and labeled oriented trees (LOTs).
//
// A LOG is a finite directed graph in which every edge carries a label that
// is itself a vertex: an edge e = [from, label, to] encodes the relation
// from * label = label * to in the associated group presentation.  A LOT is
// a LOG whose underlying undirected graph is a tree.  Single edges between
// the same endpoints may repeat in a general LOG; vertex names are unique
// tokens and keep their declaration order, which fixes the iteration order
// of every downstream algorithm.
//
// Text format (one directive per line, '#' starts a comment):
//   vertices a b c
//   edge a c b        # [from label to]
// A JSON form with the same content is accepted when the input starts with
// '{' (see log_to_json / log_from_json).

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "lot/util.hpp"

namespace lot {

using VertexId = int;  // index into Log::vertex_names(), declaration order
using EdgeId = int;    // dense index into Log::edges()

struct Edge {
  VertexId from;
  VertexId label;
  VertexId to;
  friend bool operator==(const Edge&, const Edge&) = default;
};

class Log {
 public:
  Log() = default;
  // Bulk constructor; validates tokens, uniqueness and edge endpoints.
  static Log make(std::vector<std::string> names, std::vector<Edge> edges);

  VertexId add_vertex(const std::string& name);
  EdgeId add_edge(VertexId from, VertexId label, VertexId to);
  EdgeId add_edge(const std::string& from, const std::string& label,
                  const std::string& to);

  int num_vertices() const { return static_cast<int>(names_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  const std::string& name(VertexId v) const { return names_.at(v); }
  const std::vector<std::string>& vertex_names() const { return names_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }
  const std::vector<Edge>& edges() const { return edges_; }
  std::optional<VertexId> find_vertex(const std::string& name) const;
  VertexId vertex(const std::string& name) const;  // throws if absent

  int valency(VertexId v) const;   // undirected degree; loops count twice
  int label_count(VertexId v) const;
  bool is_label(VertexId v) const { return label_count(v) > 0; }

  friend bool operator==(const Log& a, const Log& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::unordered_map<std::string, VertexId> index_;
};

// Tree check.  ok=false comes with reason "empty", "disconnected" or "cycle".
struct LotCheck {
  bool ok;
  std::string reason;
};
LotCheck is_lot(const Log& g);

// Structural predicates.  boundary_reduced/reduced are defined for trees
// only and stay unset otherwise.  A LOG is
//   injective          if every vertex labels at most one edge,
//   compressed         if no edge is labeled by one of its endpoints,
//   interior_reduced   if no two distinct edges with the same label share a
//                      head or share a tail (i.e. no fold applies),
//   boundary_reduced   if every valency-1 vertex occurs as a label,
//   reduced            if all of the above except injectivity hold.
struct Predicates {
  bool injective = false;
  bool compressed = false;
  bool interior_reduced = false;
  std::optional<bool> boundary_reduced;
  std::optional<bool> reduced;
  std::string detail;  // first violation found, empty if none
};
Predicates predicates(const Log& g);

Log parse_log(const std::string& text);       // DSL or JSON (sniffs '{')
std::string serialize_log(const Log& g);      // canonical DSL

nlohmann::ordered_json log_to_json(const Log& g);
Log log_from_json(const nlohmann::json& j);

}  // namespace lot

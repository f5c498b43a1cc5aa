#pragma once
// Whitehead graphs of presentations and forest-based asphericity tests.
//
// W(P) has vertices x_plus/x_minus per generator x.  Every cyclically
// adjacent letter pair (u, v) of a relator contributes one corner joining
// exit(u) and entry(v), where exit(x)=x_minus, exit(x^-1)=x_plus,
// entry(x)=x_plus, entry(x^-1)=x_minus.  Corners remember their origin
// (relator id, position of u).  W+/W- are the subgraphs spanned by the
// positive/negative vertices.
//
// The positive test: if every relator has total exponent sum zero and W+ or
// W- is a forest, the presentation's standard 2-complex is aspherical.  The
// relative variant collapses prescribed generator classes to single nodes
// (dropping intra-class corners) before the forest check.

#include <array>
#include <string>
#include <vector>

#include <json.hpp>

#include "lot/presentation.hpp"

namespace lot {

// Whitehead-graph vertex encoding: 2*gen for x_plus, 2*gen+1 for x_minus.
inline int wg_plus(int gen) { return 2 * gen; }
inline int wg_minus(int gen) { return 2 * gen + 1; }
inline int wg_gen(int code) { return code / 2; }
inline bool wg_positive(int code) { return (code & 1) == 0; }
std::string wg_name(const Presentation& p, int code);

struct Corner {
  int exit, entry;  // wg-encoded endpoints
  int relator, pos; // origin: relator id and index of the first letter
  friend bool operator==(const Corner&, const Corner&) = default;
};

struct WhiteheadGraph {
  int n_gens = 0;
  std::vector<Corner> corners;
};
WhiteheadGraph whitehead_graph(const Presentation& p);  // errors on empty relator

// Generic undirected multigraph (loops and parallel edges allowed).
struct Multigraph {
  int n = 0;
  std::vector<std::array<int, 2>> edges;
  std::vector<std::string> names;            // optional, size n when present
  std::vector<std::pair<int, int>> tags;     // per edge, e.g. (relator, pos)
};

Multigraph full_graph(const WhiteheadGraph& w, const Presentation& p);
// side: +1 or -1; vertex i of the result is generator i's side vertex
Multigraph restrict_side(const WhiteheadGraph& w, const Presentation& p, int side);

struct ForestReport {
  bool forest = false;
  int components = 0;
  std::vector<int> witness_cycle;   // edge indices closing a cycle, if any
  std::vector<int> spanning_edges;  // accepted forest edges otherwise
};
ForestReport check_forest(const Multigraph& g);
bool is_tree(const Multigraph& g);

// Collapse disjoint vertex classes to single nodes.  Node order: class i ->
// node i, then the remaining vertices ascending.  Edges with both endpoints
// in the same class are dropped; everything else keeps its order (orig_edge
// maps back).  Loops at unclassed vertices survive as loops.
struct CollapsedGraph {
  Multigraph g;
  std::vector<int> vertex_to_node;
  std::vector<std::vector<int>> node_members;
  std::vector<int> orig_edge;
};
CollapsedGraph collapse_classes(const Multigraph& g,
                                const std::vector<std::vector<int>>& classes);
ForestReport relative_forest(const Multigraph& g,
                             const std::vector<std::vector<int>>& classes);
bool is_relative_tree(const Multigraph& g,
                      const std::vector<std::vector<int>>& classes);

struct SideResult {
  bool forest = false;
  bool tree = false;
  int components = 0;
  std::vector<std::pair<int, int>> cycle_corners;     // origins, when cyclic
  std::vector<std::pair<int, int>> spanning_corners;  // origins, when forest
};

struct StallingsReport {
  bool exponent_sums_ok = false;
  std::vector<int> bad_relators;  // nonzero total exponent sum
  SideResult plus, minus;
  int side = 0;  // +1 / -1 side that passed (plus preferred), 0 = neither
  bool pass = false;
};

StallingsReport stallings_test(const Presentation& p);
// throws Error unless ts are pairwise generator-disjoint, stay within p,
// and are full (own every relator supported entirely in their generators)
void validate_subpresentations(const Presentation& p,
                               const std::vector<SubPresentation>& ts);
// ts must be full, pairwise generator-disjoint sub-presentations (throws
// otherwise).  Each T_i's generators form one collapse class on both sides.
StallingsReport relative_stallings_test(const Presentation& p,
                                        const std::vector<SubPresentation>& ts);

nlohmann::ordered_json stallings_to_json(const StallingsReport& r);

// DOT export; side: +1, -1 or 0 for the full graph.
std::string dot_whitehead(const Presentation& p, int side);
std::string dot_collapsed(const Presentation& p, int side,
                          const std::vector<SubPresentation>& ts);

}  // namespace lot

#pragma once
// Reduction moves on LOGs/LOTs.  Each move removes exactly one vertex and
// keeps trees trees; the associated 2-complexes stay homotopy equivalent.
//
//   Compress        edge [a,a,b] or [b,a,a]: drop the edge, merge b into a.
//   BoundaryReduce  edge [a,c,b] (either direction) where a has valency 1
//                   and never occurs as a label: drop edge and a.
//   Fold            edges [a,d,b],[c,d,b] or [b,d,a],[b,d,c] with a != c:
//                   keep the first edge, merge c into a.
//
// reduce() applies moves until none fits, with a fixed scan order (per pass:
// first compressible edge by id, else first foldable pair by (id1,id2), else
// first boundary-reducible edge by id, 'from' endpoint checked before 'to').
// The trace records every move plus the cumulative relabeling of the source
// vertices, so a reduction can be replayed and audited move by move.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "lot/log.hpp"
#include "lot/sublot.hpp"

namespace lot {

struct Move {
  enum class Kind { Compress, BoundaryReduce, Fold };
  Kind kind;
  EdgeId edge = -1;     // compress/boundary: the edge; fold: the kept edge
  EdgeId edge2 = -1;    // fold: the dropped edge
  std::string kept;     // compress/fold
  std::string merged;   // compress/fold
  std::string removed;  // boundary
  friend bool operator==(const Move&, const Move&) = default;
};

// Move application with id tracking: maps are parent id -> new id, nullopt
// for a removed vertex/edge.
struct MoveResult {
  Log log;
  std::vector<std::optional<VertexId>> vertex_map;
  std::vector<std::optional<EdgeId>> edge_map;
};
MoveResult apply_move(const Log& g, const Move& m);  // validates preconditions

std::pair<Log, Move> compress_step(const Log& g, EdgeId e);
std::pair<Log, Move> boundary_reduce_step(const Log& g, EdgeId e);
std::pair<Log, Move> fold_step(const Log& g, EdgeId e1, EdgeId e2);

struct ReductionTrace {
  std::vector<Move> moves;
  // cumulative source-vertex fate, only non-identity entries, in declaration
  // order: name -> surviving name, or nullopt if the vertex was deleted
  std::vector<std::pair<std::string, std::optional<std::string>>> relabel;
};

struct Reduction {
  Log result;
  ReductionTrace trace;
};
Reduction reduce(const Log& t);  // pre: is_lot(t)

// Re-applies a stored trace, validating every move precondition and the
// cumulative relabel map.  Throws on any mismatch.
Log replay(const Log& source, const ReductionTrace& trace);

// Image of a sub-LOT of `source` under the reduction.  nullopt when the
// image degenerates (all its edges got consumed).
std::optional<SubLot> push_sublot(const Log& source, const SubLot& h,
                                  const ReductionTrace& trace);

Log reorient(const Log& g, const std::vector<EdgeId>& flips);

nlohmann::ordered_json trace_to_json(const ReductionTrace& t);
ReductionTrace trace_from_json(const nlohmann::json& j);

}  // namespace lot

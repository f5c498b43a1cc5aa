#include "lot/transform.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lot {

namespace {

// Rebuild a Log with an optional merge (merged -> kept), optional vertex
// deletion and a set of dropped edges.  Survivors keep their relative order.
MoveResult rebuild(const Log& g, std::optional<std::pair<VertexId, VertexId>> merge,
                   std::optional<VertexId> drop_vertex,
                   const std::set<EdgeId>& drop_edges) {
  MoveResult r;
  r.vertex_map.assign(g.num_vertices(), std::nullopt);
  r.edge_map.assign(g.num_edges(), std::nullopt);
  VertexId gone = -1, target = -1;
  if (merge) {
    target = merge->first;
    gone = merge->second;
  }
  if (drop_vertex) gone = *drop_vertex;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == gone) continue;
    r.vertex_map[v] = r.log.add_vertex(g.name(v));
  }
  if (merge) r.vertex_map[gone] = r.vertex_map[target];
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (drop_edges.count(e)) continue;
    const Edge& ed = g.edge(e);
    auto f = r.vertex_map[ed.from], l = r.vertex_map[ed.label], t = r.vertex_map[ed.to];
    if (!f || !l || !t) throw Error("move leaves a dangling edge reference");
    r.edge_map[e] = r.log.add_edge(*f, *l, *t);
  }
  return r;
}

bool compress_pattern(const Log& g, EdgeId e, VertexId* kept, VertexId* merged) {
  const Edge& ed = g.edge(e);
  if (ed.from == ed.to) return false;  // would not remove a vertex
  if (ed.label == ed.from) {
    *kept = ed.from;
    *merged = ed.to;
    return true;
  }
  if (ed.label == ed.to) {
    *kept = ed.to;
    *merged = ed.from;
    return true;
  }
  return false;
}

bool fold_pattern(const Log& g, EdgeId e1, EdgeId e2, VertexId* kept, VertexId* merged) {
  if (e1 == e2) return false;
  const Edge& a = g.edge(e1);
  const Edge& b = g.edge(e2);
  if (a.label != b.label) return false;
  if (a.to == b.to && a.from != b.from) {
    *kept = a.from;
    *merged = b.from;
    return true;
  }
  if (a.from == b.from && a.to != b.to) {
    *kept = a.to;
    *merged = b.to;
    return true;
  }
  return false;
}

// qualifying endpoint for a boundary reduction, 'from' checked first
std::optional<VertexId> boundary_endpoint(const Log& g, EdgeId e) {
  const Edge& ed = g.edge(e);
  for (VertexId v : {ed.from, ed.to}) {
    if (g.valency(v) == 1 && !g.is_label(v)) return v;
  }
  return std::nullopt;
}

}  // namespace

MoveResult apply_move(const Log& g, const Move& m) {
  switch (m.kind) {
    case Move::Kind::Compress: {
      if (m.edge < 0 || m.edge >= g.num_edges()) throw Error("compress: bad edge id");
      VertexId kept, merged;
      if (!compress_pattern(g, m.edge, &kept, &merged))
        throw Error("compress: edge " + std::to_string(m.edge) +
                    " is not labeled by an endpoint");
      if (g.name(kept) != m.kept || g.name(merged) != m.merged)
        throw Error("compress: recorded vertices do not match edge " +
                    std::to_string(m.edge));
      return rebuild(g, std::make_pair(kept, merged), std::nullopt, {m.edge});
    }
    case Move::Kind::BoundaryReduce: {
      if (m.edge < 0 || m.edge >= g.num_edges()) throw Error("boundary: bad edge id");
      const Edge& ed = g.edge(m.edge);
      auto v = g.find_vertex(m.removed);
      if (!v || (*v != ed.from && *v != ed.to))
        throw Error("boundary: removed vertex is not an endpoint of edge " +
                    std::to_string(m.edge));
      if (g.valency(*v) != 1)
        throw Error("boundary: vertex " + m.removed + " has valency != 1");
      if (g.is_label(*v))
        throw Error("boundary: vertex " + m.removed + " occurs as a label");
      return rebuild(g, std::nullopt, *v, {m.edge});
    }
    case Move::Kind::Fold: {
      if (m.edge < 0 || m.edge >= g.num_edges() || m.edge2 < 0 ||
          m.edge2 >= g.num_edges())
        throw Error("fold: bad edge id");
      VertexId kept, merged;
      if (!fold_pattern(g, m.edge, m.edge2, &kept, &merged))
        throw Error("fold: edges " + std::to_string(m.edge) + "," +
                    std::to_string(m.edge2) + " are not foldable");
      if (g.name(kept) != m.kept || g.name(merged) != m.merged)
        throw Error("fold: recorded vertices do not match");
      return rebuild(g, std::make_pair(kept, merged), std::nullopt, {m.edge2});
    }
  }
  throw Error("unreachable");
}

std::pair<Log, Move> compress_step(const Log& g, EdgeId e) {
  VertexId kept, merged;
  if (e < 0 || e >= g.num_edges() || !compress_pattern(g, e, &kept, &merged))
    throw Error("edge " + std::to_string(e) + " is not compressible");
  Move m{Move::Kind::Compress, e, -1, g.name(kept), g.name(merged), ""};
  return {apply_move(g, m).log, m};
}

std::pair<Log, Move> boundary_reduce_step(const Log& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) throw Error("bad edge id");
  auto v = boundary_endpoint(g, e);
  if (!v) throw Error("edge " + std::to_string(e) + " has no boundary-reducible endpoint");
  Move m{Move::Kind::BoundaryReduce, e, -1, "", "", g.name(*v)};
  return {apply_move(g, m).log, m};
}

std::pair<Log, Move> fold_step(const Log& g, EdgeId e1, EdgeId e2) {
  VertexId kept, merged;
  if (e1 < 0 || e1 >= g.num_edges() || e2 < 0 || e2 >= g.num_edges() ||
      !fold_pattern(g, e1, e2, &kept, &merged))
    throw Error("edges " + std::to_string(e1) + "," + std::to_string(e2) +
                " are not foldable");
  Move m{Move::Kind::Fold, e1, e2, g.name(kept), g.name(merged), ""};
  return {apply_move(g, m).log, m};
}

namespace {

std::optional<Move> first_move(const Log& g) {
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    VertexId k, m;
    if (compress_pattern(g, e, &k, &m))
      return Move{Move::Kind::Compress, e, -1, g.name(k), g.name(m), ""};
  }
  for (EdgeId i = 0; i < g.num_edges(); ++i)
    for (EdgeId j = i + 1; j < g.num_edges(); ++j) {
      VertexId k, m;
      if (fold_pattern(g, i, j, &k, &m))
        return Move{Move::Kind::Fold, i, j, g.name(k), g.name(m), ""};
    }
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (auto v = boundary_endpoint(g, e))
      return Move{Move::Kind::BoundaryReduce, e, -1, "", "", g.name(*v)};
  }
  return std::nullopt;
}

// fold the move's effect into a cumulative name map (original -> current)
void update_relabel(std::vector<std::pair<std::string, std::optional<std::string>>>& map,
                    const Move& m) {
  for (auto& [orig, cur] : map) {
    (void)orig;
    if (!cur) continue;
    if (m.kind == Move::Kind::BoundaryReduce) {
      if (*cur == m.removed) cur = std::nullopt;
    } else {
      if (*cur == m.merged) cur = m.kept;
    }
  }
}

}  // namespace

Reduction reduce(const Log& t) {
  LotCheck lc = is_lot(t);
  if (!lc.ok) throw Error("reduce: input is not a LOT (" + lc.reason + ")");
  Reduction r;
  std::vector<std::pair<std::string, std::optional<std::string>>> full;
  for (const std::string& n : t.vertex_names()) full.emplace_back(n, n);
  r.result = t;
  while (auto m = first_move(r.result)) {
    r.result = apply_move(r.result, *m).log;
    update_relabel(full, *m);
    r.trace.moves.push_back(*m);
  }
  for (auto& [orig, cur] : full)
    if (!cur || *cur != orig) r.trace.relabel.emplace_back(orig, cur);
  // each move removes exactly one vertex
  if (t.num_vertices() - r.result.num_vertices() !=
      static_cast<int>(r.trace.moves.size()))
    throw Error("reduce: move count does not match vertex count drop");
  return r;
}

Log replay(const Log& source, const ReductionTrace& trace) {
  Log cur = source;
  std::vector<std::pair<std::string, std::optional<std::string>>> full;
  for (const std::string& n : source.vertex_names()) full.emplace_back(n, n);
  for (const Move& m : trace.moves) {
    cur = apply_move(cur, m).log;
    update_relabel(full, m);
  }
  // order-insensitive: JSON round-trips may reorder object keys
  std::map<std::string, std::optional<std::string>> changed, expect(
      trace.relabel.begin(), trace.relabel.end());
  for (auto& [orig, curname] : full)
    if (!curname || *curname != orig) changed.emplace(orig, curname);
  if (changed != expect) throw Error("replay: relabel map does not match");
  return cur;
}

std::optional<SubLot> push_sublot(const Log& source, const SubLot& h,
                                  const ReductionTrace& trace) {
  std::string why;
  if (!is_sublot(source, h.edges, &why))
    throw Error("push_sublot: not a sub-LOT of the source: " + why);
  Log cur = source;
  std::set<EdgeId> image(h.edges.begin(), h.edges.end());
  for (const Move& m : trace.moves) {
    MoveResult res = apply_move(cur, m);
    if (m.kind == Move::Kind::Fold && image.count(m.edge2)) {
      // the dropped edge maps onto the kept one
      image.erase(m.edge2);
      image.insert(m.edge);
    }
    std::set<EdgeId> next;
    for (EdgeId e : image)
      if (res.edge_map[e]) next.insert(*res.edge_map[e]);
    image = std::move(next);
    cur = std::move(res.log);
  }
  if (image.empty()) return std::nullopt;
  // connectivity and label-closure survive the moves; this validates
  return sublot_from_edges(cur, {image.begin(), image.end()});
}

Log reorient(const Log& g, const std::vector<EdgeId>& flips) {
  std::set<EdgeId> f(flips.begin(), flips.end());
  if (f.size() != flips.size()) throw Error("reorient: repeated edge id");
  for (EdgeId e : f)
    if (e < 0 || e >= g.num_edges()) throw Error("reorient: bad edge id");
  std::vector<Edge> es = g.edges();
  for (EdgeId e : f) std::swap(es[e].from, es[e].to);
  return Log::make(g.vertex_names(), es);
}

nlohmann::ordered_json trace_to_json(const ReductionTrace& t) {
  nlohmann::ordered_json j;
  auto& moves = j["moves"] = nlohmann::ordered_json::array();
  for (const Move& m : t.moves) {
    nlohmann::ordered_json jm;
    switch (m.kind) {
      case Move::Kind::Compress:
        jm["kind"] = "compress";
        jm["edge"] = m.edge;
        jm["kept"] = m.kept;
        jm["merged"] = m.merged;
        break;
      case Move::Kind::BoundaryReduce:
        jm["kind"] = "boundary_reduce";
        jm["edge"] = m.edge;
        jm["removed"] = m.removed;
        break;
      case Move::Kind::Fold:
        jm["kind"] = "fold";
        jm["edge1"] = m.edge;
        jm["edge2"] = m.edge2;
        jm["kept"] = m.kept;
        jm["merged"] = m.merged;
        break;
    }
    moves.push_back(std::move(jm));
  }
  auto& rl = j["relabel"] = nlohmann::ordered_json::object();
  for (const auto& [orig, cur] : t.relabel) {
    if (cur)
      rl[orig] = *cur;
    else
      rl[orig] = nullptr;
  }
  return j;
}

ReductionTrace trace_from_json(const nlohmann::json& j) {
  ReductionTrace t;
  for (const auto& jm : j.at("moves")) {
    Move m;
    std::string kind = jm.at("kind").get<std::string>();
    if (kind == "compress") {
      m.kind = Move::Kind::Compress;
      m.edge = jm.at("edge").get<int>();
      m.kept = jm.at("kept").get<std::string>();
      m.merged = jm.at("merged").get<std::string>();
    } else if (kind == "boundary_reduce") {
      m.kind = Move::Kind::BoundaryReduce;
      m.edge = jm.at("edge").get<int>();
      m.removed = jm.at("removed").get<std::string>();
    } else if (kind == "fold") {
      m.kind = Move::Kind::Fold;
      m.edge = jm.at("edge1").get<int>();
      m.edge2 = jm.at("edge2").get<int>();
      m.kept = jm.at("kept").get<std::string>();
      m.merged = jm.at("merged").get<std::string>();
    } else {
      throw Error("unknown move kind '" + kind + "'");
    }
    t.moves.push_back(std::move(m));
  }
  if (j.contains("relabel")) {
    for (auto it = j["relabel"].begin(); it != j["relabel"].end(); ++it) {
      if (it.value().is_null())
        t.relabel.emplace_back(it.key(), std::nullopt);
      else
        t.relabel.emplace_back(it.key(), it.value().get<std::string>());
    }
  }
  return t;
}

}  // namespace lot

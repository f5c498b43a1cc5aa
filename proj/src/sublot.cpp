#include "lot/sublot.hpp"

#include <algorithm>
#include <set>

namespace lot {

namespace {

std::vector<VertexId> endpoint_set(const Log& g, const std::vector<EdgeId>& edges) {
  std::set<VertexId> vs;
  for (EdgeId e : edges) {
    vs.insert(g.edge(e).from);
    vs.insert(g.edge(e).to);
  }
  return {vs.begin(), vs.end()};
}

bool connected_edges(const Log& g, const std::vector<EdgeId>& edges) {
  if (edges.empty()) return false;
  std::vector<VertexId> vs = endpoint_set(g, edges);
  auto local = [&](VertexId v) {
    return static_cast<int>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
  };
  std::vector<std::vector<int>> adj(vs.size());
  for (EdgeId e : edges) {
    int a = local(g.edge(e).from), b = local(g.edge(e).to);
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(vs.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  size_t reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == vs.size();
}

}  // namespace

bool is_sublot(const Log& g, const std::vector<EdgeId>& edges, std::string* why) {
  auto fail = [&](const std::string& s) {
    if (why) *why = s;
    return false;
  };
  if (edges.empty()) return fail("no edges");
  for (EdgeId e : edges)
    if (e < 0 || e >= g.num_edges()) return fail("bad edge id " + std::to_string(e));
  std::set<EdgeId> uniq(edges.begin(), edges.end());
  if (uniq.size() != edges.size()) return fail("repeated edge id");
  std::vector<EdgeId> es(uniq.begin(), uniq.end());
  if (!connected_edges(g, es)) return fail("not connected");
  std::vector<VertexId> vs = endpoint_set(g, es);
  for (EdgeId e : es) {
    VertexId l = g.edge(e).label;
    if (!std::binary_search(vs.begin(), vs.end(), l))
      return fail("label " + g.name(l) + " of edge " + std::to_string(e) +
                  " is not a vertex of the subgraph");
  }
  return true;
}

SubLot sublot_from_edges(const Log& g, std::vector<EdgeId> edges) {
  std::string why;
  if (!is_sublot(g, edges, &why)) throw Error("not a sub-LOT: " + why);
  std::sort(edges.begin(), edges.end());
  SubLot s;
  s.edges = std::move(edges);
  s.vertices = endpoint_set(g, s.edges);
  return s;
}

std::vector<SubLot> enumerate_sublots(const Log& g) {
  int m = g.num_edges();
  if (m > 26) throw Error("enumerate_sublots: too many edges (max 26)");
  std::vector<SubLot> out;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::vector<EdgeId> es;
    for (int i = 0; i < m; ++i)
      if (mask & (1u << i)) es.push_back(i);
    if (is_sublot(g, es)) out.push_back(sublot_from_edges(g, es));
  }
  std::sort(out.begin(), out.end(),
            [](const SubLot& a, const SubLot& b) { return a.edges < b.edges; });
  return out;
}

std::vector<SubLot> maximal_proper_sublots(const Log& t) {
  std::vector<SubLot> all = enumerate_sublots(t);
  std::vector<SubLot> out;
  for (const SubLot& s : all) {
    if (static_cast<int>(s.edges.size()) == t.num_edges()) continue;  // proper only
    bool maximal = true;
    for (const SubLot& u : all) {
      if (static_cast<int>(u.edges.size()) == t.num_edges()) continue;
      if (u.edges.size() <= s.edges.size() || u == s) continue;
      if (std::includes(u.edges.begin(), u.edges.end(), s.edges.begin(),
                        s.edges.end())) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  return out;
}

Log extract_log(const Log& g, const SubLot& s, std::vector<VertexId>* vmap,
                std::vector<EdgeId>* emap) {
  // parent declaration order, restricted to the sub-LOT's vertices
  std::vector<VertexId> verts;
  for (VertexId v = 0; v < g.num_vertices(); ++v)
    if (std::binary_search(s.vertices.begin(), s.vertices.end(), v))
      verts.push_back(v);
  std::vector<int> local(g.num_vertices(), -1);
  Log out;
  for (VertexId v : verts) local[v] = out.add_vertex(g.name(v));
  for (EdgeId e : s.edges) {
    const Edge& ed = g.edge(e);
    if (local[ed.label] < 0) throw Error("extract_log: sub-LOT not label-closed");
    out.add_edge(local[ed.from], local[ed.label], local[ed.to]);
  }
  if (vmap) *vmap = verts;
  if (emap) *emap = s.edges;
  return out;
}

Collapse collapse_sublots(const Log& t, const std::vector<SubLot>& ts) {
  int n = t.num_vertices();
  std::vector<int> cls(n, -1);  // vertex -> class index
  for (size_t i = 0; i < ts.size(); ++i) {
    std::string why;
    if (!is_sublot(t, ts[i].edges, &why))
      throw Error("collapse_sublots: class " + std::to_string(i) +
                  " is not a sub-LOT: " + why);
    for (VertexId v : ts[i].vertices) {
      if (cls[v] != -1)
        throw Error("collapse_sublots: sub-LOTs overlap at vertex " + t.name(v));
      cls[v] = static_cast<int>(i);
    }
  }

  // representative = lexicographically smallest vertex name in the class
  std::vector<VertexId> reps(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) {
    VertexId best = ts[i].vertices.front();
    for (VertexId v : ts[i].vertices)
      if (t.name(v) < t.name(best)) best = v;
    reps[i] = best;
  }

  std::vector<VertexId> target(n);  // vertex -> surviving parent vertex
  for (VertexId v = 0; v < n; ++v) target[v] = cls[v] < 0 ? v : reps[cls[v]];

  std::vector<char> edge_inside(t.num_edges(), 0);
  for (const SubLot& s : ts)
    for (EdgeId e : s.edges) edge_inside[e] = 1;

  Collapse c;
  c.reps = reps;
  c.vertex_map.assign(n, std::nullopt);
  std::vector<int> local(n, -1);
  for (VertexId v = 0; v < n; ++v) {
    if (target[v] != v) continue;
    local[v] = c.collapsed.add_vertex(t.name(v));
  }
  for (VertexId v = 0; v < n; ++v) c.vertex_map[v] = local[target[v]];

  c.edge_map.assign(t.num_edges(), std::nullopt);
  for (EdgeId e = 0; e < t.num_edges(); ++e) {
    if (edge_inside[e]) continue;
    const Edge& ed = t.edge(e);
    c.edge_map[e] = c.collapsed.add_edge(local[target[ed.from]],
                                         local[target[ed.label]],
                                         local[target[ed.to]]);
  }
  return c;
}

RelInjectivity is_relatively_injective(const Log& t, const std::vector<SubLot>& ts) {
  Collapse c = collapse_sublots(t, ts);
  Predicates p = predicates(c.collapsed);
  if (p.injective) return {true, ""};
  return {false, "collapsed LOT is not injective: " + p.detail};
}

SubPresentation sub_presentation(const Log& g, const SubLot& s) {
  (void)g;  // ids are shared between the Log and its presentation
  SubPresentation sp;
  sp.gens = s.vertices;
  sp.relators = s.edges;
  return sp;
}

nlohmann::ordered_json sublot_to_json(const Log& g, const SubLot& s) {
  nlohmann::ordered_json j;
  j["edges"] = s.edges;
  auto& vs = j["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v : s.vertices) vs.push_back(g.name(v));
  return j;
}

SubLot sublot_from_json(const Log& g, const nlohmann::json& j) {
  std::vector<EdgeId> es;
  for (const auto& e : j.at("edges")) es.push_back(e.get<int>());
  SubLot s = sublot_from_edges(g, es);
  if (j.contains("vertices")) {
    std::vector<VertexId> vs;
    for (const auto& v : j["vertices"]) vs.push_back(g.vertex(v.get<std::string>()));
    std::sort(vs.begin(), vs.end());
    if (vs != s.vertices)
      throw Error("sub-LOT JSON: vertices do not match edge endpoints");
  }
  return s;
}

}  // namespace lot

#include "lot/whitehead.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace lot {

std::string wg_name(const Presentation& p, int code) {
  return p.generators.at(wg_gen(code)) + (wg_positive(code) ? "_plus" : "_minus");
}

WhiteheadGraph whitehead_graph(const Presentation& p) {
  WhiteheadGraph w;
  w.n_gens = static_cast<int>(p.generators.size());
  for (int r = 0; r < static_cast<int>(p.relators.size()); ++r) {
    const Word& word = p.relators[r];
    int m = static_cast<int>(word.size());
    if (m == 0) throw Error("whitehead_graph: relator " + std::to_string(r) + " is empty");
    for (int k = 0; k < m; ++k) {
      const Letter& u = word[k];
      const Letter& v = word[(k + 1) % m];
      int exit = u.sign > 0 ? wg_minus(u.gen) : wg_plus(u.gen);
      int entry = v.sign > 0 ? wg_plus(v.gen) : wg_minus(v.gen);
      w.corners.push_back({exit, entry, r, k});
    }
  }
  return w;
}

Multigraph full_graph(const WhiteheadGraph& w, const Presentation& p) {
  Multigraph g;
  g.n = 2 * w.n_gens;
  for (int c = 0; c < g.n; ++c) g.names.push_back(wg_name(p, c));
  for (const Corner& c : w.corners) {
    g.edges.push_back({c.exit, c.entry});
    g.tags.emplace_back(c.relator, c.pos);
  }
  return g;
}

Multigraph restrict_side(const WhiteheadGraph& w, const Presentation& p, int side) {
  if (side != 1 && side != -1) throw Error("restrict_side: side must be +1 or -1");
  bool pos = side > 0;
  Multigraph g;
  g.n = w.n_gens;
  for (int i = 0; i < w.n_gens; ++i)
    g.names.push_back(p.generators[i] + (pos ? "_plus" : "_minus"));
  for (const Corner& c : w.corners) {
    if (wg_positive(c.exit) == pos && wg_positive(c.entry) == pos) {
      g.edges.push_back({wg_gen(c.exit), wg_gen(c.entry)});
      g.tags.emplace_back(c.relator, c.pos);
    }
  }
  return g;
}

namespace {

struct UnionFind {
  std::vector<int> parent, rank_;
  explicit UnionFind(int n) : parent(n), rank_(n, 0) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    return true;
  }
};

}  // namespace

ForestReport check_forest(const Multigraph& g) {
  ForestReport r;
  UnionFind uf(g.n);
  // adjacency over accepted edges, for cycle reconstruction
  std::vector<std::vector<std::pair<int, int>>> adj(g.n);  // (neighbor, edge)
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int u = g.edges[e][0], v = g.edges[e][1];
    if (u == v) {
      r.witness_cycle = {e};
      r.forest = false;
      r.components = 0;
      return r;
    }
    if (!uf.unite(u, v)) {
      // path u..v through the current forest plus e closes a cycle
      std::vector<int> prev_edge(g.n, -1), prev_node(g.n, -1);
      std::queue<int> q;
      q.push(u);
      std::vector<char> seen(g.n, 0);
      seen[u] = 1;
      while (!q.empty() && !seen[v]) {
        int x = q.front();
        q.pop();
        for (auto [y, ee] : adj[x]) {
          if (seen[y]) continue;
          seen[y] = 1;
          prev_edge[y] = ee;
          prev_node[y] = x;
          q.push(y);
        }
      }
      std::vector<int> cyc{e};
      for (int x = v; x != u; x = prev_node[x]) cyc.push_back(prev_edge[x]);
      r.witness_cycle = std::move(cyc);
      r.forest = false;
      r.components = 0;
      return r;
    }
    adj[u].emplace_back(v, e);
    adj[v].emplace_back(u, e);
    r.spanning_edges.push_back(e);
  }
  r.forest = true;
  r.components = g.n - static_cast<int>(r.spanning_edges.size());
  return r;
}

bool is_tree(const Multigraph& g) {
  ForestReport r = check_forest(g);
  return r.forest && g.n >= 1 && r.components == 1;
}

CollapsedGraph collapse_classes(const Multigraph& g,
                                const std::vector<std::vector<int>>& classes) {
  std::vector<int> cls(g.n, -1);
  for (size_t i = 0; i < classes.size(); ++i) {
    if (classes[i].empty()) throw Error("collapse_classes: empty class");
    for (int v : classes[i]) {
      if (v < 0 || v >= g.n) throw Error("collapse_classes: bad vertex");
      if (cls[v] != -1) throw Error("collapse_classes: classes overlap");
      cls[v] = static_cast<int>(i);
    }
  }
  CollapsedGraph c;
  c.vertex_to_node.assign(g.n, -1);
  int k = static_cast<int>(classes.size());
  c.g.n = k;
  c.node_members.assign(k, {});
  for (size_t i = 0; i < classes.size(); ++i) c.node_members[i] = classes[i];
  for (int v = 0; v < g.n; ++v) {
    if (cls[v] >= 0) {
      c.vertex_to_node[v] = cls[v];
    } else {
      c.vertex_to_node[v] = c.g.n++;
      c.node_members.push_back({v});
    }
  }
  if (!g.names.empty()) {
    c.g.names.resize(c.g.n);
    for (int node = 0; node < c.g.n; ++node) {
      std::vector<std::string> ms;
      for (int v : c.node_members[node]) ms.push_back(g.names[v]);
      c.g.names[node] = ms.size() == 1 ? ms[0] : "{" + join(ms, ",") + "}";
    }
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    int u = g.edges[e][0], v = g.edges[e][1];
    if (cls[u] >= 0 && cls[u] == cls[v]) continue;  // intra-class corner
    c.g.edges.push_back({c.vertex_to_node[u], c.vertex_to_node[v]});
    if (!g.tags.empty()) c.g.tags.push_back(g.tags[e]);
    c.orig_edge.push_back(e);
  }
  return c;
}

ForestReport relative_forest(const Multigraph& g,
                             const std::vector<std::vector<int>>& classes) {
  CollapsedGraph c = collapse_classes(g, classes);
  ForestReport r = check_forest(c.g);
  for (int& e : r.witness_cycle) e = c.orig_edge[e];
  for (int& e : r.spanning_edges) e = c.orig_edge[e];
  return r;
}

bool is_relative_tree(const Multigraph& g,
                      const std::vector<std::vector<int>>& classes) {
  CollapsedGraph c = collapse_classes(g, classes);
  ForestReport r = check_forest(c.g);
  return r.forest && c.g.n >= 1 && r.components == 1;
}

namespace {

SideResult side_result_from(const Multigraph& m, const ForestReport& fr, int n_nodes) {
  SideResult s;
  s.forest = fr.forest;
  s.components = fr.components;
  s.tree = fr.forest && n_nodes >= 1 && fr.components == 1;
  for (int e : fr.witness_cycle)
    s.cycle_corners.push_back(m.tags.empty() ? std::make_pair(-1, e) : m.tags[e]);
  for (int e : fr.spanning_edges)
    s.spanning_corners.push_back(m.tags.empty() ? std::make_pair(-1, e) : m.tags[e]);
  return s;
}

}  // namespace

void validate_subpresentations(const Presentation& p,
                               const std::vector<SubPresentation>& ts) {
  int ng = static_cast<int>(p.generators.size());
  int nr = static_cast<int>(p.relators.size());
  std::vector<int> owner(ng, -1);
  for (size_t i = 0; i < ts.size(); ++i) {
    if (ts[i].gens.empty())
      throw Error("sub-presentation " + std::to_string(i) + " has no generators");
    for (int g : ts[i].gens) {
      if (g < 0 || g >= ng) throw Error("sub-presentation: bad generator id");
      if (owner[g] != -1)
        throw Error("sub-presentations share generator " + p.generators[g]);
      owner[g] = static_cast<int>(i);
    }
  }
  std::vector<std::set<int>> rels(ts.size());
  for (size_t i = 0; i < ts.size(); ++i) {
    for (int r : ts[i].relators) {
      if (r < 0 || r >= nr) throw Error("sub-presentation: bad relator id");
      rels[i].insert(r);
      for (const Letter& l : p.relators[r])
        if (owner[l.gen] != static_cast<int>(i))
          throw Error("relator " + std::to_string(r) +
                      " uses generators outside its sub-presentation");
    }
  }
  // fullness: a relator whose letters all lie in T_i must belong to T_i
  for (int r = 0; r < nr; ++r) {
    for (size_t i = 0; i < ts.size(); ++i) {
      bool inside = !p.relators[r].empty();
      for (const Letter& l : p.relators[r])
        if (owner[l.gen] != static_cast<int>(i)) {
          inside = false;
          break;
        }
      if (inside && !rels[i].count(r))
        throw Error("sub-presentation " + std::to_string(i) +
                    " is not full: relator " + std::to_string(r) + " missing");
    }
  }
}

StallingsReport stallings_test(const Presentation& p) {
  StallingsReport rep;
  ExponentSums s = exponent_sums(p);
  rep.exponent_sums_ok = s.all_totals_zero;
  for (int r = 0; r < static_cast<int>(s.totals.size()); ++r)
    if (s.totals[r] != 0) rep.bad_relators.push_back(r);
  WhiteheadGraph w = whitehead_graph(p);
  Multigraph plus = restrict_side(w, p, +1);
  Multigraph minus = restrict_side(w, p, -1);
  rep.plus = side_result_from(plus, check_forest(plus), plus.n);
  rep.minus = side_result_from(minus, check_forest(minus), minus.n);
  rep.side = rep.plus.forest ? +1 : rep.minus.forest ? -1 : 0;
  rep.pass = rep.exponent_sums_ok && rep.side != 0;
  return rep;
}

StallingsReport relative_stallings_test(const Presentation& p,
                                        const std::vector<SubPresentation>& ts) {
  validate_subpresentations(p, ts);
  StallingsReport rep;
  ExponentSums s = exponent_sums(p);
  rep.exponent_sums_ok = s.all_totals_zero;
  for (int r = 0; r < static_cast<int>(s.totals.size()); ++r)
    if (s.totals[r] != 0) rep.bad_relators.push_back(r);
  WhiteheadGraph w = whitehead_graph(p);
  std::vector<std::vector<int>> classes;
  for (const SubPresentation& t : ts) classes.push_back(t.gens);
  for (int side : {+1, -1}) {
    Multigraph m = restrict_side(w, p, side);
    CollapsedGraph c = collapse_classes(m, classes);
    ForestReport fr = check_forest(c.g);
    // map witnesses back to corner origins
    ForestReport orig = fr;
    for (int& e : orig.witness_cycle) e = c.orig_edge[e];
    for (int& e : orig.spanning_edges) e = c.orig_edge[e];
    SideResult sr;
    sr.forest = fr.forest;
    sr.components = fr.components;
    sr.tree = fr.forest && c.g.n >= 1 && fr.components == 1;
    for (int e : orig.witness_cycle) sr.cycle_corners.push_back(m.tags[e]);
    for (int e : orig.spanning_edges) sr.spanning_corners.push_back(m.tags[e]);
    (side > 0 ? rep.plus : rep.minus) = sr;
  }
  rep.side = rep.plus.forest ? +1 : rep.minus.forest ? -1 : 0;
  rep.pass = rep.exponent_sums_ok && rep.side != 0;
  return rep;
}

nlohmann::ordered_json stallings_to_json(const StallingsReport& r) {
  auto side_json = [](const SideResult& s) {
    nlohmann::ordered_json j;
    j["forest"] = s.forest;
    j["tree"] = s.tree;
    j["components"] = s.components;
    auto corners = nlohmann::ordered_json::array();
    for (auto [rel, pos] : (s.forest ? s.spanning_corners : s.cycle_corners))
      corners.push_back({{"relator", rel}, {"pos", pos}});
    j[s.forest ? "spanning_corners" : "cycle_corners"] = std::move(corners);
    return j;
  };
  nlohmann::ordered_json j;
  j["exponent_sums_ok"] = r.exponent_sums_ok;
  j["bad_relators"] = r.bad_relators;
  j["plus"] = side_json(r.plus);
  j["minus"] = side_json(r.minus);
  j["side"] = r.side == 0 ? "none" : (r.side > 0 ? "+" : "-");
  j["pass"] = r.pass;
  return j;
}

namespace {

std::string dot_of(const Multigraph& g, const std::string& graph_name) {
  std::string out = "graph " + graph_name + " {\n";
  for (int v = 0; v < g.n; ++v) {
    std::string nm = g.names.empty() ? "n" + std::to_string(v) : g.names[v];
    out += "  \"" + nm + "\";\n";
  }
  for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
    std::string a = g.names.empty() ? "n" + std::to_string(g.edges[e][0])
                                    : g.names[g.edges[e][0]];
    std::string b = g.names.empty() ? "n" + std::to_string(g.edges[e][1])
                                    : g.names[g.edges[e][1]];
    out += "  \"" + a + "\" -- \"" + b + "\"";
    if (!g.tags.empty())
      out += " [label=\"relator=" + std::to_string(g.tags[e].first) +
             ",pos=" + std::to_string(g.tags[e].second) + "\"]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace

std::string dot_whitehead(const Presentation& p, int side) {
  WhiteheadGraph w = whitehead_graph(p);
  Multigraph g = side == 0 ? full_graph(w, p) : restrict_side(w, p, side);
  return dot_of(g, side == 0 ? "whitehead" : (side > 0 ? "whitehead_plus" : "whitehead_minus"));
}

std::string dot_collapsed(const Presentation& p, int side,
                          const std::vector<SubPresentation>& ts) {
  if (side != 1 && side != -1) throw Error("dot_collapsed: side must be +1 or -1");
  validate_subpresentations(p, ts);
  WhiteheadGraph w = whitehead_graph(p);
  Multigraph m = restrict_side(w, p, side);
  std::vector<std::vector<int>> classes;
  for (const SubPresentation& t : ts) classes.push_back(t.gens);
  CollapsedGraph c = collapse_classes(m, classes);
  return dot_of(c.g, side > 0 ? "collapsed_plus" : "collapsed_minus");
}

}  // namespace lot

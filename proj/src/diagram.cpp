#include "lot/diagram.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace lot {

namespace {

int end_key(const EdgeEnd& e) { return 2 * e.edge + (e.head ? 1 : 0); }

EdgeEnd end_from_key(int k) { return {k / 2, (k & 1) != 0}; }

// where a dart arrives / departs
EdgeEnd arrival_end(const Dart& d) { return {d.edge, d.along}; }
EdgeEnd departure_end(const Dart& d) { return {d.edge, !d.along}; }

int dart_start(const Diagram& d, const Dart& t) {
  const DiagramEdge& e = d.edges[t.edge];
  return t.along ? e.tail : e.head;
}

int dart_finish(const Diagram& d, const Dart& t) {
  const DiagramEdge& e = d.edges[t.edge];
  return t.along ? e.head : e.tail;
}

std::vector<std::vector<EdgeEnd>> incident_ends(const Diagram& d) {
  std::vector<std::vector<EdgeEnd>> ends(d.n_vertices);
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    ends[d.edges[e].tail].push_back({e, false});
    ends[d.edges[e].head].push_back({e, true});
  }
  return ends;
}

// Pairing of corner slots around every vertex.  Each corner of a face — the
// gap between consecutive boundary darts — connects the end its first dart
// arrives at to the end its second dart departs from.  Following these
// connections traces the links; a spherical diagram has one circle per vertex.
struct LinkWalk {
  bool ok = false;
  std::string why;
  std::vector<std::vector<EdgeEnd>> induced;                 // rotation per vertex
  std::vector<std::vector<std::pair<int, int>>> corners_at;  // (face,pos) per vertex
};

LinkWalk link_walk(const Diagram& d) {
  LinkWalk w;
  int ne = static_cast<int>(d.edges.size());
  std::vector<std::pair<int, int>> arrival_corner(2 * ne, {-1, -1});
  std::map<std::pair<int, int>, int> corner_exit;  // (face,pos) -> departure end key
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    const auto& b = d.faces[f].boundary;
    int n = static_cast<int>(b.size());
    for (int k = 0; k < n; ++k) {
      int akey = end_key(arrival_end(b[k]));
      if (arrival_corner[akey].first != -1) {
        w.why = "edge pairing broken";
        return w;
      }
      arrival_corner[akey] = {f, k};
      corner_exit[{f, k}] = end_key(departure_end(b[(k + 1) % n]));
    }
  }
  std::vector<std::vector<EdgeEnd>> ends = incident_ends(d);
  w.induced.resize(d.n_vertices);
  w.corners_at.resize(d.n_vertices);
  std::vector<char> seen(2 * ne, 0);
  for (int v = 0; v < d.n_vertices; ++v) {
    if (ends[v].empty()) {
      w.why = "vertex " + std::to_string(v) + " has no incident edges";
      return w;
    }
    int start = end_key(ends[v][0]);
    for (const EdgeEnd& e : ends[v]) start = std::min(start, end_key(e));
    int cur = start;
    do {
      if (seen[cur]) {
        w.why = "link walk revisits an edge-end";
        return w;
      }
      seen[cur] = 1;
      w.induced[v].push_back(end_from_key(cur));
      auto [f, k] = arrival_corner[cur];
      if (f < 0) {
        w.why = "edge-end never arrived at";
        return w;
      }
      w.corners_at[v].push_back({f, k});
      cur = corner_exit.at({f, k});
    } while (cur != start);
    if (w.induced[v].size() != ends[v].size()) {
      w.why = "link at v" + std::to_string(v) + " is not a single circle";
      return w;
    }
  }
  w.ok = true;
  return w;
}

Letter dart_letter(const Diagram& d, const Presentation& p, const Dart& t) {
  const std::string& label = d.edges[t.edge].label;
  auto it = std::find(p.generators.begin(), p.generators.end(), label);
  if (it == p.generators.end())
    throw Error("edge label '" + label + "' is not a generator");
  return {static_cast<int>(it - p.generators.begin()), t.along ? +1 : -1};
}

Word inverse_word(const Word& w) {
  Word r;
  for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->gen, -it->sign});
  return r;
}

// true when the stored rotation equals the induced one up to cyclic shift
bool cyclic_match(const std::vector<EdgeEnd>& rot, const std::vector<EdgeEnd>& ind) {
  int n = static_cast<int>(rot.size());
  if (n != static_cast<int>(ind.size())) return false;
  for (int s = 0; s < n; ++s) {
    bool all = true;
    for (int k = 0; k < n && all; ++k) all = rot[(k + s) % n] == ind[k];
    if (all) return true;
  }
  return false;
}

}  // namespace

Word face_word(const Diagram& d, const Presentation& p, int face) {
  Word w;
  for (const Dart& t : d.faces.at(face).boundary) w.push_back(dart_letter(d, p, t));
  return w;
}

std::optional<FaceMatch> match_face(const Diagram& d, const Presentation& p,
                                    int face) {
  Word w;
  try {
    w = face_word(d, p, face);
  } catch (const Error&) {
    return std::nullopt;
  }
  int n = static_cast<int>(w.size());
  if (n == 0) return std::nullopt;
  for (int rid = 0; rid < static_cast<int>(p.relators.size()); ++rid) {
    if (static_cast<int>(p.relators[rid].size()) != n) continue;
    for (int sign : {+1, -1}) {
      Word r = sign > 0 ? p.relators[rid] : inverse_word(p.relators[rid]);
      for (int off = 0; off < n; ++off) {
        bool all = true;
        for (int k = 0; k < n && all; ++k) all = w[k] == r[(k + off) % n];
        if (all) return FaceMatch{rid, sign, off};
      }
    }
  }
  return std::nullopt;
}

DiagramReport validate_diagram(const Diagram& d, const Presentation& p) {
  DiagramReport rep;
  auto bad = [&](const std::string& s) { rep.violations.push_back(s); };

  if (d.n_vertices <= 0) {
    bad("no vertices");
    return rep;
  }
  bool structure_ok = true;
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e) {
    const DiagramEdge& de = d.edges[e];
    if (de.tail < 0 || de.tail >= d.n_vertices || de.head < 0 ||
        de.head >= d.n_vertices) {
      bad("edge " + std::to_string(e) + ": endpoint out of range");
      structure_ok = false;
    }
    if (std::find(p.generators.begin(), p.generators.end(), de.label) ==
        p.generators.end())
      bad("edge " + std::to_string(e) + ": label '" + de.label +
          "' is not a generator");
  }
  if (!structure_ok) return rep;

  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    const auto& b = d.faces[f].boundary;
    if (b.empty()) {
      bad("face " + std::to_string(f) + ": empty boundary");
      structure_ok = false;
      continue;
    }
    for (const Dart& t : b)
      if (t.edge < 0 || t.edge >= static_cast<int>(d.edges.size())) {
        bad("face " + std::to_string(f) + ": dart references missing edge");
        structure_ok = false;
      }
    if (!structure_ok) continue;
    bool closed = true;
    int n = static_cast<int>(b.size());
    for (int k = 0; k < n; ++k)
      if (dart_finish(d, b[k]) != dart_start(d, b[(k + 1) % n])) closed = false;
    if (!closed) {
      bad("face " + std::to_string(f) + ": boundary not closed");
      structure_ok = false;
    }
  }
  if (!structure_ok) return rep;

  std::vector<int> along(d.edges.size(), 0), against(d.edges.size(), 0);
  for (const DiagFace& f : d.faces)
    for (const Dart& t : f.boundary) ++(t.along ? along : against)[t.edge];
  for (int e = 0; e < static_cast<int>(d.edges.size()); ++e)
    if (along[e] != 1 || against[e] != 1) {
      bad("edge pairing: edge " + std::to_string(e) + " traversed along " +
          std::to_string(along[e]) + " times, against " +
          std::to_string(against[e]) + " times");
      structure_ok = false;
    }

  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f)
    if (!match_face(d, p, f))
      bad("face " + std::to_string(f) + ": unknown boundary word");

  if (!structure_ok) return rep;

  LinkWalk lw = link_walk(d);
  if (!lw.ok) {
    bad(lw.why);
    return rep;
  }

  if (static_cast<int>(d.rotation.size()) != d.n_vertices) {
    bad("rotation lists " + std::to_string(d.rotation.size()) +
        " vertices, diagram has " + std::to_string(d.n_vertices));
  } else {
    std::vector<std::vector<EdgeEnd>> ends = incident_ends(d);
    int strict_fwd = 0, strict_rev = 0, neither = 0;
    for (int v = 0; v < d.n_vertices; ++v) {
      auto sorted_keys = [](const std::vector<EdgeEnd>& es) {
        std::vector<int> k;
        for (const EdgeEnd& e : es) k.push_back(end_key(e));
        std::sort(k.begin(), k.end());
        return k;
      };
      if (sorted_keys(d.rotation[v]) != sorted_keys(ends[v])) {
        bad("rotation at v" + std::to_string(v) +
            " does not list its incident edge-ends");
        continue;
      }
      bool fwd = cyclic_match(d.rotation[v], lw.induced[v]);
      std::vector<EdgeEnd> rev(d.rotation[v].rbegin(), d.rotation[v].rend());
      bool bwd = cyclic_match(rev, lw.induced[v]);
      if (!fwd && !bwd) {
        bad("rotation at v" + std::to_string(v) + " inconsistent with face corners");
        ++neither;
      } else if (fwd && !bwd) {
        ++strict_fwd;
      } else if (bwd && !fwd) {
        ++strict_rev;
      }
    }
    if (neither == 0 && strict_fwd > 0 && strict_rev > 0)
      bad("rotation system mixes orientations");
  }

  int v = d.n_vertices, e = static_cast<int>(d.edges.size()),
      f = static_cast<int>(d.faces.size());
  if (v - e + f != 2)
    bad("Euler characteristic V-E+F = " + std::to_string(v - e + f) +
        ", expected 2");

  // 1-skeleton connectivity
  std::vector<int> comp(v, -1);
  std::vector<int> stack{0};
  comp[0] = 0;
  std::vector<std::vector<int>> adj(v);
  for (const DiagramEdge& de : d.edges) {
    adj[de.tail].push_back(de.head);
    adj[de.head].push_back(de.tail);
  }
  while (!stack.empty()) {
    int x = stack.back();
    stack.pop_back();
    for (int y : adj[x])
      if (comp[y] < 0) {
        comp[y] = 0;
        stack.push_back(y);
      }
  }
  if (std::count(comp.begin(), comp.end(), -1) > 0) bad("1-skeleton disconnected");

  rep.ok = rep.violations.empty();
  return rep;
}

namespace {

std::vector<CornerCycle> corner_cycles_unchecked(const Diagram& d,
                                                 const Presentation& p) {
  LinkWalk lw = link_walk(d);
  if (!lw.ok) throw Error("invalid diagram: " + lw.why);
  std::vector<FaceMatch> fm(d.faces.size());
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    auto m = match_face(d, p, f);
    if (!m)
      throw Error("invalid diagram: face " + std::to_string(f) +
                  ": unknown boundary word");
    fm[f] = *m;
  }
  std::vector<int> corner_base(p.relators.size() + 1, 0);
  for (size_t r = 0; r < p.relators.size(); ++r)
    corner_base[r + 1] = corner_base[r] + static_cast<int>(p.relators[r].size());

  std::vector<CornerCycle> cycles;
  for (int v = 0; v < d.n_vertices; ++v) {
    CornerCycle cc;
    cc.vertex = v;
    for (auto [f, k] : lw.corners_at[v]) {
      const FaceMatch& m = fm[f];
      int len = static_cast<int>(p.relators[m.relator].size());
      int j = (k + m.offset) % len;
      LinkEntry le;
      le.face = f;
      le.pos = k;
      le.relator = m.relator;
      le.rel_pos = m.sign > 0 ? j : ((len - 2 - j) % len + len) % len;
      le.forward = m.sign > 0;
      le.corner = corner_base[m.relator] + le.rel_pos;
      cc.corners.push_back(le);
    }
    cycles.push_back(std::move(cc));
  }
  return cycles;
}

void require_valid(const Diagram& d, const Presentation& p) {
  DiagramReport rep = validate_diagram(d, p);
  if (!rep.ok) throw Error("invalid diagram: " + rep.violations.front());
}

}  // namespace

CornerCycle corner_cycle(const Diagram& d, const Presentation& p, int v) {
  require_valid(d, p);
  if (v < 0 || v >= d.n_vertices) throw Error("no such diagram vertex");
  return corner_cycles_unchecked(d, p)[v];
}

std::vector<CornerCycle> corner_cycles(const Diagram& d, const Presentation& p) {
  require_valid(d, p);
  return corner_cycles_unchecked(d, p);
}

VertexReducedResult is_vertex_reduced(const Diagram& d, const Presentation& p,
                                      const std::vector<SubPresentation>& ts) {
  require_valid(d, p);
  validate_subpresentations(p, ts);
  std::set<int> exempt_relators;
  for (const SubPresentation& t : ts)
    exempt_relators.insert(t.relators.begin(), t.relators.end());

  VertexReducedResult res;
  res.reduced = true;
  for (const CornerCycle& cc : corner_cycles_unchecked(d, p)) {
    int n = static_cast<int>(cc.corners.size());
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) {
        const LinkEntry& a = cc.corners[i];
        const LinkEntry& b = cc.corners[j];
        if (a.corner == b.corner && a.forward != b.forward &&
            !exempt_relators.count(a.relator)) {
          res.reduced = false;
          res.witness = cc.vertex;
          res.detail = "vertex " + std::to_string(cc.vertex) + ": corners " +
                       std::to_string(i) + " and " + std::to_string(j) +
                       " cross Whitehead edge (relator " +
                       std::to_string(a.relator) + ", pos " +
                       std::to_string(a.rel_pos) + ") in opposite directions";
          return res;
        }
      }
  }
  return res;
}

OrientationCensus orientation_census(const Diagram& d) {
  OrientationCensus c;
  std::vector<std::vector<EdgeEnd>> ends = incident_ends(d);
  for (int v = 0; v < d.n_vertices; ++v) {
    if (ends[v].empty()) continue;
    bool all_head = true, all_tail = true;
    for (const EdgeEnd& e : ends[v]) (e.head ? all_tail : all_head) = false;
    if (all_head) c.sinks.push_back(v);
    if (all_tail) c.sources.push_back(v);
  }
  for (int f = 0; f < static_cast<int>(d.faces.size()); ++f) {
    int fwd = 0, bwd = 0;
    for (const Dart& t : d.faces[f].boundary) ++(t.along ? fwd : bwd);
    if (fwd == 0 || bwd == 0) c.consistent_faces.push_back(f);
    if (fwd == bwd) c.zero_sum_faces.push_back(f);
  }
  return c;
}

namespace {

// disc under construction: faces plus the free (untraversed) dart of every
// boundary edge
struct Disc {
  Diagram d;  // rotation left empty until doubling
  std::vector<Dart> free;
};

Disc polygon_disc(const Presentation& p, const Word& u) {
  Disc disc;
  int n = static_cast<int>(u.size());
  disc.d.n_vertices = n;
  DiagFace face;
  for (int i = 0; i < n; ++i) {
    const Letter& l = u[i];
    DiagramEdge e;
    e.label = p.generators.at(l.gen);
    int nxt = (i + 1) % n;
    if (l.sign > 0) {
      e.tail = i;
      e.head = nxt;
    } else {
      e.tail = nxt;
      e.head = i;
    }
    disc.d.edges.push_back(e);
    face.boundary.push_back({i, l.sign > 0});
    disc.free.push_back({i, l.sign <= 0});
  }
  disc.d.faces.push_back(std::move(face));
  return disc;
}

// every (relator, sign, shift) whose shifted word starts with the letter
std::vector<std::tuple<int, int, int>> glue_candidates(const Presentation& p,
                                                       const Letter& first) {
  std::vector<std::tuple<int, int, int>> out;
  for (int rid = 0; rid < static_cast<int>(p.relators.size()); ++rid) {
    for (int sign : {+1, -1}) {
      Word u = sign > 0 ? p.relators[rid] : inverse_word(p.relators[rid]);
      for (int off = 0; off < static_cast<int>(u.size()); ++off)
        if (u[off] == first) out.push_back({rid, sign, off});
    }
  }
  return out;
}

void glue_face(Disc& disc, const Presentation& p, size_t free_idx, const Word& u,
               int off) {
  Dart glued = disc.free[free_idx];
  disc.free.erase(disc.free.begin() + static_cast<long>(free_idx));
  int n = static_cast<int>(u.size());
  DiagFace face;
  face.boundary.push_back(glued);
  int cur = dart_finish(disc.d, glued);
  int stop = dart_start(disc.d, glued);
  for (int i = 1; i < n; ++i) {
    const Letter& l = u[(off + i) % n];
    int nxt = i == n - 1 ? stop : disc.d.n_vertices++;
    DiagramEdge e;
    e.label = p.generators.at(l.gen);
    if (l.sign > 0) {
      e.tail = cur;
      e.head = nxt;
    } else {
      e.tail = nxt;
      e.head = cur;
    }
    int eid = static_cast<int>(disc.d.edges.size());
    disc.d.edges.push_back(e);
    face.boundary.push_back({eid, l.sign > 0});
    disc.free.push_back({eid, l.sign <= 0});
    cur = nxt;
  }
  disc.d.faces.push_back(std::move(face));
}

// mirror the disc across its boundary: shared boundary cells, duplicated
// interior cells, reversed copies of every face
Diagram double_disc(const Disc& disc) {
  Diagram d = disc.d;
  int ne = static_cast<int>(d.edges.size());
  std::vector<char> boundary_edge(ne, 0);
  for (const Dart& t : disc.free) boundary_edge[t.edge] = 1;
  std::vector<char> boundary_vertex(d.n_vertices, 0);
  for (int e = 0; e < ne; ++e)
    if (boundary_edge[e])
      boundary_vertex[d.edges[e].tail] = boundary_vertex[d.edges[e].head] = 1;

  std::vector<int> vmirror(d.n_vertices), emirror(ne);
  for (int v = 0; v < disc.d.n_vertices; ++v)
    vmirror[v] = boundary_vertex[v] ? v : d.n_vertices++;
  for (int e = 0; e < ne; ++e) {
    if (boundary_edge[e]) {
      emirror[e] = e;
    } else {
      emirror[e] = static_cast<int>(d.edges.size());
      DiagramEdge copy = d.edges[e];
      copy.tail = vmirror[copy.tail];
      copy.head = vmirror[copy.head];
      d.edges.push_back(copy);
    }
  }
  for (const DiagFace& f : disc.d.faces) {
    DiagFace m;
    for (auto it = f.boundary.rbegin(); it != f.boundary.rend(); ++it)
      m.boundary.push_back({emirror[it->edge], !it->along});
    d.faces.push_back(std::move(m));
  }
  LinkWalk lw = link_walk(d);
  if (!lw.ok) throw Error("doubled disc has a bad link: " + lw.why);
  d.rotation = lw.induced;
  return d;
}

}  // namespace

Diagram doubled_relator_disc(const Presentation& p, int relator) {
  if (relator < 0 || relator >= static_cast<int>(p.relators.size()))
    throw Error("no such relator");
  if (p.relators[relator].empty()) throw Error("empty relator");
  return double_disc(polygon_disc(p, p.relators[relator]));
}

Diagram random_doubled_disc(const Presentation& p, Rng& rng, int n_faces) {
  if (p.relators.empty()) throw Error("presentation has no relators");
  for (const Word& r : p.relators)
    if (r.size() < 2) throw Error("random discs need relators of length >= 2");
  int rid = rng.below(static_cast<int>(p.relators.size()));
  Word u = rng.coin() ? p.relators[rid] : inverse_word(p.relators[rid]);
  Disc disc = polygon_disc(p, u);
  for (int added = 1; added < n_faces; ++added) {
    size_t pick = static_cast<size_t>(rng.below(static_cast<int>(disc.free.size())));
    bool glued = false;
    for (size_t step = 0; step < disc.free.size() && !glued; ++step) {
      size_t idx = (pick + step) % disc.free.size();
      Letter first = dart_letter(disc.d, p, disc.free[idx]);
      auto cands = glue_candidates(p, first);
      if (cands.empty()) continue;
      auto [crid, csign, coff] = cands[rng.below(static_cast<int>(cands.size()))];
      Word w = csign > 0 ? p.relators[crid] : inverse_word(p.relators[crid]);
      glue_face(disc, p, idx, w, coff);
      glued = true;
    }
    if (!glued) break;  // no relator continues any boundary letter
  }
  return double_disc(disc);
}

namespace {

int parse_vertex_ref(const nlohmann::json& j) {
  if (j.is_number_integer()) return j.get<int>();
  if (j.is_string()) {
    std::string s = j.get<std::string>();
    if (s.size() > 1 && s[0] == 'v') return std::stoi(s.substr(1));
  }
  throw Error("bad vertex reference in diagram JSON");
}

EdgeEnd parse_end_token(const std::string& s) {
  if (s.size() >= 3 && s[0] == 'e') {
    char side = s.back();
    if (side == 'h' || side == 't') {
      try {
        return {std::stoi(s.substr(1, s.size() - 2)), side == 'h'};
      } catch (...) {
      }
    }
  }
  throw Error("bad edge-end token '" + s + "'");
}

}  // namespace

Diagram diagram_from_json(const nlohmann::json& j) {
  Diagram d;
  if (!j.is_object()) throw Error("diagram JSON must be an object");
  for (const auto& je : j.value("edges", nlohmann::json::array())) {
    DiagramEdge e;
    e.label = je.at("label").get<std::string>();
    e.tail = parse_vertex_ref(je.at("tail"));
    e.head = parse_vertex_ref(je.at("head"));
    d.edges.push_back(e);
  }
  if (j.contains("vertices")) {
    d.n_vertices = j["vertices"].get<int>();
  } else {
    for (const DiagramEdge& e : d.edges)
      d.n_vertices = std::max({d.n_vertices, e.tail + 1, e.head + 1});
  }
  for (const auto& jf : j.value("faces", nlohmann::json::array())) {
    DiagFace f;
    for (const auto& jd : jf) {
      if (!jd.is_array() || jd.size() != 2)
        throw Error("face dart must be [\"e<id>\", \"along\"|\"against\"]");
      std::string tok = jd[0].get<std::string>();
      if (tok.empty() || tok[0] != 'e') throw Error("bad edge token '" + tok + "'");
      int eid;
      try {
        eid = std::stoi(tok.substr(1));
      } catch (...) {
        throw Error("bad edge token '" + tok + "'");
      }
      std::string dir = jd[1].get<std::string>();
      if (dir != "along" && dir != "against")
        throw Error("bad dart direction '" + dir + "'");
      f.boundary.push_back({eid, dir == "along"});
    }
    d.faces.push_back(std::move(f));
  }
  if (j.contains("rotation")) {
    d.rotation.assign(d.n_vertices, {});
    for (const auto& [key, val] : j["rotation"].items()) {
      int v = key.size() > 1 && key[0] == 'v' ? std::stoi(key.substr(1)) : -1;
      if (v < 0 || v >= d.n_vertices)
        throw Error("rotation names unknown vertex '" + key + "'");
      for (const auto& tok : val)
        d.rotation[v].push_back(parse_end_token(tok.get<std::string>()));
    }
  } else {
    LinkWalk lw = link_walk(d);
    if (lw.ok) d.rotation = lw.induced;
  }
  return d;
}

nlohmann::ordered_json diagram_to_json(const Diagram& d) {
  nlohmann::ordered_json j;
  j["schema"] = "lotcert/1";
  j["vertices"] = d.n_vertices;
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const DiagramEdge& e : d.edges)
    edges.push_back({{"label", e.label}, {"tail", e.tail}, {"head", e.head}});
  auto& faces = j["faces"] = nlohmann::ordered_json::array();
  for (const DiagFace& f : d.faces) {
    auto jf = nlohmann::ordered_json::array();
    for (const Dart& t : f.boundary)
      jf.push_back({"e" + std::to_string(t.edge), t.along ? "along" : "against"});
    faces.push_back(std::move(jf));
  }
  auto& rot = j["rotation"] = nlohmann::ordered_json::object();
  for (int v = 0; v < static_cast<int>(d.rotation.size()); ++v) {
    auto jr = nlohmann::ordered_json::array();
    for (const EdgeEnd& e : d.rotation[v])
      jr.push_back("e" + std::to_string(e.edge) + (e.head ? "h" : "t"));
    rot["v" + std::to_string(v)] = std::move(jr);
  }
  return j;
}

}  // namespace lot

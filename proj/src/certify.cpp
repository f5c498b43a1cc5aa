#include "lot/certify.hpp"

#include <algorithm>
#include <set>

namespace lot {

namespace {

// Union-find without path compression so unions can be rolled back; the
// orientation search needs cheap backtracking.
class RollbackUf {
 public:
  explicit RollbackUf(int n) : parent_(n), rank_(n, 0) {
    for (int i = 0; i < n; ++i) parent_[i] = i;
  }
  int find(int x) const {
    while (parent_[x] != x) x = parent_[x];
    return x;
  }
  // false (and no record) when a and b are already connected
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    bool bumped = rank_[a] == rank_[b];
    if (bumped) ++rank_[a];
    undo_.push_back({b, bumped ? a : -1});
    return true;
  }
  void undo() {
    auto [child, bumped] = undo_.back();
    undo_.pop_back();
    parent_[child] = child;
    if (bumped >= 0) --rank_[bumped];
  }

 private:
  std::vector<int> parent_, rank_;
  std::vector<std::pair<int, int>> undo_;
};

std::vector<std::vector<int>> classes_of(const std::vector<SubLot>& ts) {
  std::vector<std::vector<int>> classes;
  for (const SubLot& s : ts) classes.push_back(s.vertices);
  return classes;
}

// two-sided relative tree condition on the uncollapsed LOT
bool both_sides_relative_trees(const Log& q, const std::vector<SubLot>& ts) {
  Presentation p = presentation_of(q);
  WhiteheadGraph w = whitehead_graph(p);
  std::vector<std::vector<int>> classes = classes_of(ts);
  for (int side : {+1, -1}) {
    Multigraph m = restrict_side(w, p, side);
    if (!is_relative_tree(m, classes)) return false;
  }
  return true;
}

}  // namespace

ReorientResult find_reorientation(const Log& t, const std::vector<SubLot>& ts) {
  LotCheck lc = is_lot(t);
  if (!lc.ok) throw Error("find_reorientation: input is not a LOT (" + lc.reason + ")");
  Collapse col = collapse_sublots(t, ts);
  const Log& pp = col.collapsed;
  int m = pp.num_edges();
  std::vector<EdgeId> parent_edge(m, -1);
  for (EdgeId e = 0; e < t.num_edges(); ++e)
    if (col.edge_map[e]) parent_edge[*col.edge_map[e]] = e;

  RollbackUf plus(pp.num_vertices()), minus(pp.num_vertices());
  std::vector<char> flip(m, 0);
  ReorientResult result;

  // Keep-first DFS over collapsed edge orientations.  The positive corner of
  // [x,z,y] joins {x,z}, the negative one {y,z}; flipping swaps the roles.
  auto rec = [&](auto&& self, int depth) -> bool {
    if (depth == m) {
      std::vector<EdgeId> flips;
      for (int i = 0; i < m; ++i)
        if (flip[i]) flips.push_back(parent_edge[i]);
      std::sort(flips.begin(), flips.end());
      if (!both_sides_relative_trees(reorient(t, flips), ts)) return false;
      result.found = true;
      result.flips = std::move(flips);
      return true;
    }
    const Edge& ed = pp.edge(depth);
    for (int o = 0; o < 2; ++o) {
      int head = o ? ed.from : ed.to;
      int tail = o ? ed.to : ed.from;
      if (!plus.unite(tail, ed.label)) continue;
      if (!minus.unite(head, ed.label)) {
        plus.undo();
        continue;
      }
      flip[depth] = static_cast<char>(o);
      if (self(self, depth + 1)) return true;
      minus.undo();
      plus.undo();
    }
    return false;
  };
  if (!rec(rec, 0)) {
    result.found = false;
    result.reason = "no orientation of the free edges makes both Whitehead "
                    "graph polarities trees relative to the sub-LOTs";
  }
  return result;
}

namespace {

std::vector<EdgeId> all_edge_ids(const Log& g) {
  std::vector<EdgeId> ids(g.num_edges());
  for (int i = 0; i < g.num_edges(); ++i) ids[i] = i;
  return ids;
}

Assumption normalize_assumption(const Log& t, Assumption a) {
  std::sort(a.edges.begin(), a.edges.end());
  a.edges.erase(std::unique(a.edges.begin(), a.edges.end()), a.edges.end());
  std::string why;
  if (!is_sublot(t, a.edges, &why))
    throw Error("assumption is not a sub-LOT: " + why);
  return a;
}

// remap assumption edges into a sub-LOT's dense ids (pre: contained)
Assumption remap_into(const Assumption& a, const std::vector<EdgeId>& sub_edges) {
  Assumption out;
  out.reason = a.reason;
  for (EdgeId e : a.edges) {
    auto it = std::lower_bound(sub_edges.begin(), sub_edges.end(), e);
    out.edges.push_back(static_cast<EdgeId>(it - sub_edges.begin()));
  }
  return out;
}

bool contained(const std::vector<EdgeId>& a, const std::vector<EdgeId>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string sublot_desc(const Log& t, const std::vector<EdgeId>& edges) {
  std::vector<std::string> es, vs;
  std::set<VertexId> vset;
  for (EdgeId e : edges) {
    es.push_back(std::to_string(e));
    vset.insert(t.edge(e).from);
    vset.insert(t.edge(e).to);
  }
  for (VertexId v : vset) vs.push_back(t.name(v));
  return "edges=[" + join(es, ",") + "] vertices=[" + join(vs, ",") + "]";
}

struct Ctx {
  std::string path;
  CertifyResult fail(const std::string& reason) const {
    CertifyResult r;
    r.ok = false;
    r.reason = reason;
    r.path = path.empty() ? "(root)" : path;
    return r;
  }
  Ctx child(const std::string& seg) const {
    return {path.empty() ? seg : path + "/" + seg};
  }
};

CertifyResult certify_impl(const Log& t, std::vector<Assumption> assume, Ctx ctx);

// certify one decomposition piece, dispatching contained assumptions into it
CertifyResult certify_piece(const Log& t, const std::vector<EdgeId>& piece_edges,
                            const std::vector<Assumption>& assume,
                            std::vector<char>& used, Ctx ctx) {
  SubLot s = sublot_from_edges(t, piece_edges);
  Log sub = extract_log(t, s);
  std::vector<Assumption> sub_assume;
  for (size_t k = 0; k < assume.size(); ++k) {
    if (contained(assume[k].edges, s.edges)) {
      sub_assume.push_back(remap_into(assume[k], s.edges));
      used[k] = 1;
    }
  }
  return certify_impl(sub, std::move(sub_assume), ctx);
}

void require_all_used(const Log& t, const std::vector<Assumption>& assume,
                      const std::vector<char>& used) {
  for (size_t k = 0; k < assume.size(); ++k)
    if (!used[k])
      throw Error("assumption (" + sublot_desc(t, assume[k].edges) +
                  ") does not match the whole LOT or any sub-LOT of the "
                  "decomposition");
}

CertifyResult certify_impl(const Log& t, std::vector<Assumption> assume, Ctx ctx) {
  // an assumption covering the whole LOT discharges immediately
  if (t.num_edges() > 0) {
    std::vector<EdgeId> all = all_edge_ids(t);
    for (const Assumption& a : assume) {
      if (a.edges == all) {
        CertifyResult r;
        r.ok = true;
        r.cert = std::make_unique<Certificate>();
        r.cert->kind = Certificate::Kind::Assumed;
        r.cert->assumption = a;
        return r;
      }
    }
  }

  if (t.num_vertices() == 1 && t.num_edges() == 0) {
    if (!assume.empty())
      throw Error("assumption left over at a single-vertex LOT");
    CertifyResult r;
    r.ok = true;
    r.cert = std::make_unique<Certificate>();
    r.cert->kind = Certificate::Kind::SingleVertex;
    return r;
  }

  Predicates pr = predicates(t);
  if (!pr.reduced.value_or(false)) {
    Reduction red = reduce(t);
    std::vector<Assumption> pushed;
    for (const Assumption& a : assume) {
      auto img = push_sublot(t, sublot_from_edges(t, a.edges), red.trace);
      if (!img) continue;  // image degenerated; nothing left to assume
      pushed.push_back({img->edges, a.reason});
    }
    CertifyResult inner = certify_impl(red.result, std::move(pushed), ctx.child("reduced"));
    if (!inner.ok) return inner;
    CertifyResult r;
    r.ok = true;
    r.cert = std::make_unique<Certificate>();
    r.cert->kind = Certificate::Kind::Reduced;
    r.cert->trace = std::move(red.trace);
    r.cert->inner = std::move(inner.cert);
    return r;
  }

  std::vector<SubLot> ms = maximal_proper_sublots(t);

  // first intersecting pair, if any
  int pi = -1, pj = -1;
  for (size_t i = 0; i < ms.size() && pi < 0; ++i)
    for (size_t j = i + 1; j < ms.size(); ++j) {
      std::vector<VertexId> shared;
      std::set_intersection(ms[i].vertices.begin(), ms[i].vertices.end(),
                            ms[j].vertices.begin(), ms[j].vertices.end(),
                            std::back_inserter(shared));
      if (!shared.empty()) {
        pi = static_cast<int>(i);
        pj = static_cast<int>(j);
        break;
      }
    }

  if (pi >= 0) {
    const SubLot& a = ms[pi];
    const SubLot& b = ms[pj];
    std::vector<EdgeId> uni, meet;
    std::set_union(a.edges.begin(), a.edges.end(), b.edges.begin(), b.edges.end(),
                   std::back_inserter(uni));
    std::set_intersection(a.edges.begin(), a.edges.end(), b.edges.begin(),
                          b.edges.end(), std::back_inserter(meet));
    if (uni != all_edge_ids(t))
      return ctx.fail("two maximal proper sub-LOTs intersect but their union "
                      "is not the whole LOT");
    std::vector<VertexId> shared;
    std::set_intersection(a.vertices.begin(), a.vertices.end(),
                          b.vertices.begin(), b.vertices.end(),
                          std::back_inserter(shared));

    auto node = std::make_unique<Certificate>();
    node->kind = Certificate::Kind::Case1;
    node->ti = a.edges;
    node->tj = b.edges;
    node->tij = meet;

    std::vector<char> used(assume.size(), 0);
    // Intersecting parts must certify without inner assumptions unless wholly
    // assumed, so try them self-contained before spending the assumptions.
    auto part = [&](const SubLot& s, const std::string& seg) -> CertifyResult {
      CertifyResult plain =
          certify_impl(extract_log(t, s), {}, ctx.child(seg));
      if (plain.ok) {
        for (size_t k = 0; k < assume.size(); ++k)
          if (contained(assume[k].edges, s.edges)) used[k] = 1;
        return plain;
      }
      return certify_piece(t, s.edges, assume, used, ctx.child(seg));
    };
    CertifyResult ci = part(a, "ti");
    if (!ci.ok) return ci;
    CertifyResult cj = part(b, "tj");
    if (!cj.ok) return cj;

    CertifyResult cij;
    if (meet.empty()) {
      if (shared.size() != 1)
        return ctx.fail("edgeless intersection of maximal sub-LOTs has " +
                        std::to_string(shared.size()) + " shared vertices");
      node->tij_vertex = t.name(shared[0]);
      Log point;
      point.add_vertex(node->tij_vertex);
      cij = certify_impl(point, {}, ctx.child("tij"));
    } else {
      std::string why;
      if (!is_sublot(t, meet, &why))
        return ctx.fail("intersection of maximal sub-LOTs is not a sub-LOT: " + why);
      cij = certify_piece(t, meet, assume, used, ctx.child("tij"));
    }
    if (!cij.ok) return cij;
    require_all_used(t, assume, used);

    // the intersection-inclusion argument needs each side self-contained or
    // assumed outright; a buried Assumed breaks the chain
    if (!meet.empty()) {
      for (const auto& [cert, name] :
           {std::make_pair(ci.cert.get(), "first"), {cj.cert.get(), "second"}}) {
        if (cert->kind != Certificate::Kind::Assumed && contains_assumed(*cert))
          return ctx.fail(std::string("the ") + name +
                          " intersecting sub-LOT's certificate buries an "
                          "assumption below its root");
      }
    }

    node->cert_i = std::move(ci.cert);
    node->cert_j = std::move(cj.cert);
    node->cert_ij = std::move(cij.cert);
    CertifyResult r;
    r.ok = true;
    r.cert = std::move(node);
    return r;
  }

  // Case 2: pairwise disjoint maximal sub-LOTs
  RelInjectivity ri = is_relatively_injective(t, ms);
  if (!ri.ok) return ctx.fail("relative injectivity failed: " + ri.detail);

  auto node = std::make_unique<Certificate>();
  node->kind = Certificate::Kind::Case2;
  std::vector<char> used(assume.size(), 0);
  for (size_t i = 0; i < ms.size(); ++i) {
    node->sublots.push_back(ms[i].edges);
    CertifyResult ci = certify_piece(t, ms[i].edges, assume, used,
                                     ctx.child("sub" + std::to_string(i)));
    if (!ci.ok) return ci;
    node->subcerts.push_back(std::move(ci.cert));
  }
  require_all_used(t, assume, used);

  ReorientResult rr = find_reorientation(t, ms);
  if (!rr.found) return ctx.fail(rr.reason);
  node->flips = rr.flips;
  Log q = reorient(t, rr.flips);
  std::vector<SubPresentation> subs;
  for (const SubLot& s : ms) subs.push_back(sub_presentation(t, s));
  node->report = relative_stallings_test(presentation_of(q), subs);
  if (!node->report.pass || !node->report.plus.tree || !node->report.minus.tree)
    return ctx.fail("reorientation found by search fails the relative test");

  CertifyResult r;
  r.ok = true;
  r.cert = std::move(node);
  return r;
}

}  // namespace

CertifyResult certify(const Log& t, const std::vector<Assumption>& assumptions) {
  LotCheck lc = is_lot(t);
  if (!lc.ok) throw Error("certify: input is not a LOT (" + lc.reason + ")");
  std::vector<Assumption> norm;
  for (const Assumption& a : assumptions) norm.push_back(normalize_assumption(t, a));
  return certify_impl(t, std::move(norm), Ctx{});
}

bool contains_assumed(const Certificate& c) {
  switch (c.kind) {
    case Certificate::Kind::Assumed:
      return true;
    case Certificate::Kind::SingleVertex:
      return false;
    case Certificate::Kind::Reduced:
      return c.inner && contains_assumed(*c.inner);
    case Certificate::Kind::Case1:
      return (c.cert_i && contains_assumed(*c.cert_i)) ||
             (c.cert_j && contains_assumed(*c.cert_j)) ||
             (c.cert_ij && contains_assumed(*c.cert_ij));
    case Certificate::Kind::Case2:
      for (const auto& s : c.subcerts)
        if (s && contains_assumed(*s)) return true;
      return false;
  }
  return false;
}

namespace {

struct Checker {
  std::vector<std::string> relied_on;

  CheckResult fail(const std::string& path, const std::string& reason) {
    CheckResult r;
    r.ok = false;
    r.reason = reason;
    r.path = path.empty() ? "(root)" : path;
    return r;
  }

  CheckResult check(const Log& t, const Certificate& c, const std::string& path) {
    auto sub = [&](const std::string& seg) {
      return path.empty() ? seg : path + "/" + seg;
    };
    switch (c.kind) {
      case Certificate::Kind::SingleVertex: {
        if (t.num_vertices() != 1 || t.num_edges() != 0)
          return fail(path, "single-vertex node over a LOT with " +
                                std::to_string(t.num_vertices()) + " vertices");
        return CheckResult{true, "", "", {}};
      }
      case Certificate::Kind::Assumed: {
        if (c.assumption.edges != all_edge_ids(t) || t.num_edges() == 0)
          return fail(path, "assumed node does not cover exactly this LOT");
        relied_on.push_back(sublot_desc(t, c.assumption.edges) +
                            (c.assumption.reason.empty()
                                 ? ""
                                 : " reason: " + c.assumption.reason));
        return CheckResult{true, "", "", {}};
      }
      case Certificate::Kind::Reduced: {
        if (!c.inner) return fail(path, "reduced node without inner certificate");
        Log result;
        try {
          result = replay(t, c.trace);
        } catch (const Error& e) {
          return fail(path, std::string("trace replay failed: ") + e.what());
        }
        return check(result, *c.inner, sub("reduced"));
      }
      case Certificate::Kind::Case1: {
        if (!c.cert_i || !c.cert_j || !c.cert_ij)
          return fail(path, "case1 node missing a sub-certificate");
        std::vector<SubLot> ms;
        try {
          ms = maximal_proper_sublots(t);
        } catch (const Error& e) {
          return fail(path, std::string("cannot enumerate sub-LOTs: ") + e.what());
        }
        auto find = [&](const std::vector<EdgeId>& es) -> const SubLot* {
          for (const SubLot& s : ms)
            if (s.edges == es) return &s;
          return nullptr;
        };
        const SubLot* a = find(c.ti);
        const SubLot* b = find(c.tj);
        if (!a || !b || a == b)
          return fail(path, "case1 parts are not two distinct maximal proper sub-LOTs");
        std::vector<VertexId> shared;
        std::set_intersection(a->vertices.begin(), a->vertices.end(),
                              b->vertices.begin(), b->vertices.end(),
                              std::back_inserter(shared));
        if (shared.empty()) return fail(path, "case1 parts do not intersect");
        std::vector<EdgeId> uni, meet;
        std::set_union(a->edges.begin(), a->edges.end(), b->edges.begin(),
                       b->edges.end(), std::back_inserter(uni));
        std::set_intersection(a->edges.begin(), a->edges.end(), b->edges.begin(),
                              b->edges.end(), std::back_inserter(meet));
        if (uni != all_edge_ids(t))
          return fail(path, "case1 parts do not cover the whole LOT");
        if (meet != c.tij)
          return fail(path, "case1 stored intersection does not match");
        if (CheckResult r = check(extract_log(t, *a), *c.cert_i, sub("ti")); !r.ok)
          return r;
        if (CheckResult r = check(extract_log(t, *b), *c.cert_j, sub("tj")); !r.ok)
          return r;
        if (meet.empty()) {
          if (shared.size() != 1)
            return fail(path, "edgeless case1 intersection with " +
                                  std::to_string(shared.size()) + " shared vertices");
          if (c.tij_vertex != t.name(shared[0]))
            return fail(path, "case1 shared vertex does not match");
          Log point;
          point.add_vertex(c.tij_vertex);
          if (CheckResult r = check(point, *c.cert_ij, sub("tij")); !r.ok) return r;
        } else {
          std::string why;
          if (!is_sublot(t, meet, &why))
            return fail(path, "case1 intersection is not a sub-LOT: " + why);
          if (CheckResult r = check(extract_log(t, sublot_from_edges(t, meet)),
                                    *c.cert_ij, sub("tij"));
              !r.ok)
            return r;
          for (const auto& [cert, name] : {std::make_pair(c.cert_i.get(), "first"),
                                           {c.cert_j.get(), "second"}}) {
            if (cert->kind != Certificate::Kind::Assumed && contains_assumed(*cert))
              return fail(path, std::string("the ") + name +
                                    " part's certificate buries an assumption "
                                    "below its root");
          }
        }
        return CheckResult{true, "", "", {}};
      }
      case Certificate::Kind::Case2: {
        Predicates pr = predicates(t);
        if (!pr.reduced.value_or(false))
          return fail(path, "case2 node over a non-reduced LOT");
        std::vector<SubLot> ms;
        try {
          ms = maximal_proper_sublots(t);
        } catch (const Error& e) {
          return fail(path, std::string("cannot enumerate sub-LOTs: ") + e.what());
        }
        std::vector<std::vector<EdgeId>> expect;
        for (const SubLot& s : ms) expect.push_back(s.edges);
        std::vector<std::vector<EdgeId>> got = c.sublots;
        for (auto& e : got) std::sort(e.begin(), e.end());
        std::sort(got.begin(), got.end());
        if (got != expect)
          return fail(path, "case2 sub-LOTs are not the maximal proper sub-LOTs");
        for (size_t i = 0; i < ms.size(); ++i)
          for (size_t j = i + 1; j < ms.size(); ++j) {
            std::vector<VertexId> shared;
            std::set_intersection(ms[i].vertices.begin(), ms[i].vertices.end(),
                                  ms[j].vertices.begin(), ms[j].vertices.end(),
                                  std::back_inserter(shared));
            if (!shared.empty())
              return fail(path, "case2 sub-LOTs intersect; case1 applies");
          }
        RelInjectivity ri = is_relatively_injective(t, ms);
        if (!ri.ok) return fail(path, "relative injectivity failed: " + ri.detail);
        // flips must be valid, unique and stay outside every sub-LOT
        std::set<EdgeId> inside;
        for (const SubLot& s : ms) inside.insert(s.edges.begin(), s.edges.end());
        std::set<EdgeId> fs(c.flips.begin(), c.flips.end());
        if (fs.size() != c.flips.size())
          return fail(path, "case2 flip set repeats an edge");
        for (EdgeId e : fs) {
          if (e < 0 || e >= t.num_edges())
            return fail(path, "case2 flip set references a bad edge id");
          if (inside.count(e))
            return fail(path, "case2 flips an edge inside a sub-LOT");
        }
        if (c.subcerts.size() != ms.size())
          return fail(path, "case2 sub-certificate count mismatch");
        for (size_t i = 0; i < ms.size(); ++i) {
          if (!c.subcerts[i]) return fail(path, "case2 missing sub-certificate");
          if (CheckResult r = check(extract_log(t, ms[i]), *c.subcerts[i],
                                    sub("sub" + std::to_string(i)));
              !r.ok)
            return r;
        }
        Log q = reorient(t, c.flips);
        std::vector<SubPresentation> subs;
        for (const SubLot& s : ms) subs.push_back(sub_presentation(t, s));
        StallingsReport rep;
        try {
          rep = relative_stallings_test(presentation_of(q), subs);
        } catch (const Error& e) {
          return fail(path, std::string("relative test failed to run: ") + e.what());
        }
        if (!rep.exponent_sums_ok)
          return fail(path, "reoriented LOT has a relator with nonzero exponent sum");
        if (!rep.plus.tree || !rep.minus.tree)
          return fail(path, "reoriented Whitehead graphs are not trees relative "
                            "to the sub-LOTs on both sides");
        return CheckResult{true, "", "", {}};
      }
    }
    return fail(path, "unknown certificate node kind");
  }
};

}  // namespace

CheckResult check_certificate(const Log& t, const Certificate& c) {
  LotCheck lc = is_lot(t);
  if (!lc.ok) throw Error("check_certificate: input is not a LOT (" + lc.reason + ")");
  Checker ck;
  CheckResult r = ck.check(t, c, "");
  if (r.ok) r.relied_on = std::move(ck.relied_on);
  return r;
}

namespace {

nlohmann::ordered_json edges_json(const Log& t, const std::vector<EdgeId>& edges) {
  nlohmann::ordered_json j;
  j["edges"] = edges;
  std::set<VertexId> vset;
  for (EdgeId e : edges) {
    vset.insert(t.edge(e).from);
    vset.insert(t.edge(e).to);
  }
  auto& vs = j["vertices"] = nlohmann::ordered_json::array();
  for (VertexId v : vset) vs.push_back(t.name(v));
  return j;
}

SideResult side_from_json(const nlohmann::json& j) {
  SideResult s;
  s.forest = j.at("forest").get<bool>();
  s.tree = j.at("tree").get<bool>();
  s.components = j.at("components").get<int>();
  const char* key = s.forest ? "spanning_corners" : "cycle_corners";
  if (j.contains(key)) {
    for (const auto& c : j[key]) {
      auto pr = std::make_pair(c.at("relator").get<int>(), c.at("pos").get<int>());
      (s.forest ? s.spanning_corners : s.cycle_corners).push_back(pr);
    }
  }
  return s;
}

StallingsReport report_from_json(const nlohmann::json& j) {
  StallingsReport r;
  r.exponent_sums_ok = j.at("exponent_sums_ok").get<bool>();
  for (const auto& b : j.at("bad_relators")) r.bad_relators.push_back(b.get<int>());
  r.plus = side_from_json(j.at("plus"));
  r.minus = side_from_json(j.at("minus"));
  std::string side = j.at("side").get<std::string>();
  r.side = side == "+" ? +1 : side == "-" ? -1 : 0;
  r.pass = j.at("pass").get<bool>();
  return r;
}

}  // namespace

nlohmann::ordered_json cert_to_json(const Log& t, const Certificate& c) {
  nlohmann::ordered_json j;
  switch (c.kind) {
    case Certificate::Kind::SingleVertex:
      j["kind"] = "single_vertex";
      j["vertex"] = t.num_vertices() == 1 ? t.name(0) : "";
      break;
    case Certificate::Kind::Reduced: {
      j["kind"] = "reduced";
      j["trace"] = trace_to_json(c.trace);
      j["inner"] = cert_to_json(replay(t, c.trace), *c.inner);
      break;
    }
    case Certificate::Kind::Case1: {
      j["kind"] = "case1";
      j["ti"] = edges_json(t, c.ti);
      j["tj"] = edges_json(t, c.tj);
      if (c.tij.empty()) {
        j["tij"] = {{"edges", nlohmann::ordered_json::array()},
                    {"vertex", c.tij_vertex}};
      } else {
        j["tij"] = edges_json(t, c.tij);
      }
      j["cert_i"] = cert_to_json(extract_log(t, sublot_from_edges(t, c.ti)), *c.cert_i);
      j["cert_j"] = cert_to_json(extract_log(t, sublot_from_edges(t, c.tj)), *c.cert_j);
      if (c.tij.empty()) {
        Log point;
        point.add_vertex(c.tij_vertex);
        j["cert_ij"] = cert_to_json(point, *c.cert_ij);
      } else {
        j["cert_ij"] =
            cert_to_json(extract_log(t, sublot_from_edges(t, c.tij)), *c.cert_ij);
      }
      break;
    }
    case Certificate::Kind::Case2: {
      j["kind"] = "case2";
      auto& subs = j["sublots"] = nlohmann::ordered_json::array();
      for (const auto& s : c.sublots) subs.push_back(edges_json(t, s));
      j["flips"] = c.flips;
      j["report"] = stallings_to_json(c.report);
      auto& certs = j["subcerts"] = nlohmann::ordered_json::array();
      for (size_t i = 0; i < c.sublots.size(); ++i)
        certs.push_back(cert_to_json(
            extract_log(t, sublot_from_edges(t, c.sublots[i])), *c.subcerts[i]));
      break;
    }
    case Certificate::Kind::Assumed:
      j["kind"] = "assumed";
      j["sublot"] = edges_json(t, c.assumption.edges);
      j["reason"] = c.assumption.reason;
      break;
  }
  return j;
}

std::unique_ptr<Certificate> cert_from_json(const nlohmann::json& j) {
  auto c = std::make_unique<Certificate>();
  std::string kind = j.at("kind").get<std::string>();
  auto read_edges = [](const nlohmann::json& js) {
    std::vector<EdgeId> es;
    for (const auto& e : js.at("edges")) es.push_back(e.get<int>());
    std::sort(es.begin(), es.end());
    return es;
  };
  if (kind == "single_vertex") {
    c->kind = Certificate::Kind::SingleVertex;
  } else if (kind == "reduced") {
    c->kind = Certificate::Kind::Reduced;
    c->trace = trace_from_json(j.at("trace"));
    c->inner = cert_from_json(j.at("inner"));
  } else if (kind == "case1") {
    c->kind = Certificate::Kind::Case1;
    c->ti = read_edges(j.at("ti"));
    c->tj = read_edges(j.at("tj"));
    c->tij = read_edges(j.at("tij"));
    if (c->tij.empty()) c->tij_vertex = j.at("tij").at("vertex").get<std::string>();
    c->cert_i = cert_from_json(j.at("cert_i"));
    c->cert_j = cert_from_json(j.at("cert_j"));
    c->cert_ij = cert_from_json(j.at("cert_ij"));
  } else if (kind == "case2") {
    c->kind = Certificate::Kind::Case2;
    for (const auto& s : j.at("sublots")) c->sublots.push_back(read_edges(s));
    for (const auto& f : j.at("flips")) c->flips.push_back(f.get<int>());
    std::sort(c->flips.begin(), c->flips.end());
    if (j.contains("report")) c->report = report_from_json(j.at("report"));
    for (const auto& s : j.at("subcerts")) c->subcerts.push_back(cert_from_json(s));
  } else if (kind == "assumed") {
    c->kind = Certificate::Kind::Assumed;
    c->assumption.edges = read_edges(j.at("sublot"));
    if (j.contains("reason")) c->assumption.reason = j["reason"].get<std::string>();
  } else {
    throw Error("unknown certificate kind '" + kind + "'");
  }
  return c;
}

nlohmann::ordered_json cert_file_json(const Log& t, const Certificate& c) {
  nlohmann::ordered_json j;
  j["schema"] = "lotcert/1";
  j["lot"] = log_to_json(t);
  j["lot"].erase("schema");
  j["certificate"] = cert_to_json(t, c);
  return j;
}

}  // namespace lot

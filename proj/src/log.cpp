#include "lot/log.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace lot {

bool valid_token(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_') return false;
  }
  return true;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

Log Log::make(std::vector<std::string> names, std::vector<Edge> edges) {
  Log g;
  for (auto& n : names) g.add_vertex(n);
  for (auto& e : edges) g.add_edge(e.from, e.label, e.to);
  return g;
}

VertexId Log::add_vertex(const std::string& name) {
  if (!valid_token(name)) throw Error("invalid vertex name '" + name + "'");
  if (index_.count(name)) throw Error("duplicate vertex '" + name + "'");
  VertexId id = static_cast<VertexId>(names_.size());
  names_.push_back(name);
  index_.emplace(name, id);
  return id;
}

EdgeId Log::add_edge(VertexId from, VertexId label, VertexId to) {
  int n = num_vertices();
  if (from < 0 || from >= n || label < 0 || label >= n || to < 0 || to >= n)
    throw Error("edge references undeclared vertex");
  edges_.push_back({from, label, to});
  return static_cast<EdgeId>(edges_.size()) - 1;
}

EdgeId Log::add_edge(const std::string& from, const std::string& label,
                     const std::string& to) {
  return add_edge(vertex(from), vertex(label), vertex(to));
}

std::optional<VertexId> Log::find_vertex(const std::string& name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

VertexId Log::vertex(const std::string& name) const {
  auto v = find_vertex(name);
  if (!v) throw Error("unknown vertex '" + name + "'");
  return *v;
}

int Log::valency(VertexId v) const {
  int d = 0;
  for (const Edge& e : edges_) {
    if (e.from == v) ++d;
    if (e.to == v) ++d;
  }
  return d;
}

int Log::label_count(VertexId v) const {
  int c = 0;
  for (const Edge& e : edges_)
    if (e.label == v) ++c;
  return c;
}

LotCheck is_lot(const Log& g) {
  int n = g.num_vertices();
  if (n == 0) return {false, "empty"};
  // connectivity of the underlying undirected graph (labels do not connect)
  std::vector<std::vector<int>> adj(n);
  for (const Edge& e : g.edges()) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<char> seen(n, 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int reached = 1;
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
  if (reached != n) return {false, "disconnected"};
  if (g.num_edges() != n - 1) return {false, "cycle"};
  return {true, ""};
}

Predicates predicates(const Log& g) {
  Predicates p;
  p.injective = true;
  p.compressed = true;
  p.interior_reduced = true;
  auto note = [&](const std::string& s) {
    if (p.detail.empty()) p.detail = s;
  };

  std::vector<int> labels(g.num_vertices(), 0);
  for (const Edge& e : g.edges()) ++labels[e.label];
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (labels[v] > 1) {
      p.injective = false;
      note("vertex " + g.name(v) + " labels " + std::to_string(labels[v]) + " edges");
      break;
    }
  }

  for (EdgeId i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (e.label == e.from || e.label == e.to) {
      p.compressed = false;
      note("edge " + std::to_string(i) + " is labeled by an endpoint");
      break;
    }
  }

  // fold candidates: distinct edges, same label, sharing head or sharing
  // tail, with distinct far endpoints
  for (EdgeId i = 0; i < g.num_edges() && p.interior_reduced; ++i) {
    for (EdgeId j = i + 1; j < g.num_edges(); ++j) {
      const Edge& a = g.edge(i);
      const Edge& b = g.edge(j);
      if (a.label != b.label) continue;
      if ((a.to == b.to && a.from != b.from) ||
          (a.from == b.from && a.to != b.to)) {
        p.interior_reduced = false;
        note("edges " + std::to_string(i) + "," + std::to_string(j) +
             " are foldable");
        break;
      }
    }
  }

  if (is_lot(g).ok) {
    bool br = true;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.num_edges() > 0 && g.valency(v) == 1 && labels[v] == 0) {
        br = false;
        note("boundary vertex " + g.name(v) + " is not a label");
        break;
      }
    }
    p.boundary_reduced = br;
    p.reduced = p.compressed && p.interior_reduced && br;
  }
  return p;
}

namespace {

Log parse_log_dsl(const std::string& text) {
  Log g;
  struct PendingEdge {
    std::string f, l, t;
    int line, col;
  };
  std::vector<PendingEdge> pending;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line = line.substr(0, hash);
    // tokenize, remembering 1-based start columns
    std::vector<std::pair<std::string, int>> toks;
    size_t i = 0;
    while (i < line.size()) {
      if (std::isspace(static_cast<unsigned char>(line[i]))) {
        ++i;
        continue;
      }
      size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])))
        ++j;
      toks.emplace_back(line.substr(i, j - i), static_cast<int>(i) + 1);
      i = j;
    }
    if (toks.empty()) continue;
    const auto& [dir, dcol] = toks[0];
    if (dir == "vertices") {
      if (toks.size() < 2)
        throw ParseError(lineno, dcol, "'vertices' needs at least one name");
      for (size_t k = 1; k < toks.size(); ++k) {
        if (!valid_token(toks[k].first))
          throw ParseError(lineno, toks[k].second,
                           "invalid vertex name '" + toks[k].first + "'");
        if (g.find_vertex(toks[k].first))
          throw ParseError(lineno, toks[k].second,
                           "duplicate vertex '" + toks[k].first + "'");
        g.add_vertex(toks[k].first);
      }
    } else if (dir == "edge") {
      if (toks.size() != 4)
        throw ParseError(lineno, dcol, "'edge' needs exactly <from> <label> <to>");
      pending.push_back({toks[1].first, toks[2].first, toks[3].first, lineno, toks[1].second});
    } else {
      throw ParseError(lineno, dcol, "unknown directive '" + dir + "'");
    }
  }
  for (const auto& e : pending) {
    for (const std::string* s : {&e.f, &e.l, &e.t}) {
      if (!g.find_vertex(*s))
        throw ParseError(e.line, e.col, "undeclared vertex '" + *s + "' in edge");
    }
    g.add_edge(e.f, e.l, e.t);
  }
  return g;
}

}  // namespace

Log parse_log(const std::string& text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c == '{') {
      nlohmann::json j;
      try {
        j = nlohmann::json::parse(text);
      } catch (const nlohmann::json::exception& e) {
        throw ParseError(0, 0, std::string("bad JSON: ") + e.what());
      }
      try {
        return log_from_json(j);
      } catch (const Error&) {
        throw;
      } catch (const std::exception& e) {
        throw ParseError(0, 0, std::string("bad LOG JSON: ") + e.what());
      }
    }
    break;
  }
  return parse_log_dsl(text);
}

std::string serialize_log(const Log& g) {
  std::string out;
  if (g.num_vertices() > 0) {
    out = "vertices " + join(g.vertex_names(), " ") + "\n";
  }
  for (const Edge& e : g.edges()) {
    out += "edge " + g.name(e.from) + " " + g.name(e.label) + " " +
           g.name(e.to) + "\n";
  }
  return out;
}

nlohmann::ordered_json log_to_json(const Log& g) {
  nlohmann::ordered_json j;
  j["schema"] = "lotcert/1";
  j["vertices"] = g.vertex_names();
  auto& edges = j["edges"] = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({{"from", g.name(e.from)},
                     {"label", g.name(e.label)},
                     {"to", g.name(e.to)}});
  }
  return j;
}

Log log_from_json(const nlohmann::json& j) {
  Log g;
  if (!j.contains("vertices") || !j["vertices"].is_array())
    throw Error("LOG JSON needs a 'vertices' array");
  for (const auto& v : j["vertices"]) g.add_vertex(v.get<std::string>());
  if (j.contains("edges")) {
    for (const auto& e : j["edges"]) {
      g.add_edge(e.at("from").get<std::string>(),
                 e.at("label").get<std::string>(),
                 e.at("to").get<std::string>());
    }
  }
  return g;
}

}  // namespace lot

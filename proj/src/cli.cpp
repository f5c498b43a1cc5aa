#include "lot/cli.hpp"

#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lot/certify.hpp"
#include "lot/diagram.hpp"
#include "lot/knot.hpp"
#include "lot/log.hpp"
#include "lot/sublot.hpp"
#include "lot/sweep.hpp"
#include "lot/transform.hpp"
#include "lot/whitehead.hpp"

namespace lot {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << text;
}

Log load_log(const std::string& path) { return parse_log(read_file(path)); }

nlohmann::json load_json(const std::string& path) {
  try {
    return nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::parse_error& e) {
    throw Error("bad JSON in '" + path + "': " + e.what());
  }
}

std::string dumped(const nlohmann::ordered_json& j) { return j.dump(2) + "\n"; }

std::vector<SubLot> sublots_from_json_list(const Log& g, const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  if (j.is_object()) {
    if (j.contains("sublots"))
      list = &j["sublots"];
    else if (j.contains("assumptions"))
      list = &j["assumptions"];
    else
      throw Error("expected a list of sub-LOTs");
  }
  std::vector<SubLot> out;
  for (const auto& js : *list) out.push_back(sublot_from_json(g, js));
  return out;
}

std::vector<Assumption> assumptions_from_json(const Log& g,
                                              const nlohmann::json& j) {
  const nlohmann::json* list = &j;
  if (j.is_object() && j.contains("assumptions")) list = &j["assumptions"];
  std::vector<Assumption> out;
  for (const auto& ja : *list) {
    Assumption a;
    a.edges = sublot_from_json(g, ja).edges;
    if (ja.is_object() && ja.contains("reason"))
      a.reason = ja["reason"].get<std::string>();
    out.push_back(std::move(a));
  }
  return out;
}

std::string side_desc(const SideResult& s) {
  if (s.tree) return "tree";
  if (s.forest) return "forest (" + std::to_string(s.components) + " components)";
  return "cyclic";
}

std::string stallings_line(const StallingsReport& r) {
  std::string line = r.pass ? "pass" : "fail";
  line += " (+ side: " + side_desc(r.plus) + "; - side: " + side_desc(r.minus) + ")";
  if (!r.exponent_sums_ok) {
    line += "; nonzero exponent sum in relator";
    if (r.bad_relators.size() > 1) line += "s";
    for (size_t i = 0; i < r.bad_relators.size(); ++i)
      line += (i ? "," : " ") + std::to_string(r.bad_relators[i]);
  }
  return line;
}

std::string describe_moves(const ReductionTrace& trace) {
  std::string s = "moves: " + std::to_string(trace.moves.size()) + "\n";
  for (const Move& m : trace.moves) {
    switch (m.kind) {
      case Move::Kind::Compress:
        s += "  compress edge=" + std::to_string(m.edge) + " kept=" + m.kept +
             " merged=" + m.merged + "\n";
        break;
      case Move::Kind::BoundaryReduce:
        s += "  boundary_reduce edge=" + std::to_string(m.edge) +
             " removed=" + m.removed + "\n";
        break;
      case Move::Kind::Fold:
        s += "  fold edge1=" + std::to_string(m.edge) +
             " edge2=" + std::to_string(m.edge2) + " kept=" + m.kept +
             " merged=" + m.merged + "\n";
        break;
    }
  }
  if (!trace.relabel.empty()) {
    s += "relabel:";
    for (const auto& [from, to] : trace.relabel)
      s += " " + from + "->" + (to ? *to : "(removed)");
    s += "\n";
  }
  return s;
}

int cmd_parse(const std::string& path, bool json, std::ostream& out) {
  Log g = load_log(path);
  if (json)
    out << dumped(log_to_json(g));
  else
    out << serialize_log(g);
  return 0;
}

int cmd_reduce(const std::string& path, bool json, std::ostream& out) {
  Log g = load_log(path);
  Reduction red = reduce(g);
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = "lotcert/1";
    j["reduced"] = log_to_json(red.result);
    j["reduced"].erase("schema");
    j["trace"] = trace_to_json(red.trace);
    out << dumped(j);
  } else {
    out << serialize_log(red.result) << describe_moves(red.trace);
  }
  return 0;
}

int cmd_sublots(const std::string& path, bool maximal, bool json,
                std::ostream& out) {
  Log g = load_log(path);
  std::vector<SubLot> subs = maximal ? maximal_proper_sublots(g)
                                     : enumerate_sublots(g);
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = "lotcert/1";
    auto& arr = j["sublots"] = nlohmann::ordered_json::array();
    for (const SubLot& s : subs) arr.push_back(sublot_to_json(g, s));
    out << dumped(j);
  } else {
    for (const SubLot& s : subs) {
      std::vector<std::string> es, vs;
      for (EdgeId e : s.edges) es.push_back(std::to_string(e));
      for (VertexId v : s.vertices) vs.push_back(g.name(v));
      out << "edges=[" << join(es, ",") << "] vertices=[" << join(vs, ",")
          << "]\n";
    }
  }
  return 0;
}

int cmd_whitehead(const std::string& path, const std::string& side,
                  const std::string& dot_path, bool json, std::ostream& out) {
  Log g = load_log(path);
  Presentation p = presentation_of(g);
  int side_val = side == "+" ? +1 : side == "-" ? -1 : 0;
  if (side != "+" && side != "-" && side != "full")
    throw Error("--side must be +, - or full");
  if (json) {
    WhiteheadGraph w = whitehead_graph(p);
    nlohmann::ordered_json j;
    j["schema"] = "lotcert/1";
    j["generators"] = p.generators;
    auto& corners = j["corners"] = nlohmann::ordered_json::array();
    for (const Corner& c : w.corners)
      corners.push_back({{"exit", wg_name(p, c.exit)},
                         {"entry", wg_name(p, c.entry)},
                         {"relator", c.relator},
                         {"pos", c.pos}});
    for (int s : {+1, -1}) {
      ForestReport fr = check_forest(restrict_side(w, p, s));
      nlohmann::ordered_json js;
      js["forest"] = fr.forest;
      js["components"] = fr.components;
      js["tree"] = is_tree(restrict_side(w, p, s));
      j[s > 0 ? "plus" : "minus"] = std::move(js);
    }
    out << dumped(j);
    return 0;
  }
  std::string dot = dot_whitehead(p, side_val);
  if (dot_path.empty()) {
    out << dot;
  } else {
    write_file(dot_path, dot);
    out << "wrote " << dot_path << "\n";
  }
  return 0;
}

int cmd_stallings(const std::string& path, const std::string& relative,
                  bool json, std::ostream& out) {
  Log g = load_log(path);
  Presentation p = presentation_of(g);
  StallingsReport rep;
  if (relative.empty()) {
    rep = stallings_test(p);
  } else {
    std::vector<SubLot> ts =
        relative == "maximal" ? maximal_proper_sublots(g)
                              : sublots_from_json_list(g, load_json(relative));
    std::vector<SubPresentation> subs;
    for (const SubLot& s : ts) subs.push_back(sub_presentation(g, s));
    rep = relative_stallings_test(p, subs);
  }
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = "lotcert/1";
    nlohmann::ordered_json body = stallings_to_json(rep);
    for (auto& [k, v] : body.items()) j[k] = std::move(v);
    out << dumped(j);
  } else {
    out << stallings_line(rep) << "\n";
  }
  return rep.pass ? 0 : 1;
}

int cmd_certify(const std::string& path, const std::string& assume_path,
                const std::string& cert_path, bool json, std::ostream& out) {
  Log g = load_log(path);
  std::vector<Assumption> assume;
  if (!assume_path.empty())
    assume = assumptions_from_json(g, load_json(assume_path));
  CertifyResult res = certify(g, assume);
  if (!res.ok) {
    if (json) {
      nlohmann::ordered_json j;
      j["schema"] = "lotcert/1";
      j["ok"] = false;
      j["path"] = res.path;
      j["reason"] = res.reason;
      out << dumped(j);
    } else {
      out << "certify failed at " << res.path << ": " << res.reason << "\n";
    }
    return 1;
  }
  nlohmann::ordered_json file = cert_file_json(g, *res.cert);
  if (!cert_path.empty()) write_file(cert_path, dumped(file));
  if (json) {
    out << dumped(file);
  } else {
    out << "certified\n";
    if (!cert_path.empty()) out << "wrote " << cert_path << "\n";
  }
  return 0;
}

int cmd_check(const std::string& path, const std::string& cert_path, bool json,
              std::ostream& out) {
  Log g = load_log(path);
  nlohmann::json j = load_json(cert_path);
  if (!j.contains("certificate") || !j.contains("lot"))
    throw Error("certificate file needs 'lot' and 'certificate' fields");
  Log embedded = log_from_json(j["lot"]);
  auto emit = [&](bool ok, const std::string& cpath, const std::string& reason,
                  const std::vector<std::string>& relied) {
    if (json) {
      nlohmann::ordered_json o;
      o["schema"] = "lotcert/1";
      o["ok"] = ok;
      if (!ok) {
        o["path"] = cpath;
        o["reason"] = reason;
      }
      o["relied_on"] = relied;
      out << dumped(o);
    } else if (ok) {
      out << "certificate ok\n";
      for (const std::string& r : relied) out << "relies on assumption: " << r << "\n";
    } else {
      out << "check failed at " << cpath << ": " << reason << "\n";
    }
    return ok ? 0 : 1;
  };
  if (!(embedded == g))
    return emit(false, "(root)", "certificate was issued for a different LOT", {});
  std::unique_ptr<Certificate> cert = cert_from_json(j["certificate"]);
  CheckResult res = check_certificate(g, *cert);
  return emit(res.ok, res.path, res.reason, res.relied_on);
}

int cmd_knot2lot(const std::string& path, const std::string& prefix, bool json,
                 std::ostream& out) {
  GaussCode g = parse_gauss(read_file(path));
  Log lot = loi_of(g, prefix);
  if (json)
    out << dumped(log_to_json(lot));
  else
    out << serialize_log(lot);
  return 0;
}

int cmd_diagram_check(const std::string& diagram_path, const std::string& lot_path,
                      bool json, std::ostream& out) {
  Diagram d = diagram_from_json(load_json(diagram_path));
  Log g = load_log(lot_path);
  Presentation p = presentation_of(g);
  DiagramReport rep = validate_diagram(d, p);
  OrientationCensus census;
  if (rep.ok) census = orientation_census(d);
  if (json) {
    nlohmann::ordered_json j;
    j["schema"] = "lotcert/1";
    j["ok"] = rep.ok;
    j["violations"] = rep.violations;
    if (rep.ok) {
      j["census"] = {{"sinks", census.sinks},
                     {"sources", census.sources},
                     {"consistent_faces", census.consistent_faces},
                     {"zero_sum_faces", census.zero_sum_faces}};
    }
    out << dumped(j);
  } else if (rep.ok) {
    out << "valid spherical diagram: " << d.n_vertices << " vertices, "
        << d.edges.size() << " edges, " << d.faces.size() << " faces\n";
    auto list = [&](const char* label, const std::vector<int>& xs) {
      std::vector<std::string> ss;
      for (int x : xs) ss.push_back(std::to_string(x));
      out << label << ": [" << join(ss, ",") << "]\n";
    };
    list("sinks", census.sinks);
    list("sources", census.sources);
    list("consistent faces", census.consistent_faces);
    list("zero-sum faces", census.zero_sum_faces);
  } else {
    for (const std::string& v : rep.violations) out << v << "\n";
  }
  return rep.ok ? 0 : 1;
}

int cmd_sweep(const std::string& mode, int max_vertices, int count,
              std::uint64_t seed, int random_max_vertices, std::ostream& out) {
  SweepReport rep;
  if (mode == "certify") {
    SweepOptions opt;
    opt.max_vertices = max_vertices;
    opt.random_count = count;
    opt.random_max_vertices = random_max_vertices;
    opt.seed = seed;
    rep = sweep_certify(opt);
  } else if (mode == "reorient") {
    rep = sweep_reorient(max_vertices);
  } else {
    throw Error("sweep mode must be 'certify' or 'reorient'");
  }
  for (const std::string& line : rep.lines) out << line << "\n";
  for (const std::string& line : rep.failure_lines) out << "FAIL " << line << "\n";
  out << "total: " << rep.instances << " instances, " << rep.failures
      << " failures\n";
  return rep.failures == 0 ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"labeled-oriented-tree asphericity toolkit"};
  app.require_subcommand(1);

  std::string in_path, second_path, side = "full", dot_path, relative;
  std::string assume_path, cert_path, prefix = "x", sweep_mode;
  bool json = false, maximal = false;
  int max_vertices = 4, count = 50, random_max = 12;
  std::uint64_t seed = 0;

  auto add_json = [&](CLI::App* c) { c->add_flag("--json", json, "JSON output"); };

  CLI::App* c_parse = app.add_subcommand("parse", "validate a LOG and echo it");
  c_parse->add_option("input", in_path, "LOG file (DSL or JSON)")->required();
  add_json(c_parse);

  CLI::App* c_reduce = app.add_subcommand("reduce", "reduce a LOT, with trace");
  c_reduce->add_option("input", in_path)->required();
  add_json(c_reduce);

  CLI::App* c_sub = app.add_subcommand("sublots", "enumerate sub-LOTs");
  c_sub->add_option("input", in_path)->required();
  c_sub->add_flag("--maximal", maximal, "only maximal proper sub-LOTs");
  add_json(c_sub);

  CLI::App* c_wh = app.add_subcommand("whitehead", "Whitehead graph (DOT/JSON)");
  c_wh->add_option("input", in_path)->required();
  c_wh->add_option("--side", side, "+, - or full (default full)");
  c_wh->add_option("--dot", dot_path, "write DOT here instead of stdout");
  add_json(c_wh);

  CLI::App* c_st = app.add_subcommand("stallings", "Stallings asphericity test");
  c_st->add_option("input", in_path)->required();
  c_st->add_option("--relative", relative,
                   "sub-LOTs JSON file, or 'maximal' for the maximal proper "
                   "sub-LOTs");
  add_json(c_st);

  CLI::App* c_cert = app.add_subcommand("certify", "build an asphericity certificate");
  c_cert->add_option("input", in_path)->required();
  c_cert->add_option("--assume", assume_path,
                     "JSON list of sub-LOTs assumed aspherical");
  c_cert->add_option("--cert", cert_path, "write the certificate here");
  add_json(c_cert);

  CLI::App* c_chk = app.add_subcommand("check", "verify a certificate");
  c_chk->add_option("input", in_path)->required();
  c_chk->add_option("--cert", cert_path, "certificate JSON file")->required();
  add_json(c_chk);

  CLI::App* c_knot = app.add_subcommand(
      "knot2lot", "Gauss code to labeled oriented interval; positive crossing "
                  "O..U.. gives x z = z y, negative the reverse");
  c_knot->add_option("input", in_path, "Gauss code file")->required();
  c_knot->add_option("--prefix", prefix, "generator name prefix (default x)");
  add_json(c_knot);

  CLI::App* c_diag = app.add_subcommand("diagram-check",
                                        "validate a spherical diagram over a LOT");
  c_diag->add_option("diagram", in_path, "diagram JSON file")->required();
  c_diag->add_option("lot", second_path, "LOT file")->required();
  add_json(c_diag);

  CLI::App* c_sweep = app.add_subcommand("sweep", "property sweeps over generated LOTs");
  c_sweep->add_option("mode", sweep_mode, "certify | reorient")->required();
  c_sweep->add_option("--max-vertices", max_vertices,
                      "exhaustive bound (default 4)");
  c_sweep->add_option("--count", count, "random instances (default 50)");
  c_sweep->add_option("--seed", seed, "random seed (default 0)");
  c_sweep->add_option("--random-max-vertices", random_max,
                      "random instance size bound (default 12)");

  std::vector<const char*> argv;
  argv.push_back("lotcert");
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*c_parse) return cmd_parse(in_path, json, out);
    if (*c_reduce) return cmd_reduce(in_path, json, out);
    if (*c_sub) return cmd_sublots(in_path, maximal, json, out);
    if (*c_wh) return cmd_whitehead(in_path, side, dot_path, json, out);
    if (*c_st) return cmd_stallings(in_path, relative, json, out);
    if (*c_cert) return cmd_certify(in_path, assume_path, cert_path, json, out);
    if (*c_chk) return cmd_check(in_path, cert_path, json, out);
    if (*c_knot) return cmd_knot2lot(in_path, prefix, json, out);
    if (*c_diag) return cmd_diagram_check(in_path, second_path, json, out);
    if (*c_sweep)
      return cmd_sweep(sweep_mode, max_vertices, count, seed, random_max, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace lot

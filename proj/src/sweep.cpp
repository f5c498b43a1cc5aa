#include "lot/sweep.hpp"

#include <algorithm>
#include <set>

#include "lot/certify.hpp"
#include "lot/sublot.hpp"
#include "lot/transform.hpp"
#include "lot/whitehead.hpp"

namespace lot {

namespace {

std::vector<std::pair<int, int>> prufer_tree(const std::vector<int>& seq, int n) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> deg(n, 1);
  for (int x : seq) ++deg[x];
  std::set<int> leaves;
  for (int v = 0; v < n; ++v)
    if (deg[v] == 1) leaves.insert(v);
  for (int x : seq) {
    int leaf = *leaves.begin();
    leaves.erase(leaves.begin());
    edges.push_back({leaf, x});
    if (--deg[x] == 1) leaves.insert(x);
  }
  int a = *leaves.begin();
  leaves.erase(leaves.begin());
  edges.push_back({a, *leaves.begin()});
  return edges;
}

Log build_lot(int n, const std::vector<std::pair<int, int>>& tree,
              const std::vector<int>& labels, unsigned orient_mask) {
  Log g;
  for (int v = 0; v < n; ++v) g.add_vertex(std::string(1, char('a' + v)));
  for (size_t i = 0; i < tree.size(); ++i) {
    auto [u, v] = tree[i];
    if (orient_mask >> i & 1) std::swap(u, v);
    g.add_edge(u, labels[i], v);
  }
  return g;
}

}  // namespace

void exhaustive_injective_lots(int n, const std::function<void(const Log&)>& fn) {
  if (n < 1 || n > 26) throw Error("vertex count out of range");
  if (n == 1) {
    Log g;
    g.add_vertex("a");
    fn(g);
    return;
  }
  int ne = n - 1;
  std::vector<int> seq(std::max(0, n - 2), 0);
  while (true) {
    std::vector<std::pair<int, int>> tree = prufer_tree(seq, n);
    // all ordered injective label assignments, then all orientations
    std::vector<int> labels(ne, -1);
    std::vector<char> used(n, 0);
    auto assign = [&](auto&& self, int i) -> void {
      if (i == ne) {
        for (unsigned mask = 0; mask < (1u << ne); ++mask)
          fn(build_lot(n, tree, labels, mask));
        return;
      }
      for (int v = 0; v < n; ++v) {
        if (used[v]) continue;
        used[v] = 1;
        labels[i] = v;
        self(self, i + 1);
        used[v] = 0;
      }
    };
    assign(assign, 0);

    int pos = static_cast<int>(seq.size()) - 1;
    while (pos >= 0 && seq[pos] == n - 1) seq[pos--] = 0;
    if (pos < 0) break;
    ++seq[pos];
  }
}

Log random_injective_lot(Rng& rng, int n) {
  if (n < 1 || n > 26) throw Error("vertex count out of range");
  if (n == 1) {
    Log g;
    g.add_vertex("a");
    return g;
  }
  std::vector<int> seq(std::max(0, n - 2));
  for (int& x : seq) x = rng.below(n);
  std::vector<std::pair<int, int>> tree = prufer_tree(seq, n);
  std::vector<int> perm(n);
  for (int v = 0; v < n; ++v) perm[v] = v;
  for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rng.below(i + 1)]);
  std::vector<int> labels(perm.begin(), perm.begin() + (n - 1));
  unsigned mask = 0;
  for (int i = 0; i < n - 1; ++i) mask |= (rng.coin() ? 1u : 0u) << i;
  return build_lot(n, tree, labels, mask);
}

namespace {

std::string one_line(const Log& g) { return log_to_json(g).dump(); }

// certify plus independent re-check of the produced certificate
bool certify_and_check(const Log& g, std::string* why) {
  CertifyResult res = certify(g);
  if (!res.ok) {
    *why = "certify failed at " + res.path + ": " + res.reason;
    return false;
  }
  CheckResult chk = check_certificate(g, *res.cert);
  if (!chk.ok) {
    *why = "check failed at " + chk.path + ": " + chk.reason;
    return false;
  }
  return true;
}

}  // namespace

SweepReport sweep_certify(const SweepOptions& opt) {
  SweepReport rep;
  for (int n = 1; n <= opt.max_vertices; ++n) {
    int count = 0, bad = 0;
    exhaustive_injective_lots(n, [&](const Log& g) {
      ++count;
      std::string why;
      if (!certify_and_check(g, &why)) {
        ++bad;
        rep.failure_lines.push_back(why + "; lot: " + one_line(g));
      }
    });
    rep.instances += count;
    rep.failures += bad;
    rep.lines.push_back("exhaustive n=" + std::to_string(n) + ": " +
                        std::to_string(count) + " instances, " +
                        std::to_string(bad) + " failures");
  }
  if (opt.random_count > 0) {
    Rng rng(opt.seed);
    int bad = 0;
    for (int i = 0; i < opt.random_count; ++i) {
      int n = 2 + rng.below(std::max(1, opt.random_max_vertices - 1));
      Log g = random_injective_lot(rng, n);
      std::string why;
      if (!certify_and_check(g, &why)) {
        ++bad;
        rep.failure_lines.push_back(why + "; lot: " + one_line(g));
      }
    }
    rep.instances += opt.random_count;
    rep.failures += bad;
    rep.lines.push_back("random seed=" + std::to_string(opt.seed) + " count=" +
                        std::to_string(opt.random_count) + " max-vertices=" +
                        std::to_string(opt.random_max_vertices) + ": " +
                        std::to_string(bad) + " failures");
  }
  return rep;
}

namespace {

bool no_boundary_reducible_sublot(const Log& g) {
  for (const SubLot& s : enumerate_sublots(g)) {
    Log sub = extract_log(g, s);
    Predicates pr = predicates(sub);
    if (!pr.boundary_reduced.value_or(true)) return false;
  }
  return true;
}

}  // namespace

SweepReport sweep_reorient(int max_vertices) {
  SweepReport rep;
  for (int n = 1; n <= max_vertices; ++n) {
    int eligible = 0, bad = 0;
    exhaustive_injective_lots(n, [&](const Log& g) {
      Predicates pr = predicates(g);
      if (!pr.reduced.value_or(false)) return;
      if (!no_boundary_reducible_sublot(g)) return;
      ++eligible;
      ReorientResult rr = find_reorientation(g, {});
      if (!rr.found) {
        ++bad;
        rep.failure_lines.push_back("no reorientation; lot: " + one_line(g));
        return;
      }
      Log q = reorient(g, rr.flips);
      WhiteheadGraph w = whitehead_graph(presentation_of(q));
      Presentation p = presentation_of(q);
      bool plus = is_tree(restrict_side(w, p, +1));
      bool minus = is_tree(restrict_side(w, p, -1));
      if (!plus || !minus) {
        ++bad;
        rep.failure_lines.push_back("reorientation is not two-sided tree; lot: " +
                                    one_line(g));
      }
    });
    rep.instances += eligible;
    rep.failures += bad;
    rep.lines.push_back("n=" + std::to_string(n) + ": " +
                        std::to_string(eligible) + " eligible instances, " +
                        std::to_string(bad) + " failures");
  }
  return rep;
}

}  // namespace lot

// ---------------------------------------------------------------------------
// Property sweeps over generated LOT instances.
//
// `exhaustive_injective_lots` streams every injective LOT with exactly n
// vertices: all labeled tree shapes (via Pruefer sequences), all injective
// edge labelings, all edge orientations.  `sweep_certify` certifies and
// re-checks every instance up to a vertex bound plus a seeded random batch;
// `sweep_reorient` takes the reduced injective instances with no
// boundary-reducible sub-LOT and confirms an orientation exists whose
// Whitehead graph sides are both trees.  Reports are deterministic for a
// fixed seed.
// ---------------------------------------------------------------------------
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "lot/log.hpp"
#include "lot/util.hpp"

namespace lot {

void exhaustive_injective_lots(int n, const std::function<void(const Log&)>& fn);

// random tree + injective labeling + orientations (n >= 1)
Log random_injective_lot(Rng& rng, int n);

struct SweepOptions {
  int max_vertices = 5;
  int random_count = 1000;
  int random_max_vertices = 12;
  std::uint64_t seed = 0;
};

struct SweepReport {
  int instances = 0;
  int failures = 0;
  std::vector<std::string> lines;          // one summary line per bucket
  std::vector<std::string> failure_lines;  // one line per failing instance
};

SweepReport sweep_certify(const SweepOptions& opt);
SweepReport sweep_reorient(int max_vertices);

}  // namespace lot

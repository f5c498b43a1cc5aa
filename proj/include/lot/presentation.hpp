#pragma once
// Group presentations associated with LOGs.
//
// presentation_of maps a LOG to its Wirtinger-style presentation: one
// generator per vertex, and for every edge [x, z, y] the length-4 relator
// x z y^-1 z^-1.  Relator ids equal edge ids.

#include <string>
#include <vector>

#include "lot/log.hpp"

namespace lot {

struct Letter {
  int gen;   // index into Presentation::generators
  int sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};
using Word = std::vector<Letter>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;
};

// A full sub-presentation given by generator and relator id subsets.
struct SubPresentation {
  std::vector<int> gens;      // sorted ascending
  std::vector<int> relators;  // sorted ascending
};

Presentation presentation_of(const Log& g);

// Per-relator signed letter counts.  all_generator_sums_zero asks that every
// generator's count vanishes in every relator; all_totals_zero only that each
// relator's total signed length vanishes (what the sphere/forest tests use).
struct ExponentSums {
  std::vector<std::vector<int>> per_generator;  // [relator][generator]
  std::vector<int> totals;                      // [relator]
  bool all_generator_sums_zero = true;
  bool all_totals_zero = true;
};
ExponentSums exponent_sums(const Presentation& p);

// Replace each generator in `gens` by its inverse throughout all relators.
// Involution; preserves relator lengths.
Presentation invert_generators(const Presentation& p, const std::vector<int>& gens);

std::string word_str(const Presentation& p, const Word& w);  // "x z y^-1 z^-1"

}  // namespace lot

// ---------------------------------------------------------------------------
// Long virtual knots as Gauss codes.
//
// A code is a whitespace-separated list of passages `O<id><sign>` /
// `U<id><sign>` read along the strand from one endpoint to the other, e.g.
// "O1+ U2+ O3+ U1+ O2+ U3+".  Each crossing id must occur exactly twice, once
// over and once under, with equal signs; virtual crossings are never listed.
//
// `loi_of` cuts the strand at its under-passages into arcs x0..xn and emits
// one edge per crossing: with under-in arc x, under-out arc y and over arc z,
// a positive crossing gives [x,z,y] and a negative one [y,z,x].  The result
// is a labeled oriented interval: the underlying graph is the path x0-..-xn.
// Alternating codes always yield injective intervals.
// ---------------------------------------------------------------------------
#pragma once

#include <string>
#include <vector>

#include "lot/log.hpp"

namespace lot {

struct Passage {
  int crossing = 0;
  bool over = false;
  int sign = +1;
  bool operator==(const Passage&) const = default;
};

struct GaussCode {
  std::vector<Passage> passages;
};

// throws ParseError on malformed tokens, unmatched or triple crossings,
// same-kind pairs, or sign mismatches
GaussCode parse_gauss(const std::string& text);

// kinds strictly alternate along the strand (vacuously true when short)
bool is_alternating(const GaussCode& g);

// the labeled oriented interval of the code's Wirtinger presentation;
// generators named <prefix>0..<prefix>n, edges in crossing first-appearance
// order
Log loi_of(const GaussCode& g, const std::string& prefix = "x");

}  // namespace lot

#include "lot/presentation.hpp"

#include <algorithm>

namespace lot {

Presentation presentation_of(const Log& g) {
  Presentation p;
  p.generators = g.vertex_names();
  p.relators.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    p.relators.push_back(Word{{e.from, +1}, {e.label, +1}, {e.to, -1}, {e.label, -1}});
  }
  return p;
}

ExponentSums exponent_sums(const Presentation& p) {
  ExponentSums s;
  int ng = static_cast<int>(p.generators.size());
  for (const Word& w : p.relators) {
    std::vector<int> counts(ng, 0);
    int total = 0;
    for (const Letter& l : w) {
      counts.at(l.gen) += l.sign;
      total += l.sign;
    }
    for (int c : counts)
      if (c != 0) s.all_generator_sums_zero = false;
    if (total != 0) s.all_totals_zero = false;
    s.per_generator.push_back(std::move(counts));
    s.totals.push_back(total);
  }
  return s;
}

Presentation invert_generators(const Presentation& p, const std::vector<int>& gens) {
  std::vector<char> flip(p.generators.size(), 0);
  for (int g : gens) {
    if (g < 0 || g >= static_cast<int>(p.generators.size()))
      throw Error("invert_generators: bad generator id");
    flip[g] = 1;
  }
  Presentation q = p;
  for (Word& w : q.relators)
    for (Letter& l : w)
      if (flip[l.gen]) l.sign = -l.sign;
  return q;
}

std::string word_str(const Presentation& p, const Word& w) {
  std::vector<std::string> parts;
  for (const Letter& l : w) {
    std::string s = p.generators.at(l.gen);
    if (l.sign < 0) s += "^-1";
    parts.push_back(s);
  }
  return join(parts, " ");
}

}  // namespace lot

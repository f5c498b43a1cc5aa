#include "lot/knot.hpp"

#include <map>

#include "lot/util.hpp"

namespace lot {

GaussCode parse_gauss(const std::string& text) {
  GaussCode g;
  int line = 1, col = 1;
  size_t i = 0;
  auto fail = [&](const std::string& msg) { throw ParseError(line, col, msg); };
  while (i < text.size()) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++col;
      ++i;
      continue;
    }
    if (text[i] == '#') {  // comment to end of line
      while (i < text.size() && text[i] != '\n') ++i;
      continue;
    }
    int tok_col = col;
    std::string tok;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) {
      tok += text[i++];
      ++col;
    }
    col = tok_col;
    Passage p;
    if (tok.size() < 3 || (tok[0] != 'O' && tok[0] != 'U'))
      fail("expected O<id><sign> or U<id><sign>, got '" + tok + "'");
    p.over = tok[0] == 'O';
    char sc = tok.back();
    if (sc != '+' && sc != '-') fail("passage '" + tok + "' missing +/- sign");
    p.sign = sc == '+' ? +1 : -1;
    std::string digits = tok.substr(1, tok.size() - 2);
    if (digits.empty() ||
        digits.find_first_not_of("0123456789") != std::string::npos)
      fail("bad crossing id in '" + tok + "'");
    p.crossing = std::stoi(digits);
    g.passages.push_back(p);
    col = tok_col + static_cast<int>(tok.size());
  }

  std::map<int, std::vector<const Passage*>> seen;
  for (const Passage& p : g.passages) seen[p.crossing].push_back(&p);
  line = col = 1;  // crossing-level errors carry no useful position
  for (const auto& [id, ps] : seen) {
    if (ps.size() != 2)
      throw ParseError(1, 1, "crossing " + std::to_string(id) + " appears " +
                                 std::to_string(ps.size()) + " times, expected 2");
    if (ps[0]->over == ps[1]->over)
      throw ParseError(1, 1, "crossing " + std::to_string(id) +
                                 " passes twice on the same side");
    if (ps[0]->sign != ps[1]->sign)
      throw ParseError(1, 1, "crossing " + std::to_string(id) +
                                 " has mismatched signs");
  }
  return g;
}

bool is_alternating(const GaussCode& g) {
  for (size_t i = 1; i < g.passages.size(); ++i)
    if (g.passages[i].over == g.passages[i - 1].over) return false;
  return true;
}

Log loi_of(const GaussCode& g, const std::string& prefix) {
  int n = 0;
  for (const Passage& p : g.passages)
    if (!p.over) ++n;

  Log lot;
  for (int a = 0; a <= n; ++a) lot.add_vertex(prefix + std::to_string(a));

  // arc active at each passage = number of under-passages before it
  std::map<int, int> over_arc, under_in, under_sign;
  std::vector<int> order;  // crossings by first appearance
  int arc = 0;
  for (const Passage& p : g.passages) {
    if (!over_arc.count(p.crossing) && !under_in.count(p.crossing))
      order.push_back(p.crossing);
    if (p.over) {
      over_arc[p.crossing] = arc;
    } else {
      under_in[p.crossing] = arc;
      under_sign[p.crossing] = p.sign;
      ++arc;
    }
  }

  for (int id : order) {
    int x = under_in.at(id);      // arc entering underneath
    int y = x + 1;                // arc leaving underneath
    int z = over_arc.at(id);      // arc passing over
    if (under_sign.at(id) > 0)
      lot.add_edge(x, z, y);
    else
      lot.add_edge(y, z, x);
  }
  return lot;
}

}  // namespace lot

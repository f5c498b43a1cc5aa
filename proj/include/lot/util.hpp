#pragma once
// Shared helpers: error types, token validation, deterministic RNG.

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace lot {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Parse failure with 1-based source position (line 0 = whole-input error,
// e.g. malformed JSON where no line/column is tracked).
struct ParseError : Error {
  int line, col;
  ParseError(int line_, int col_, const std::string& msg)
      : Error("parse error at " + std::to_string(line_) + ":" +
              std::to_string(col_) + ": " + msg),
        line(line_),
        col(col_) {}
};

// Identifiers: [A-Za-z0-9_]+
bool valid_token(const std::string& s);

// mt19937_64 output is bit-exact per the standard; raw modulo keeps draws
// portable (std::uniform_int_distribution is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}
  std::uint64_t raw() { return eng_(); }
  int below(int n) { return static_cast<int>(raw() % static_cast<std::uint64_t>(n)); }
  bool coin() { return (raw() & 1u) != 0; }

 private:
  std::mt19937_64 eng_;
};

std::string join(const std::vector<std::string>& parts, const std::string& sep);

}  // namespace lot

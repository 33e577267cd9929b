#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "mwgames/rational.hpp"

namespace mwgames {

struct PayoffPair {
  Rational row;
  Rational col;

  friend bool operator==(const PayoffPair&, const PayoffPair&) = default;
  friend auto operator<=>(const PayoffPair&, const PayoffPair&) = default;
};

std::string to_string(const PayoffPair& p);

// Flat index of cell (i, j) in an n x m grid; shared by games, states and
// payoff operators.
constexpr std::size_t flat_index(std::size_t i, std::size_t j, std::size_t cols) {
  return i * cols + j;
}

// n x m grid of payoff pairs, n, m >= 1. Immutable after construction.
class BimatrixGame {
 public:
  // Throws DimensionError when rows or cols is zero or cells.size() != rows * cols.
  BimatrixGame(std::size_t rows, std::size_t cols, std::vector<PayoffPair> cells);

  // Row-major grid constructor; throws ParseError on ragged input.
  static BimatrixGame from_grid(const std::vector<std::vector<PayoffPair>>& grid);

  // Row payoffs a, column payoffs b, same shape.
  static BimatrixGame from_matrices(const std::vector<std::vector<Rational>>& a,
                                    const std::vector<std::vector<Rational>>& b);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const PayoffPair& at(std::size_t i, std::size_t j) const;
  const std::vector<PayoffPair>& cells() const { return cells_; }

  friend bool operator==(const BimatrixGame&, const BimatrixGame&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<PayoffPair> cells_;
};

struct Shift {
  std::size_t row = 0;
  std::size_t col = 0;

  friend bool operator==(const Shift&, const Shift&) = default;
  friend auto operator<=>(const Shift&, const Shift&) = default;
};

// Game file format:
//   {"rows": n, "cols": m, "payoffs": [[[a, b], ...], ...]}
// Each payoff is a JSON integer, a "p/q" string or a decimal string.
BimatrixGame parse_game(std::string_view text);

// Canonical form: integers as JSON numbers, everything else as lowest-terms
// "p/q" strings, one grid row per line.
std::string serialize_game(const BimatrixGame& g);

// Output cell (u, v) is g((u + r) mod n, (v + c) mod m).
BimatrixGame cyclic_shift_game(const BimatrixGame& g, std::size_t r, std::size_t c);

bool games_equal(const BimatrixGame& g, const BimatrixGame& h);

// Lexicographically smallest shift taking g to h, if any.
std::optional<Shift> find_cyclic_relabeling(const BimatrixGame& g, const BimatrixGame& h);

std::set<PayoffPair> outcome_set(const BimatrixGame& g);

bool is_zero_sum(const BimatrixGame& g);

}  // namespace mwgames

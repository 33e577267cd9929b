#include "mwgames/game.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "mwgames/errors.hpp"

namespace mwgames {
namespace {

using nlohmann::json;

std::string cell_name(std::size_t i, std::size_t j) {
  return "(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

Rational parse_payoff(const json& v, std::size_t i, std::size_t j, const char* which) {
  std::string where = std::string(which) + " payoff of cell " + cell_name(i, j);
  if (v.is_number_integer()) {
    return v.is_number_unsigned() ? Rational(BigInt(v.get<std::uint64_t>()), BigInt(1))
                                  : Rational(v.get<std::int64_t>());
  }
  if (v.is_string()) {
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::exception& e) {
      throw ParseError(where + ": " + e.what(), i, j);
    }
  }
  if (v.is_number_float()) {
    throw ParseError(where + ": floating-point literal; write it as a decimal string such as \"0.25\"",
                     i, j);
  }
  throw ParseError(where + ": expected an integer, \"p/q\" string or decimal string", i, j);
}

std::string render_payoff(const Rational& r) {
  if (r.is_integer()) {
    BigInt v = r.numerator();
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
      return v.str();
    }
  }
  return "\"" + r.to_string() + "\"";
}

}  // namespace

std::string to_string(const PayoffPair& p) {
  return "(" + p.row.to_string() + ", " + p.col.to_string() + ")";
}

BimatrixGame::BimatrixGame(std::size_t rows, std::size_t cols, std::vector<PayoffPair> cells)
    : rows_(rows), cols_(cols), cells_(std::move(cells)) {
  if (rows_ == 0 || cols_ == 0) {
    throw DimensionError("a bimatrix game needs at least one row and one column");
  }
  if (cells_.size() != rows_ * cols_) {
    throw DimensionError("expected " + std::to_string(rows_ * cols_) + " cells, got " +
                         std::to_string(cells_.size()));
  }
}

BimatrixGame BimatrixGame::from_grid(const std::vector<std::vector<PayoffPair>>& grid) {
  if (grid.empty()) throw ParseError("game has zero rows");
  const std::size_t cols = grid.front().size();
  if (cols == 0) throw ParseError("game has zero columns", 0);
  std::vector<PayoffPair> cells;
  cells.reserve(grid.size() * cols);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i].size() != cols) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(grid[i].size()) +
                           " entries, expected " + std::to_string(cols),
                       i);
    }
    cells.insert(cells.end(), grid[i].begin(), grid[i].end());
  }
  return BimatrixGame(grid.size(), cols, std::move(cells));
}

BimatrixGame BimatrixGame::from_matrices(const std::vector<std::vector<Rational>>& a,
                                         const std::vector<std::vector<Rational>>& b) {
  if (a.size() != b.size()) throw DimensionError("payoff matrices differ in row count");
  std::vector<std::vector<PayoffPair>> grid(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) throw DimensionError("payoff matrices differ in shape");
    for (std::size_t j = 0; j < a[i].size(); ++j) grid[i].push_back({a[i][j], b[i][j]});
  }
  return from_grid(grid);
}

const PayoffPair& BimatrixGame::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw std::out_of_range("cell " + cell_name(i, j) + " outside " + std::to_string(rows_) +
                            "x" + std::to_string(cols_) + " game");
  }
  return cells_[flat_index(i, j, cols_)];
}

BimatrixGame parse_game(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed game file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("game file must be an object");
  for (const char* key : {"rows", "cols", "payoffs"}) {
    if (!doc.contains(key)) throw ParseError(std::string("game file lacks \"") + key + "\"");
  }
  if (!doc["rows"].is_number_integer() || !doc["cols"].is_number_integer()) {
    throw ParseError("\"rows\" and \"cols\" must be integers");
  }
  const auto rows = doc["rows"].get<std::int64_t>();
  const auto cols = doc["cols"].get<std::int64_t>();
  if (rows <= 0) throw ParseError("game has zero rows");
  if (cols <= 0) throw ParseError("game has zero columns");

  const json& payoffs = doc["payoffs"];
  if (!payoffs.is_array()) throw ParseError("\"payoffs\" must be an array of rows");
  if (payoffs.size() != static_cast<std::size_t>(rows)) {
    throw ParseError("\"rows\" is " + std::to_string(rows) + " but \"payoffs\" has " +
                     std::to_string(payoffs.size()) + " rows");
  }

  std::vector<PayoffPair> cells;
  cells.reserve(static_cast<std::size_t>(rows * cols));
  for (std::size_t i = 0; i < payoffs.size(); ++i) {
    const json& row = payoffs[i];
    if (!row.is_array()) throw ParseError("row " + std::to_string(i) + " is not an array", i);
    if (row.size() != static_cast<std::size_t>(cols)) {
      throw ParseError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                           " entries, expected " + std::to_string(cols),
                       i);
    }
    for (std::size_t j = 0; j < row.size(); ++j) {
      const json& cell = row[j];
      if (!cell.is_array() || cell.size() != 2) {
        throw ParseError("cell " + cell_name(i, j) + " must be a pair [a, b]", i, j);
      }
      cells.push_back({parse_payoff(cell[0], i, j, "row"), parse_payoff(cell[1], i, j, "column")});
    }
  }
  return BimatrixGame(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols),
                      std::move(cells));
}

std::string serialize_game(const BimatrixGame& g) {
  std::ostringstream os;
  os << "{\n  \"rows\": " << g.rows() << ",\n  \"cols\": " << g.cols() << ",\n  \"payoffs\": [\n";
  for (std::size_t i = 0; i < g.rows(); ++i) {
    os << "    [";
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const PayoffPair& p = g.at(i, j);
      os << (j ? ", " : "") << "[" << render_payoff(p.row) << ", " << render_payoff(p.col) << "]";
    }
    os << "]" << (i + 1 < g.rows() ? "," : "") << "\n";
  }
  os << "  ]\n}\n";
  return os.str();
}

BimatrixGame cyclic_shift_game(const BimatrixGame& g, std::size_t r, std::size_t c) {
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();
  if (r >= n || c >= m) {
    throw DimensionError("shift (" + std::to_string(r) + "," + std::to_string(c) +
                         ") out of range for " + std::to_string(n) + "x" + std::to_string(m) +
                         " game");
  }
  std::vector<PayoffPair> cells;
  cells.reserve(n * m);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < m; ++v) cells.push_back(g.at((u + r) % n, (v + c) % m));
  }
  return BimatrixGame(n, m, std::move(cells));
}

bool games_equal(const BimatrixGame& g, const BimatrixGame& h) { return g == h; }

std::optional<Shift> find_cyclic_relabeling(const BimatrixGame& g, const BimatrixGame& h) {
  if (g.rows() != h.rows() || g.cols() != h.cols()) return std::nullopt;
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < m; ++c) {
      bool match = true;
      for (std::size_t u = 0; u < n && match; ++u) {
        for (std::size_t v = 0; v < m && match; ++v) {
          match = g.at((u + r) % n, (v + c) % m) == h.at(u, v);
        }
      }
      if (match) return Shift{r, c};
    }
  }
  return std::nullopt;
}

std::set<PayoffPair> outcome_set(const BimatrixGame& g) {
  return {g.cells().begin(), g.cells().end()};
}

bool is_zero_sum(const BimatrixGame& g) {
  for (const PayoffPair& p : g.cells()) {
    if (p.row + p.col != Rational(0)) return false;
  }
  return true;
}

}  // namespace mwgames

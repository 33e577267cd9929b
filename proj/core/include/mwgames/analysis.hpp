#pragma once

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "mwgames/game.hpp"
#include "mwgames/schemes.hpp"
#include "mwgames/state.hpp"

namespace mwgames {

// ---------------------------------------------------------------------------
// Scheme verification
// ---------------------------------------------------------------------------

struct RecoveryEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  bool pass = false;
  // Present exactly when pass.
  std::optional<Shift> shift;
  // Outcomes of the original game that the induced game no longer contains.
  // Always empty on pass.
  std::set<PayoffPair> missing;

  friend bool operator==(const RecoveryEntry&, const RecoveryEntry&) = default;
};

struct RecoveryReport {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string row_family;
  std::string col_family;
  // One entry per basis state |ij>, in flat index order.
  std::vector<RecoveryEntry> entries;

  bool all_pass() const;
  const RecoveryEntry& entry(std::size_t i, std::size_t j) const;

  friend bool operator==(const RecoveryReport&, const RecoveryReport&) = default;
};

// Induces the game for every basis state |ij> and looks for a cyclic
// relabeling back to g.
RecoveryReport check_recovery(const BimatrixGame& g, const OperatorFamily& fam_row,
                              const OperatorFamily& fam_col);

struct FlawDemo {
  InducedGame induced;
  RecoveryEntry entry;

  friend bool operator==(const FlawDemo&, const FlawDemo&) = default;
};

// The it3 scheme started from |01>. Requires a 3x3 game.
FlawDemo demo_flaw(const BimatrixGame& g);

struct SchemePair {
  OperatorFamily row;
  OperatorFamily col;

  std::string id() const;
};

struct CellDifference {
  std::size_t s = 0;
  std::size_t t = 0;
  PayoffPair a;
  PayoffPair b;

  friend bool operator==(const CellDifference&, const CellDifference&) = default;
};

struct ComparisonReport {
  std::string scheme_a;
  std::string scheme_b;
  std::string state;
  bool exact = true;
  bool equal = true;
  std::vector<CellDifference> differences;

  friend bool operator==(const ComparisonReport&, const ComparisonReport&) = default;
};

// Cell-by-cell comparison of the games induced by two scheme pairs. Exact when
// both induced games are exact, else within float_tol.
ComparisonReport compare_schemes(const BimatrixGame& g, const DensityOperator& state,
                                 const SchemePair& a, const SchemePair& b,
                                 std::string state_label = {}, double float_tol = 1e-9);

// ---------------------------------------------------------------------------
// Equilibria
// ---------------------------------------------------------------------------

enum class Player { kRow, kColumn };

// Pure strategies of `responder` maximizing its expected payoff against the
// opponent's `opponent_strategy`. Ties are all returned, ascending.
std::vector<std::size_t> best_responses(const BimatrixGame& g, Player responder,
                                        const MixedStrategy& opponent_strategy);

// Zero tolerance: no pure deviation strictly improves either player.
bool is_nash_equilibrium(const BimatrixGame& g, const MixedStrategy& p, const MixedStrategy& q);

std::vector<std::pair<std::size_t, std::size_t>> pure_nash(const BimatrixGame& g);

struct MixedEquilibrium {
  MixedStrategy p;
  MixedStrategy q;
  PayoffPair value;

  friend bool operator==(const MixedEquilibrium&, const MixedEquilibrium&) = default;
};

struct EquilibriumSet {
  std::vector<std::pair<std::size_t, std::size_t>> pure;
  // Equilibria with at least one player randomizing.
  std::vector<MixedEquilibrium> mixed;
  // Some support system had a continuum of solutions, or an equilibrium has
  // more pure best responses than its support size. Only a representative of
  // each continuum is listed.
  bool degenerate = false;

  friend bool operator==(const EquilibriumSet&, const EquilibriumSet&) = default;
};

inline constexpr std::size_t kMaxEquilibriumDim = 6;

// Exact support enumeration over equal-size supports. Throws DimensionError
// when either dimension exceeds kMaxEquilibriumDim.
EquilibriumSet mixed_nash(const BimatrixGame& g);

}  // namespace mwgames

#include "mwgames/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <iterator>

#include "mwgames/errors.hpp"

namespace mwgames {
namespace {

enum class SolveStatus { kNone, kUnique, kContinuum };

struct Solution {
  SolveStatus status = SolveStatus::kNone;
  std::vector<Rational> x;
};

// Gauss-Jordan elimination on the augmented matrix [A | b]. Free variables of
// a consistent singular system are set to zero.
Solution solve_exact(std::vector<std::vector<Rational>> aug, std::size_t unknowns) {
  const std::size_t eqs = aug.size();
  std::vector<std::size_t> pivot_col;
  std::size_t row = 0;
  for (std::size_t col = 0; col < unknowns && row < eqs; ++col) {
    std::size_t pivot = row;
    while (pivot < eqs && aug[pivot][col].sign() == 0) ++pivot;
    if (pivot == eqs) continue;
    std::swap(aug[pivot], aug[row]);
    const Rational inv = Rational(1) / aug[row][col];
    for (auto& v : aug[row]) v *= inv;
    for (std::size_t r = 0; r < eqs; ++r) {
      if (r == row || aug[r][col].sign() == 0) continue;
      const Rational f = aug[r][col];
      for (std::size_t c = col; c <= unknowns; ++c) aug[r][c] -= f * aug[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < eqs; ++r) {
    if (aug[r][unknowns].sign() != 0) return {};
  }
  Solution s;
  s.status = pivot_col.size() == unknowns ? SolveStatus::kUnique : SolveStatus::kContinuum;
  s.x.assign(unknowns, Rational(0));
  for (std::size_t r = 0; r < pivot_col.size(); ++r) s.x[pivot_col[r]] = aug[r][unknowns];
  return s;
}

// Opponent mix over `theirs` making every strategy in `mine` pay the same.
// payoff(a, b) is the responder's payoff for own strategy a against b.
template <typename PayoffFn>
Solution indifference(const std::vector<std::size_t>& mine, const std::vector<std::size_t>& theirs,
                      PayoffFn payoff) {
  const std::size_t k = theirs.size();
  std::vector<std::vector<Rational>> aug;
  aug.reserve(mine.size() + 1);
  for (std::size_t a : mine) {
    std::vector<Rational> eq;
    eq.reserve(k + 2);
    for (std::size_t b : theirs) eq.push_back(payoff(a, b));
    eq.emplace_back(-1);  // common value
    eq.emplace_back(0);
    aug.push_back(std::move(eq));
  }
  std::vector<Rational> norm(k, Rational(1));
  norm.emplace_back(0);
  norm.emplace_back(1);
  aug.push_back(std::move(norm));
  return solve_exact(std::move(aug), k + 1);
}

void for_each_subset(std::size_t n, std::size_t k,
                     const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t t = 0; t < k; ++t) idx[t] = t;
  for (;;) {
    fn(idx);
    std::size_t t = k;
    while (t > 0 && idx[t - 1] == n - k + (t - 1)) --t;
    if (t == 0) return;
    ++idx[t - 1];
    for (std::size_t u = t; u < k; ++u) idx[u] = idx[u - 1] + 1;
  }
}

std::optional<MixedStrategy> spread(const std::vector<Rational>& x,
                                    const std::vector<std::size_t>& support, std::size_t size) {
  std::vector<Rational> full(size, Rational(0));
  for (std::size_t t = 0; t < support.size(); ++t) {
    if (x[t].sign() < 0) return std::nullopt;
    full[support[t]] = x[t];
  }
  return MixedStrategy(std::move(full));
}

bool is_pure(const MixedStrategy& s) { return s.support().size() == 1; }

}  // namespace

bool RecoveryReport::all_pass() const {
  return std::all_of(entries.begin(), entries.end(), [](const RecoveryEntry& e) { return e.pass; });
}

const RecoveryEntry& RecoveryReport::entry(std::size_t i, std::size_t j) const {
  if (i >= rows || j >= cols) throw std::out_of_range("no such basis state");
  return entries.at(flat_index(i, j, cols));
}

RecoveryReport check_recovery(const BimatrixGame& g, const OperatorFamily& fam_row,
                              const OperatorFamily& fam_col) {
  if (fam_row.dim() != g.rows() || fam_col.dim() != g.cols()) {
    throw DimensionError("families do not act on the game's dimensions");
  }
  RecoveryReport report{g.rows(), g.cols(), fam_row.id(), fam_col.id(), {}};
  const std::set<PayoffPair> original = outcome_set(g);
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      const InducedGame ig =
          induce_bimatrix(g, density_from_pure(basis_state(i, j, g.rows(), g.cols())), fam_row,
                          fam_col);
      RecoveryEntry e{i, j, false, find_cyclic_relabeling(g, ig.game), {}};
      e.pass = e.shift.has_value();
      if (!e.pass) {
        const std::set<PayoffPair> induced = outcome_set(ig.game);
        std::set_difference(original.begin(), original.end(), induced.begin(), induced.end(),
                            std::inserter(e.missing, e.missing.end()));
      }
      report.entries.push_back(std::move(e));
    }
  }
  return report;
}

FlawDemo demo_flaw(const BimatrixGame& g) {
  if (g.rows() != 3 || g.cols() != 3) {
    throw DimensionError("the flaw demonstration needs a 3x3 game");
  }
  const OperatorFamily it3 = it3_family();
  InducedGame ig = induce_bimatrix(g, density_from_pure(basis_state(0, 1, 3, 3)), it3, it3, "|01>");
  RecoveryEntry e{0, 1, false, find_cyclic_relabeling(g, ig.game), {}};
  e.pass = e.shift.has_value();
  if (!e.pass) {
    const std::set<PayoffPair> original = outcome_set(g);
    const std::set<PayoffPair> induced = outcome_set(ig.game);
    std::set_difference(original.begin(), original.end(), induced.begin(), induced.end(),
                        std::inserter(e.missing, e.missing.end()));
  }
  return {std::move(ig), std::move(e)};
}

std::string SchemePair::id() const {
  return row.id() == col.id() ? row.id() : row.id() + "/" + col.id();
}

ComparisonReport compare_schemes(const BimatrixGame& g, const DensityOperator& state,
                                 const SchemePair& a, const SchemePair& b,
                                 std::string state_label, double float_tol) {
  const InducedGame ga = induce_bimatrix(g, state, a.row, a.col, state_label);
  const InducedGame gb = induce_bimatrix(g, state, b.row, b.col, state_label);
  if (ga.game.rows() != gb.game.rows() || ga.game.cols() != gb.game.cols()) {
    throw DimensionError("the two schemes induce games of different sizes");
  }
  ComparisonReport report;
  report.scheme_a = a.id();
  report.scheme_b = b.id();
  report.state = std::move(state_label);
  report.exact = ga.exact && gb.exact;
  for (std::size_t s = 0; s < ga.game.rows(); ++s) {
    for (std::size_t t = 0; t < ga.game.cols(); ++t) {
      const PayoffPair& pa = ga.game.at(s, t);
      const PayoffPair& pb = gb.game.at(s, t);
      bool same = pa == pb;
      if (!same && !report.exact) {
        same = std::abs((pa.row - pb.row).to_double()) <= float_tol &&
               std::abs((pa.col - pb.col).to_double()) <= float_tol;
      }
      if (!same) report.differences.push_back({s, t, pa, pb});
    }
  }
  report.equal = report.differences.empty();
  return report;
}

std::vector<std::size_t> best_responses(const BimatrixGame& g, Player responder,
                                        const MixedStrategy& opponent_strategy) {
  const bool row = responder == Player::kRow;
  const std::size_t own = row ? g.rows() : g.cols();
  const std::size_t other = row ? g.cols() : g.rows();
  if (opponent_strategy.size() != other) {
    throw DimensionError("opponent strategy has length " + std::to_string(opponent_strategy.size()) +
                         ", expected " + std::to_string(other));
  }
  std::vector<Rational> value(own, Rational(0));
  for (std::size_t a = 0; a < own; ++a) {
    for (std::size_t b = 0; b < other; ++b) {
      if (opponent_strategy[b].sign() == 0) continue;
      value[a] += opponent_strategy[b] * (row ? g.at(a, b).row : g.at(b, a).col);
    }
  }
  const Rational best = *std::max_element(value.begin(), value.end());
  std::vector<std::size_t> out;
  for (std::size_t a = 0; a < own; ++a) {
    if (value[a] == best) out.push_back(a);
  }
  return out;
}

bool is_nash_equilibrium(const BimatrixGame& g, const MixedStrategy& p, const MixedStrategy& q) {
  const std::vector<std::size_t> row_br = best_responses(g, Player::kRow, q);
  const std::vector<std::size_t> col_br = best_responses(g, Player::kColumn, p);
  auto covered = [](const std::vector<std::size_t>& support, const std::vector<std::size_t>& br) {
    return std::includes(br.begin(), br.end(), support.begin(), support.end());
  };
  return covered(p.support(), row_br) && covered(q.support(), col_br);
}

std::vector<std::pair<std::size_t, std::size_t>> pure_nash(const BimatrixGame& g) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      bool row_ok = true;
      for (std::size_t k = 0; k < g.rows() && row_ok; ++k) row_ok = g.at(k, j).row <= g.at(i, j).row;
      bool col_ok = true;
      for (std::size_t k = 0; k < g.cols() && col_ok; ++k) col_ok = g.at(i, k).col <= g.at(i, j).col;
      if (row_ok && col_ok) out.emplace_back(i, j);
    }
  }
  return out;
}

EquilibriumSet mixed_nash(const BimatrixGame& g) {
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();
  if (n > kMaxEquilibriumDim || m > kMaxEquilibriumDim) {
    throw DimensionError("support enumeration is limited to " + std::to_string(kMaxEquilibriumDim) +
                         "x" + std::to_string(kMaxEquilibriumDim) + " games");
  }
  EquilibriumSet out;
  out.pure = pure_nash(g);

  auto check_degenerate = [&](const MixedStrategy& p, const MixedStrategy& q) {
    if (best_responses(g, Player::kRow, q).size() > p.support().size() ||
        best_responses(g, Player::kColumn, p).size() > q.support().size()) {
      out.degenerate = true;
    }
  };
  for (const auto& [i, j] : out.pure) check_degenerate(MixedStrategy::pure(n, i), MixedStrategy::pure(m, j));

  const std::size_t kmax = std::min(n, m);
  for (std::size_t k = 2; k <= kmax; ++k) {
    for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
      for_each_subset(m, k, [&](const std::vector<std::size_t>& cols) {
        // q makes the row player indifferent over `rows`, p the column player over `cols`.
        Solution qs = indifference(rows, cols, [&](std::size_t a, std::size_t b) {
          return g.at(a, b).row;
        });
        if (qs.status == SolveStatus::kNone) return;
        Solution ps = indifference(cols, rows, [&](std::size_t a, std::size_t b) {
          return g.at(b, a).col;
        });
        if (ps.status == SolveStatus::kNone) return;

        std::optional<MixedStrategy> q = spread(qs.x, cols, m);
        std::optional<MixedStrategy> p = spread(ps.x, rows, n);
        if (!p || !q || (is_pure(*p) && is_pure(*q))) return;
        if (!is_nash_equilibrium(g, *p, *q)) return;
        if (qs.status == SolveStatus::kContinuum || ps.status == SolveStatus::kContinuum) {
          out.degenerate = true;
        }
        check_degenerate(*p, *q);
        MixedEquilibrium eq{*p, *q, mixed_value(g, *p, *q)};
        if (std::find(out.mixed.begin(), out.mixed.end(), eq) == out.mixed.end()) {
          out.mixed.push_back(std::move(eq));
        }
      });
    });
  }
  return out;
}

}  // namespace mwgames

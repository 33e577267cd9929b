#include "mwgames/analysis.hpp"

#include <random>

#include <gtest/gtest.h>

#include "mwgames/errors.hpp"
#include "test_support.hpp"

namespace mwgames {
namespace {

using testing::rps;
using testing::sentinel;
using testing::sentinel_cell;

using Cells = std::vector<std::pair<std::size_t, std::size_t>>;

const char* const kFourTermKet = "(|01> + |10> + |02> + |20>)/2";

SchemePair same(const OperatorFamily& f) { return {f, f}; }

TEST(CheckRecoveryTest, CyclicSchemePassesOnDistinctCells) {
  const OperatorFamily g3 = gmw_family(3);
  const RecoveryReport r = check_recovery(sentinel(), g3, g3);
  ASSERT_EQ(r.entries.size(), 9u);
  EXPECT_TRUE(r.all_pass());
  for (const RecoveryEntry& e : r.entries) {
    EXPECT_EQ(e.shift, (Shift{e.i, e.j}));
    EXPECT_TRUE(e.missing.empty());
  }
}

TEST(CheckRecoveryTest, SwapSetFailsAtZeroOne) {
  const OperatorFamily it3 = it3_family();
  const RecoveryReport r = check_recovery(sentinel(), it3, it3);
  EXPECT_FALSE(r.all_pass());
  const RecoveryEntry& e01 = r.entry(0, 1);
  EXPECT_FALSE(e01.pass);
  EXPECT_FALSE(e01.shift.has_value());
  EXPECT_EQ(e01.missing, (std::set<PayoffPair>{sentinel_cell(0, 2), sentinel_cell(1, 2), sentinel_cell(2, 2)}));
  const RecoveryEntry& e00 = r.entry(0, 0);
  EXPECT_TRUE(e00.pass);
  EXPECT_EQ(e00.shift, (Shift{0, 0}));
}

TEST(CheckRecoveryTest, TwoDimensionalSchemeRecovers) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_TRUE(check_recovery(testing::random_game(rng, 2, 2), mw2_family(), mw2_family()).all_pass());
  }
}

TEST(CheckRecoveryTest, CyclicPropertyOnRandomGames) {
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t m = 1 + (trial / 4) % 4;
    EXPECT_TRUE(check_recovery(testing::random_game(rng, n, m), gmw_family(n), gmw_family(m)).all_pass());
  }
}

TEST(CheckRecoveryTest, VerdictsStableUnderConstantOffset) {
  const Rational offset(7, 3);
  std::vector<PayoffPair> cells;
  for (const PayoffPair& p : sentinel().cells()) cells.push_back({p.row + offset, p.col + offset});
  const BimatrixGame shifted(3, 3, cells);
  const OperatorFamily it3 = it3_family();
  const RecoveryReport a = check_recovery(sentinel(), it3, it3);
  const RecoveryReport b = check_recovery(shifted, it3, it3);
  ASSERT_EQ(a.entries.size(), b.entries.size());
  for (std::size_t k = 0; k < a.entries.size(); ++k) {
    EXPECT_EQ(a.entries[k].pass, b.entries[k].pass);
    EXPECT_EQ(a.entries[k].shift, b.entries[k].shift);
    EXPECT_EQ(a.entries[k].missing.size(), b.entries[k].missing.size());
  }
}

TEST(CheckRecoveryTest, DimensionMismatch) {
  EXPECT_THROW(check_recovery(rps(), mw2_family(), mw2_family()), DimensionError);
}

TEST(DemoFlawTest, Examples) {
  const FlawDemo d = demo_flaw(sentinel());
  auto P = sentinel_cell;
  EXPECT_EQ(d.induced.game, BimatrixGame::from_grid({{P(0, 1), P(0, 0), P(0, 1)},
                                                     {P(1, 1), P(1, 0), P(1, 1)},
                                                     {P(2, 1), P(2, 0), P(2, 1)}}));
  EXPECT_FALSE(d.entry.pass);

  const FlawDemo c = demo_flaw(testing::constant_game(3, 3, {2, 5}));
  EXPECT_TRUE(c.entry.pass);
  EXPECT_EQ(c.entry.shift, (Shift{0, 0}));

  // RPS columns 1 and 2 differ, so the induced game is no relabeling of it,
  // yet RPS repeats its three outcomes in every column and none go missing.
  const FlawDemo r = demo_flaw(rps());
  EXPECT_FALSE(r.entry.pass);
  EXPECT_TRUE(r.entry.missing.empty());

  EXPECT_THROW(demo_flaw(testing::coordination()), DimensionError);
}

TEST(CompareSchemesTest, FourTermStateOnRps) {
  const DensityOperator four = density_from_pure(parse_ket(kFourTermKet, 3, 3));
  const ComparisonReport r = compare_schemes(rps(), four, same(gmw_family(3)), same(it3_family()));
  EXPECT_TRUE(r.equal);
  EXPECT_TRUE(r.exact);
  EXPECT_TRUE(r.differences.empty());
  const Rational h(1, 2);
  const BimatrixGame expected =
      BimatrixGame::from_matrices({{0, h, -h}, {-h, 0, h}, {h, -h, 0}}, {{0, -h, h}, {h, 0, -h}, {-h, h, 0}});
  EXPECT_EQ(induce_bimatrix(rps(), four, gmw_family(3), gmw_family(3)).game, expected);
  EXPECT_EQ(induce_bimatrix(rps(), four, it3_family(), it3_family()).game, expected);
}

// With weight on |01>, |10>, |02>, |20>, the multiset of cells reached by every
// operator profile is the same for both families, so the induced games agree
// for any 3x3 payoffs, the sentinel game included.
TEST(CompareSchemesTest, FourTermStateCoincidesForAnyGame) {
  const DensityOperator four = density_from_pure(parse_ket(kFourTermKet, 3, 3));
  std::mt19937_64 rng(53);
  EXPECT_TRUE(compare_schemes(sentinel(), four, same(gmw_family(3)), same(it3_family())).equal);
  for (int trial = 0; trial < 20; ++trial) {
    EXPECT_TRUE(compare_schemes(testing::random_game(rng, 3, 3), four, same(gmw_family(3)),
                                same(it3_family()))
                    .equal);
  }
}

TEST(CompareSchemesTest, SchemesDifferAtBasisStateZeroOne) {
  const DensityOperator b01 = density_from_pure(basis_state(0, 1, 3, 3));
  const ComparisonReport r = compare_schemes(sentinel(), b01, same(gmw_family(3)), same(it3_family()), "|01>");
  EXPECT_FALSE(r.equal);
  // Columns (V1, V2) versus (D, C): cells in column 1 and 2 differ, column 0 agrees.
  ASSERT_EQ(r.differences.size(), 6u);
  EXPECT_EQ(r.differences.front().s, 0u);
  EXPECT_EQ(r.differences.front().t, 1u);
  EXPECT_EQ(r.differences.front().a, sentinel_cell(0, 2));
  EXPECT_EQ(r.differences.front().b, sentinel_cell(0, 0));

  const ComparisonReport swapped = compare_schemes(sentinel(), b01, same(it3_family()), same(gmw_family(3)), "|01>");
  ASSERT_EQ(swapped.differences.size(), r.differences.size());
  for (std::size_t k = 0; k < r.differences.size(); ++k) {
    EXPECT_EQ(swapped.differences[k].a, r.differences[k].b);
    EXPECT_EQ(swapped.differences[k].b, r.differences[k].a);
  }
  EXPECT_EQ(swapped.scheme_a, r.scheme_b);
}

TEST(CompareSchemesTest, BothClassicalAtOrigin) {
  std::mt19937_64 rng(59);
  const DensityOperator b00 = density_from_pure(basis_state(0, 0, 3, 3));
  for (int trial = 0; trial < 10; ++trial) {
    EXPECT_TRUE(compare_schemes(testing::random_game(rng, 3, 3), b00, same(gmw_family(3)), same(it3_family())).equal);
  }
}

TEST(BestResponsesTest, Examples) {
  EXPECT_EQ(best_responses(rps(), Player::kRow, MixedStrategy::pure(3, 0)), (std::vector<std::size_t>{1}));
  EXPECT_EQ(best_responses(rps(), Player::kColumn, MixedStrategy::pure(3, 0)), (std::vector<std::size_t>{1}));
  EXPECT_EQ(best_responses(testing::constant_game(2, 3, {1, 1}), Player::kColumn, MixedStrategy::uniform(2)),
            (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_EQ(best_responses(rps(), Player::kRow, MixedStrategy::uniform(3)), (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_THROW(best_responses(rps(), Player::kRow, MixedStrategy::uniform(2)), DimensionError);
}

TEST(PureNashTest, Examples) {
  EXPECT_TRUE(pure_nash(rps()).empty());
  EXPECT_EQ(pure_nash(testing::coordination()), (Cells{{0, 0}, {1, 1}}));
  EXPECT_EQ(pure_nash(BimatrixGame(1, 1, {{0, 0}})), (Cells{{0, 0}}));
}

TEST(MixedNashTest, RockPaperScissors) {
  const EquilibriumSet e = mixed_nash(rps());
  EXPECT_TRUE(e.pure.empty());
  ASSERT_EQ(e.mixed.size(), 1u);
  EXPECT_EQ(e.mixed[0].p, MixedStrategy::uniform(3));
  EXPECT_EQ(e.mixed[0].q, MixedStrategy::uniform(3));
  EXPECT_EQ(e.mixed[0].value, (PayoffPair{0, 0}));
  EXPECT_FALSE(e.degenerate);
  for (std::size_t k = 0; k < 3; ++k) {
    EXPECT_EQ(mixed_value(rps(), MixedStrategy::pure(3, k), e.mixed[0].q).row, Rational(0));
  }
}

TEST(MixedNashTest, MatchingPennies) {
  const EquilibriumSet e = mixed_nash(testing::matching_pennies());
  EXPECT_TRUE(e.pure.empty());
  ASSERT_EQ(e.mixed.size(), 1u);
  EXPECT_EQ(e.mixed[0].p, MixedStrategy::uniform(2));
  EXPECT_EQ(e.mixed[0].q, MixedStrategy::uniform(2));
}

TEST(MixedNashTest, Coordination) {
  const EquilibriumSet e = mixed_nash(testing::coordination());
  EXPECT_EQ(e.pure, (Cells{{0, 0}, {1, 1}}));
  ASSERT_EQ(e.mixed.size(), 1u);
  EXPECT_EQ(e.mixed[0].p, MixedStrategy::uniform(2));
  EXPECT_EQ(e.mixed[0].value, (PayoffPair{Rational(1, 2), Rational(1, 2)}));
  EXPECT_FALSE(e.degenerate);
}

TEST(MixedNashTest, DegenerateGamesAreFlagged) {
  const EquilibriumSet c = mixed_nash(testing::constant_game(2, 2, {1, 1}));
  EXPECT_TRUE(c.degenerate);
  EXPECT_EQ(c.pure.size(), 4u);
  // Row 0 pays the same against both columns.
  const EquilibriumSet d = mixed_nash(BimatrixGame::from_matrices({{1, 1}, {0, 2}}, {{1, 1}, {0, 2}}));
  EXPECT_TRUE(d.degenerate);
}

TEST(MixedNashTest, EveryEquilibriumPassesZeroToleranceCheck) {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 4;
    const std::size_t m = 1 + (trial / 4) % 4;
    const BimatrixGame g = testing::random_game(rng, n, m);
    const EquilibriumSet e = mixed_nash(g);
    for (const auto& [i, j] : e.pure) {
      EXPECT_TRUE(is_nash_equilibrium(g, MixedStrategy::pure(n, i), MixedStrategy::pure(m, j)));
    }
    for (const MixedEquilibrium& eq : e.mixed) {
      EXPECT_TRUE(is_nash_equilibrium(g, eq.p, eq.q));
      EXPECT_EQ(eq.value, mixed_value(g, eq.p, eq.q));
    }
    // Every finite game has at least one equilibrium; nondegenerate ones are
    // all found by equal-size support enumeration.
    if (!e.degenerate) EXPECT_GT(e.pure.size() + e.mixed.size(), 0u);
  }
}

TEST(MixedNashTest, SizeBound) {
  EXPECT_THROW(mixed_nash(testing::constant_game(7, 2, {0, 0})), DimensionError);
  EXPECT_NO_THROW(mixed_nash(testing::constant_game(6, 1, {0, 0})));
}

}  // namespace
}  // namespace mwgames

#include <gtest/gtest.h>

#include <nlohmann/json.hpp>

#include "mwgames/errors.hpp"
#include "mwgames/report_io.hpp"
#include "test_support.hpp"

namespace mwgames {
namespace {

using testing::rps;
using testing::sentinel;

DensityOperator four_term_state() {
  return density_from_pure(parse_ket("1/2(|01>+|10>+|02>+|20>)", 3, 3));
}

TEST(ReportIo, InducedGameRoundTrip) {
  const InducedGame ig =
      induce_bimatrix(sentinel(), density_from_pure(basis_state(0, 1, 3, 3)), it3_family(),
                      it3_family(), "|01>");
  const std::string text = to_structured(ig);
  EXPECT_EQ(induced_game_from_structured(text), ig);
  EXPECT_EQ(to_structured(induced_game_from_structured(text)), text);
}

TEST(ReportIo, FloatInducedGameRoundTrip) {
  const PureState s(2, 2, {{0.6, 0.0}, {0.0, 0.0}, {0.0, 0.8}, {0.0, 0.0}});
  const InducedGame ig = induce_bimatrix(testing::coordination(), density_from_pure(s),
                                         mw2_family(), mw2_family(), "custom");
  EXPECT_EQ(induced_game_from_structured(to_structured(ig)), ig);
}

TEST(ReportIo, KeyOrderIsFixed) {
  const InducedGame ig = induce_bimatrix(rps(), density_from_pure(basis_state(0, 0, 3, 3)),
                                         gmw_family(3), gmw_family(3), "|00>");
  const auto doc = nlohmann::ordered_json::parse(to_structured(ig));
  std::vector<std::string> keys;
  for (const auto& item : doc.items()) keys.push_back(item.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"kind", "row_family", "col_family", "state", "exact",
                                            "row_labels", "col_labels", "game"}));
}

TEST(ReportIo, InducedGameGolden) {
  const BimatrixGame g = BimatrixGame::from_grid({{{Rational(1, 2), Rational(-1)}}});
  const InducedGame ig =
      induce_bimatrix(g, density_from_pure(basis_state(0, 0, 1, 1)), gmw_family(1), gmw_family(1), "|00>");
  EXPECT_EQ(to_structured(ig),
            "{\n"
            "  \"kind\": \"induced_game\",\n"
            "  \"row_family\": \"gmw(1)\",\n"
            "  \"col_family\": \"gmw(1)\",\n"
            "  \"state\": \"|00>\",\n"
            "  \"exact\": true,\n"
            "  \"row_labels\": [\n    \"V0\"\n  ],\n"
            "  \"col_labels\": [\n    \"V0\"\n  ],\n"
            "  \"game\": {\n"
            "    \"rows\": 1,\n"
            "    \"cols\": 1,\n"
            "    \"payoffs\": [\n      [\n        [\n          \"1/2\",\n          -1\n        ]\n      ]\n    ]\n"
            "  }\n"
            "}\n");
}

TEST(ReportIo, RecoveryReportRoundTrip) {
  const RecoveryReport r = check_recovery(sentinel(), it3_family(), it3_family());
  const std::string text = to_structured(r);
  EXPECT_EQ(recovery_report_from_structured(text), r);
  EXPECT_NE(text.find("\"all_pass\": false"), std::string::npos);
}

TEST(ReportIo, ComparisonRoundTrip) {
  const ComparisonReport equal = compare_schemes(rps(), four_term_state(),
                                                 {gmw_family(3), gmw_family(3)},
                                                 {it3_family(), it3_family()}, "four-term");
  EXPECT_EQ(comparison_report_from_structured(to_structured(equal)), equal);

  const ComparisonReport differ =
      compare_schemes(sentinel(), density_from_pure(basis_state(0, 1, 3, 3)),
                      {gmw_family(3), gmw_family(3)}, {it3_family(), it3_family()}, "|01>");
  ASSERT_FALSE(differ.equal);
  EXPECT_EQ(comparison_report_from_structured(to_structured(differ)), differ);
}

TEST(ReportIo, EquilibriaRoundTrip) {
  const EquilibriumSet e = mixed_nash(rps());
  EXPECT_EQ(equilibrium_set_from_structured(to_structured(e)), e);
  const EquilibriumSet pd = mixed_nash(testing::coordination());
  EXPECT_EQ(equilibrium_set_from_structured(to_structured(pd)), pd);
}

TEST(ReportIo, PayoffRoundTrip) {
  const PayoffResult exact{{Rational(1, 2), Rational(-1, 2)}, {0.5, -0.5}, true};
  EXPECT_EQ(payoff_result_from_structured(to_structured(exact)), exact);
  const PayoffResult inexact{{}, {0.1 + 0.2, -1.0 / 3.0}, false};
  const PayoffResult back = payoff_result_from_structured(to_structured(inexact));
  EXPECT_EQ(back, inexact);
}

TEST(ReportIo, FlawDemoRoundTrip) {
  const FlawDemo d = demo_flaw(sentinel());
  EXPECT_EQ(flaw_demo_from_structured(to_structured(d)), d);
}

TEST(ReportIo, WrongKindRejected) {
  const std::string text = to_structured(mixed_nash(rps()));
  EXPECT_THROW(recovery_report_from_structured(text), ParseError);
  EXPECT_THROW(induced_game_from_structured("not json"), ParseError);
}

TEST(ReportIo, TablesUseOperatorLabelsAndFractions) {
  const InducedGame ig = induce_bimatrix(rps(), four_term_state(), it3_family(), it3_family(), "c");
  const std::string t = to_table(ig);
  for (const char* label : {"I", "D", "C"}) EXPECT_NE(t.find(label), std::string::npos);
  EXPECT_NE(t.find("1/2"), std::string::npos);

  const std::string g = to_table(induce_bimatrix(rps(), four_term_state(), gmw_family(3),
                                                 gmw_family(3), "c"));
  EXPECT_NE(g.find("V2"), std::string::npos);
}

}  // namespace
}  // namespace mwgames

#pragma once

#include <string>
#include <string_view>

#include "mwgames/analysis.hpp"
#include "mwgames/schemes.hpp"

namespace mwgames {

// Structured (JSON) renderings of results. Keys appear in a fixed order and
// rationals use the canonical game-file encoding, so identical inputs give
// byte-identical text. Every renderer has a matching parser.

struct PayoffResult {
  PayoffPair exact_value;
  RealPayoff float_value;
  // exact_value is meaningful only when true.
  bool exact = false;

  friend bool operator==(const PayoffResult& a, const PayoffResult& b) {
    return a.exact == b.exact && (!a.exact || a.exact_value == b.exact_value) &&
           a.float_value.row == b.float_value.row && a.float_value.col == b.float_value.col;
  }
};

std::string to_structured(const InducedGame& ig);
std::string to_structured(const RecoveryReport& r);
std::string to_structured(const ComparisonReport& r);
std::string to_structured(const EquilibriumSet& e);
std::string to_structured(const PayoffResult& p);
std::string to_structured(const FlawDemo& d);

InducedGame induced_game_from_structured(std::string_view text);
RecoveryReport recovery_report_from_structured(std::string_view text);
ComparisonReport comparison_report_from_structured(std::string_view text);
EquilibriumSet equilibrium_set_from_structured(std::string_view text);
PayoffResult payoff_result_from_structured(std::string_view text);
FlawDemo flaw_demo_from_structured(std::string_view text);

// Human-readable tables; rationals as "p/q", rows and columns labelled.
std::string to_table(const InducedGame& ig);
std::string to_table(const RecoveryReport& r);
std::string to_table(const ComparisonReport& r);
std::string to_table(const EquilibriumSet& e);
std::string to_table(const PayoffResult& p);
std::string to_table(const FlawDemo& d);

}  // namespace mwgames

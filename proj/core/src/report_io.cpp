#include "mwgames/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <limits>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mwgames/errors.hpp"

namespace mwgames {
namespace {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r) {
  if (r.is_integer()) {
    const BigInt v = r.numerator();
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max()) {
      return v.convert_to<std::int64_t>();
    }
  }
  return r.to_string();
}

Rational rational_from(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  throw ParseError("expected a rational, got " + j.dump());
}

Json pair_json(const PayoffPair& p) { return Json::array({rational_json(p.row), rational_json(p.col)}); }

PayoffPair pair_from(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("expected a payoff pair, got " + j.dump());
  return {rational_from(j[0]), rational_from(j[1])};
}

Json strategy_json(const MixedStrategy& s) {
  Json out = Json::array();
  for (const Rational& x : s.probabilities()) out.push_back(x.to_string());
  return out;
}

MixedStrategy strategy_from(const Json& j) {
  std::vector<Rational> probs;
  for (const Json& x : j) probs.push_back(rational_from(x));
  return MixedStrategy(std::move(probs));
}

Json game_json(const BimatrixGame& g) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < g.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < g.cols(); ++j) row.push_back(pair_json(g.at(i, j)));
    rows.push_back(std::move(row));
  }
  return Json{{"rows", g.rows()}, {"cols", g.cols()}, {"payoffs", std::move(rows)}};
}

Json parse_kind(std::string_view text, const char* kind) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed report: ") + e.what());
  }
  if (!doc.is_object() || doc.value("kind", "") != kind) {
    throw ParseError(std::string("expected a \"") + kind + "\" report");
  }
  return doc;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json entry_json(const RecoveryEntry& e) {
  Json je;
  je["i"] = e.i;
  je["j"] = e.j;
  je["verdict"] = e.pass ? "pass" : "fail";
  je["shift"] = e.shift ? Json::array({e.shift->row, e.shift->col}) : Json();
  Json missing = Json::array();
  for (const PayoffPair& p : e.missing) missing.push_back(pair_json(p));
  je["missing"] = std::move(missing);
  return je;
}

RecoveryEntry entry_from(const Json& je) {
  RecoveryEntry e;
  e.i = je.at("i").get<std::size_t>();
  e.j = je.at("j").get<std::size_t>();
  e.pass = je.at("verdict").get<std::string>() == "pass";
  if (!je.at("shift").is_null()) {
    e.shift = Shift{je["shift"][0].get<std::size_t>(), je["shift"][1].get<std::size_t>()};
  }
  for (const Json& p : je.at("missing")) e.missing.insert(pair_from(p));
  return e;
}

Json induced_json(const InducedGame& ig) {
  Json j;
  j["kind"] = "induced_game";
  j["row_family"] = ig.row_family;
  j["col_family"] = ig.col_family;
  j["state"] = ig.state;
  j["exact"] = ig.exact;
  j["row_labels"] = ig.row_labels;
  j["col_labels"] = ig.col_labels;
  j["game"] = game_json(ig.game);
  return j;
}

InducedGame induced_from(const Json& j) {
  return InducedGame{parse_game(j.at("game").dump()),
                     j.at("row_family").get<std::string>(),
                     j.at("col_family").get<std::string>(),
                     j.at("state").get<std::string>(),
                     j.at("exact").get<bool>(),
                     j.at("row_labels").get<std::vector<std::string>>(),
                     j.at("col_labels").get<std::vector<std::string>>()};
}

std::string entry_text(const RecoveryEntry& e) {
  std::string out = "|" + std::to_string(e.i) + std::to_string(e.j) + ">  " + (e.pass ? "pass" : "fail");
  if (e.shift) out += "  shift (" + std::to_string(e.shift->row) + "," + std::to_string(e.shift->col) + ")";
  if (!e.pass) {
    out += "  missing {";
    bool first = true;
    for (const PayoffPair& p : e.missing) {
      out += (first ? "" : ", ") + to_string(p);
      first = false;
    }
    out += "}";
  }
  return out;
}

std::string cell_text(const PayoffPair& p) {
  return "(" + p.row.to_string() + ", " + p.col.to_string() + ")";
}

}  // namespace

std::string to_structured(const InducedGame& ig) { return dump(induced_json(ig)); }

InducedGame induced_game_from_structured(std::string_view text) {
  return induced_from(parse_kind(text, "induced_game"));
}

std::string to_structured(const FlawDemo& d) {
  Json j;
  j["kind"] = "flaw_demo";
  j["induced"] = induced_json(d.induced);
  j["entry"] = entry_json(d.entry);
  return dump(j);
}

FlawDemo flaw_demo_from_structured(std::string_view text) {
  const Json j = parse_kind(text, "flaw_demo");
  return FlawDemo{induced_from(j.at("induced")), entry_from(j.at("entry"))};
}

std::string to_structured(const RecoveryReport& r) {
  Json j;
  j["kind"] = "recovery_report";
  j["rows"] = r.rows;
  j["cols"] = r.cols;
  j["row_family"] = r.row_family;
  j["col_family"] = r.col_family;
  j["all_pass"] = r.all_pass();
  Json entries = Json::array();
  for (const RecoveryEntry& e : r.entries) entries.push_back(entry_json(e));
  j["entries"] = std::move(entries);
  return dump(j);
}

RecoveryReport recovery_report_from_structured(std::string_view text) {
  const Json j = parse_kind(text, "recovery_report");
  RecoveryReport r{j.at("rows").get<std::size_t>(), j.at("cols").get<std::size_t>(),
                   j.at("row_family").get<std::string>(), j.at("col_family").get<std::string>(),
                   {}};
  for (const Json& je : j.at("entries")) r.entries.push_back(entry_from(je));
  return r;
}

std::string to_structured(const ComparisonReport& r) {
  Json j;
  j["kind"] = "comparison";
  j["scheme_a"] = r.scheme_a;
  j["scheme_b"] = r.scheme_b;
  j["state"] = r.state;
  j["exact"] = r.exact;
  j["equal"] = r.equal;
  Json diffs = Json::array();
  for (const CellDifference& d : r.differences) {
    diffs.push_back(Json{{"cell", Json::array({d.s, d.t})}, {"a", pair_json(d.a)}, {"b", pair_json(d.b)}});
  }
  j["differences"] = std::move(diffs);
  return dump(j);
}

ComparisonReport comparison_report_from_structured(std::string_view text) {
  const Json j = parse_kind(text, "comparison");
  ComparisonReport r;
  r.scheme_a = j.at("scheme_a").get<std::string>();
  r.scheme_b = j.at("scheme_b").get<std::string>();
  r.state = j.at("state").get<std::string>();
  r.exact = j.at("exact").get<bool>();
  r.equal = j.at("equal").get<bool>();
  for (const Json& d : j.at("differences")) {
    r.differences.push_back({d.at("cell")[0].get<std::size_t>(), d.at("cell")[1].get<std::size_t>(),
                             pair_from(d.at("a")), pair_from(d.at("b"))});
  }
  return r;
}

std::string to_structured(const EquilibriumSet& e) {
  Json j;
  j["kind"] = "equilibria";
  Json pure = Json::array();
  for (const auto& [i, k] : e.pure) pure.push_back(Json::array({i, k}));
  j["pure"] = std::move(pure);
  Json mixed = Json::array();
  for (const MixedEquilibrium& m : e.mixed) {
    mixed.push_back(Json{{"p", strategy_json(m.p)}, {"q", strategy_json(m.q)}, {"value", pair_json(m.value)}});
  }
  j["mixed"] = std::move(mixed);
  j["degenerate"] = e.degenerate;
  return dump(j);
}

EquilibriumSet equilibrium_set_from_structured(std::string_view text) {
  const Json j = parse_kind(text, "equilibria");
  EquilibriumSet e;
  for (const Json& p : j.at("pure")) e.pure.emplace_back(p[0].get<std::size_t>(), p[1].get<std::size_t>());
  for (const Json& m : j.at("mixed")) {
    e.mixed.push_back({strategy_from(m.at("p")), strategy_from(m.at("q")), pair_from(m.at("value"))});
  }
  e.degenerate = j.at("degenerate").get<bool>();
  return e;
}

std::string to_structured(const PayoffResult& p) {
  Json j;
  j["kind"] = "payoff";
  j["exact"] = p.exact;
  if (p.exact) {
    j["value"] = pair_json(p.exact_value);
  } else {
    j["value"] = nullptr;
  }
  j["float_value"] = Json::array({p.float_value.row, p.float_value.col});
  return dump(j);
}

PayoffResult payoff_result_from_structured(std::string_view text) {
  const Json j = parse_kind(text, "payoff");
  PayoffResult p;
  p.exact = j.at("exact").get<bool>();
  if (p.exact) p.exact_value = pair_from(j.at("value"));
  p.float_value = {j.at("float_value")[0].get<double>(), j.at("float_value")[1].get<double>()};
  return p;
}

std::string to_table(const InducedGame& ig) {
  const BimatrixGame& g = ig.game;
  std::vector<std::vector<std::string>> text(g.rows(), std::vector<std::string>(g.cols()));
  std::size_t width = 0;
  for (const auto& l : ig.col_labels) width = std::max(width, l.size());
  for (std::size_t i = 0; i < g.rows(); ++i) {
    for (std::size_t j = 0; j < g.cols(); ++j) {
      text[i][j] = cell_text(g.at(i, j));
      width = std::max(width, text[i][j].size());
    }
  }
  std::size_t label_width = 0;
  for (const auto& l : ig.row_labels) label_width = std::max(label_width, l.size());

  std::ostringstream os;
  os << "induced game: rows " << ig.row_family << ", cols " << ig.col_family;
  if (!ig.state.empty()) os << ", state " << ig.state;
  os << (ig.exact ? "" : " (floating point)") << "\n";
  os << std::setw(static_cast<int>(label_width)) << "";
  for (std::size_t j = 0; j < g.cols(); ++j) {
    os << "  " << std::setw(static_cast<int>(width))
       << (j < ig.col_labels.size() ? ig.col_labels[j] : std::to_string(j));
  }
  os << "\n";
  for (std::size_t i = 0; i < g.rows(); ++i) {
    os << std::setw(static_cast<int>(label_width))
       << (i < ig.row_labels.size() ? ig.row_labels[i] : std::to_string(i));
    for (std::size_t j = 0; j < g.cols(); ++j) {
      os << "  " << std::setw(static_cast<int>(width)) << text[i][j];
    }
    os << "\n";
  }
  return os.str();
}

std::string to_table(const RecoveryReport& r) {
  std::ostringstream os;
  os << "classical recovery: rows " << r.row_family << ", cols " << r.col_family << " -> "
     << (r.all_pass() ? "PASS" : "FAIL") << "\n";
  for (const RecoveryEntry& e : r.entries) os << "  " << entry_text(e) << "\n";
  return os.str();
}

std::string to_table(const ComparisonReport& r) {
  std::ostringstream os;
  os << "compare " << r.scheme_a << " vs " << r.scheme_b;
  if (!r.state.empty()) os << " at " << r.state;
  os << ": " << (r.equal ? "identical" : "different") << (r.exact ? "" : " (floating point)")
     << "\n";
  for (const CellDifference& d : r.differences) {
    os << "  cell (" << d.s << "," << d.t << "): " << cell_text(d.a) << " vs " << cell_text(d.b)
       << "\n";
  }
  return os.str();
}

std::string to_table(const EquilibriumSet& e) {
  std::ostringstream os;
  os << "pure equilibria:";
  if (e.pure.empty()) os << " none";
  for (const auto& [i, j] : e.pure) os << " (" << i << "," << j << ")";
  os << "\nmixed equilibria:" << (e.mixed.empty() ? " none" : "") << "\n";
  for (const MixedEquilibrium& m : e.mixed) {
    os << "  p = " << to_string(m.p) << "  q = " << to_string(m.q) << "  value "
       << cell_text(m.value) << "\n";
  }
  if (e.degenerate) os << "degenerate game: continua represented by one point each\n";
  return os.str();
}

std::string to_table(const PayoffResult& p) {
  std::ostringstream os;
  if (p.exact) {
    os << "expected payoff: " << cell_text(p.exact_value) << "\n";
  } else {
    os << std::setprecision(12) << "expected payoff: (" << p.float_value.row << ", "
       << p.float_value.col << ") (floating point)\n";
  }
  return os.str();
}

std::string to_table(const FlawDemo& d) {
  return to_table(d.induced) + "recovery at " + entry_text(d.entry) + "\n";
}

}  // namespace mwgames

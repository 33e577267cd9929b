#include "cli.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "mwgames/analysis.hpp"
#include "mwgames/errors.hpp"
#include "mwgames/game.hpp"
#include "mwgames/report_io.hpp"
#include "mwgames/schemes.hpp"
#include "mwgames/state.hpp"

namespace mwgames::cli {
namespace {

// Bad user input; the message names the offending file, flag or variable.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::string game_path;
  std::optional<std::string> state_expr;
  std::optional<std::string> state_path;
  std::string scheme = "gmw";
  std::optional<std::string> scheme_row;
  std::optional<std::string> scheme_col;
  std::string vs = "it3";
  std::optional<std::string> vs_row;
  std::optional<std::string> vs_col;
  std::string p;
  std::string q;
  std::string format = "table";
  std::optional<std::string> out_path;
};

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError(flag + " " + path + ": cannot open file");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// Runs `fn`, rewrapping input-class failures with `context`. Invariant
// violations pass through untouched.
template <typename Fn>
auto with_context(const std::string& context, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const InvariantViolation&) {
    throw;
  } catch (const InputError&) {
    throw;
  } catch (const ParseError& e) {
    throw InputError(context + ": " + e.what());
  } catch (const std::invalid_argument& e) {
    throw InputError(context + ": " + e.what());
  }
}

BimatrixGame load_game(const RunConfig& c) {
  const std::string text = read_file(c.game_path, "--game");
  return with_context("--game " + c.game_path, [&] { return parse_game(text); });
}

bool has_state(const RunConfig& c) { return c.state_expr || c.state_path; }

struct LoadedState {
  DensityOperator rho;
  std::string label;
};

LoadedState load_state(const RunConfig& c, const BimatrixGame& g) {
  if (c.state_expr) {
    return with_context("--state \"" + *c.state_expr + "\"", [&] {
      return LoadedState{density_from_pure(parse_ket(*c.state_expr, g.rows(), g.cols())),
                         *c.state_expr};
    });
  }
  if (c.state_path) {
    const std::string text = read_file(*c.state_path, "--state-file");
    return with_context("--state-file " + *c.state_path, [&] {
      return LoadedState{parse_state_file(text, g.rows(), g.cols()), "file:" + *c.state_path};
    });
  }
  std::string label = "|";
  label += g.rows() <= 10 && g.cols() <= 10 ? "00" : "0,0";
  label += ">";
  return {density_from_pure(basis_state(0, 0, g.rows(), g.cols())), label};
}

OperatorFamily load_family(const std::string& name, const std::string& flag, std::size_t dim) {
  return with_context(flag + " " + name, [&] { return family_by_name(name, dim); });
}

SchemePair scheme_pair(const BimatrixGame& g, const std::string& both,
                       const std::optional<std::string>& row, const std::optional<std::string>& col,
                       const std::string& flag) {
  return {load_family(row.value_or(both), row ? flag + "-row" : flag, g.rows()),
          load_family(col.value_or(both), col ? flag + "-col" : flag, g.cols())};
}

MixedStrategy load_strategy(const std::string& text, const std::string& flag) {
  return with_context(flag + " " + text, [&] { return MixedStrategy::parse(text); });
}

double float_tolerance() {
  const char* raw = std::getenv("MWGAMES_FLOAT_TOL");
  if (raw == nullptr || *raw == '\0') return 1e-9;
  try {
    std::size_t used = 0;
    const double tol = std::stod(raw, &used);
    if (used == std::string(raw).size() && tol > 0.0 && std::isfinite(tol)) return tol;
  } catch (const std::exception&) {
  }
  throw InputError(std::string("MWGAMES_FLOAT_TOL=") + raw + ": expected a positive number");
}

template <typename Report>
std::string render(const Report& r, const RunConfig& c) {
  return c.format == "structured" ? to_structured(r) : to_table(r);
}

void emit(const std::string& text, const RunConfig& c, std::ostream& out) {
  if (!c.out_path) {
    out << text;
    return;
  }
  std::ofstream file(*c.out_path, std::ios::binary | std::ios::trunc);
  if (!file) throw InputError("--out " + *c.out_path + ": cannot write file");
  file << text;
}

int cmd_induce(const RunConfig& c, std::ostream& out) {
  const BimatrixGame g = load_game(c);
  const LoadedState s = load_state(c, g);
  const SchemePair fam = scheme_pair(g, c.scheme, c.scheme_row, c.scheme_col, "--scheme");
  emit(render(induce_bimatrix(g, s.rho, fam.row, fam.col, s.label), c), c, out);
  return kExitOk;
}

int cmd_check_recovery(const RunConfig& c, std::ostream& out) {
  const BimatrixGame g = load_game(c);
  const SchemePair fam = scheme_pair(g, c.scheme, c.scheme_row, c.scheme_col, "--scheme");
  const RecoveryReport r = check_recovery(g, fam.row, fam.col);
  emit(render(r, c), c, out);
  return r.all_pass() ? kExitOk : kExitNegative;
}

int cmd_compare(const RunConfig& c, std::ostream& out) {
  const double tol = float_tolerance();
  const BimatrixGame g = load_game(c);
  const LoadedState s = load_state(c, g);
  const SchemePair a = scheme_pair(g, c.scheme, c.scheme_row, c.scheme_col, "--scheme");
  const SchemePair b = scheme_pair(g, c.vs, c.vs_row, c.vs_col, "--vs");
  const ComparisonReport r = compare_schemes(g, s.rho, a, b, s.label, tol);
  emit(render(r, c), c, out);
  return r.equal ? kExitOk : kExitNegative;
}

int cmd_equilibria(const RunConfig& c, bool induce_first, std::ostream& out) {
  BimatrixGame g = load_game(c);
  if (induce_first) {
    const LoadedState s = load_state(c, g);
    const SchemePair fam = scheme_pair(g, c.scheme, c.scheme_row, c.scheme_col, "--scheme");
    g = induce_bimatrix(g, s.rho, fam.row, fam.col, s.label).game;
  }
  const EquilibriumSet e =
      with_context("--game " + c.game_path, [&] { return mixed_nash(g); });
  emit(render(e, c), c, out);
  return kExitOk;
}

int cmd_payoff(const RunConfig& c, std::ostream& out) {
  const BimatrixGame g = load_game(c);
  const LoadedState s = load_state(c, g);
  const SchemePair fam = scheme_pair(g, c.scheme, c.scheme_row, c.scheme_col, "--scheme");
  const MixedStrategy p = load_strategy(c.p, "--p");
  const MixedStrategy q = load_strategy(c.q, "--q");
  if (p.size() != fam.row.size()) {
    throw InputError("--p " + c.p + ": expected " + std::to_string(fam.row.size()) +
                     " probabilities");
  }
  if (q.size() != fam.col.size()) {
    throw InputError("--q " + c.q + ": expected " + std::to_string(fam.col.size()) +
                     " probabilities");
  }

  PayoffResult result;
  result.float_value =
      expected_payoff(payoff_operator(g), final_state(s.rho, fam.row, fam.col, p, q));
  const DiagonalWeights w = diagonal_weights(s.rho);
  if (w.exact) {
    result.exact_value = expected_payoff_exact(g, w, fam.row, fam.col, p, q);
    result.exact = true;
  }
  emit(render(result, c), c, out);
  return kExitOk;
}

int cmd_demo_flaw(const RunConfig& c, std::ostream& out) {
  const BimatrixGame g = load_game(c);
  const FlawDemo d = with_context("--game " + c.game_path, [&] { return demo_flaw(g); });
  emit(render(d, c), c, out);
  return d.entry.pass ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig c;
  CLI::App app{"Quantum bimatrix game schemes: induced games, recovery checks, equilibria",
               "mwgames"};
  app.require_subcommand(1);
  const std::vector<std::string> schemes = {"gmw", "it3", "mw2"};

  auto add_game = [&](CLI::App* sub) {
    sub->add_option("--game", c.game_path, "Game file")->required();
    sub->add_option("--format", c.format, "Output format")
        ->check(CLI::IsMember({"table", "structured"}));
    sub->add_option("--out", c.out_path, "Write the report to this file");
  };
  auto add_state = [&](CLI::App* sub) {
    auto* expr = sub->add_option("--state", c.state_expr, "Initial state as a ket expression");
    auto* file = sub->add_option("--state-file", c.state_path, "Initial state file");
    expr->excludes(file);
  };
  auto add_scheme = [&](CLI::App* sub) {
    sub->add_option("--scheme", c.scheme, "Operator family for both players")
        ->check(CLI::IsMember(schemes));
    sub->add_option("--scheme-row", c.scheme_row, "Row player's family")->check(CLI::IsMember(schemes));
    sub->add_option("--scheme-col", c.scheme_col, "Column player's family")->check(CLI::IsMember(schemes));
  };

  auto* induce = app.add_subcommand("induce", "Print the game induced by a scheme and state");
  add_game(induce);
  add_state(induce);
  add_scheme(induce);

  auto* recovery = app.add_subcommand("check-recovery", "Check classical recovery at every basis state");
  add_game(recovery);
  add_scheme(recovery);

  auto* compare = app.add_subcommand("compare", "Compare the games induced by two schemes");
  add_game(compare);
  add_state(compare);
  add_scheme(compare);
  compare->add_option("--vs", c.vs, "Second family for both players")->check(CLI::IsMember(schemes));
  compare->add_option("--vs-row", c.vs_row, "Second row family")->check(CLI::IsMember(schemes));
  compare->add_option("--vs-col", c.vs_col, "Second column family")->check(CLI::IsMember(schemes));

  auto* equilibria = app.add_subcommand("equilibria", "Pure and mixed Nash equilibria");
  add_game(equilibria);
  add_state(equilibria);
  add_scheme(equilibria);

  auto* payoff = app.add_subcommand("payoff", "Expected payoff of a mixed operator profile");
  add_game(payoff);
  add_state(payoff);
  add_scheme(payoff);
  payoff->add_option("--p", c.p, "Row player's probabilities, e.g. 1/2,1/2")->required();
  payoff->add_option("--q", c.q, "Column player's probabilities")->required();

  auto* demo = app.add_subcommand("demo-flaw", "Swap-set scheme at |01> with its recovery verdict");
  add_game(demo);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (induce->parsed()) return cmd_induce(c, out);
    if (recovery->parsed()) return cmd_check_recovery(c, out);
    if (compare->parsed()) return cmd_compare(c, out);
    if (equilibria->parsed()) {
      const bool induce_first = has_state(c) || equilibria->count("--scheme") > 0 ||
                                equilibria->count("--scheme-row") > 0 ||
                                equilibria->count("--scheme-col") > 0;
      return cmd_equilibria(c, induce_first, out);
    }
    if (payoff->parsed()) return cmd_payoff(c, out);
    if (demo->parsed()) return cmd_demo_flaw(c, out);
  } catch (const InputError& e) {
    err << "mwgames: " << e.what() << "\n";
    return kExitInput;
  } catch (const InvariantViolation& e) {
    err << "mwgames: internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::exception& e) {
    err << "mwgames: internal error: " << e.what() << "\n";
    return kExitInternal;
  }
  err << "mwgames: no subcommand\n";
  return kExitInput;
}

}  // namespace mwgames::cli

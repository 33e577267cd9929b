#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "mwgames/game.hpp"
#include "mwgames/rational.hpp"
#include "mwgames/state.hpp"

namespace mwgames {

// Unitary that permutes computational basis states: |k> -> |mapping[k]>.
class PermutationUnitary {
 public:
  // Throws std::invalid_argument unless mapping is a bijection of {0..l-1}.
  PermutationUnitary(std::vector<std::size_t> mapping, std::string label);

  std::size_t dim() const { return mapping_.size(); }
  std::size_t apply(std::size_t k) const { return mapping_.at(k); }
  const std::vector<std::size_t>& mapping() const { return mapping_; }
  const std::string& label() const { return label_; }

  // Integer permutation matrix, column k has its 1 in row mapping[k].
  Eigen::MatrixXi integer_matrix() const;
  ComplexMatrix matrix() const;

 private:
  std::vector<std::size_t> mapping_;
  std::string label_;
};

enum class FamilyKind {
  kGmw,  // cyclic shifts V_k : i -> i + k mod l
  kIt3,  // the 3-dimensional (I, D, C) swap set
  kMw2,  // the original 2-dimensional (I, C) set
};

class OperatorFamily {
 public:
  FamilyKind kind() const { return kind_; }
  std::size_t dim() const { return dim_; }
  std::size_t size() const { return operators_.size(); }
  const std::vector<PermutationUnitary>& operators() const { return operators_; }
  const PermutationUnitary& op(std::size_t k) const { return operators_.at(k); }

  // "gmw(3)", "it3", "mw2".
  std::string id() const;

  friend OperatorFamily gmw_family(std::size_t l);
  friend OperatorFamily it3_family();
  friend OperatorFamily mw2_family();

 private:
  OperatorFamily(FamilyKind kind, std::size_t dim, std::vector<PermutationUnitary> ops);

  FamilyKind kind_;
  std::size_t dim_;
  std::vector<PermutationUnitary> operators_;
};

// l cyclic shifts, operator k maps i to (i + k) mod l. Throws on l == 0.
OperatorFamily gmw_family(std::size_t l);
// Ordered (I, D, C): D swaps 0 and 1, C swaps 0 and 2.
OperatorFamily it3_family();
// Ordered (I, C) with C the bit flip; same mappings as gmw_family(2).
OperatorFamily mw2_family();

// "gmw", "it3" or "mw2"; gmw is sized by `dim`. Throws std::invalid_argument
// for unknown names or a fixed-size family that does not fit `dim`.
OperatorFamily family_by_name(std::string_view name, std::size_t dim);

// Probability vector over a family's operators: entries >= 0, exact sum 1.
class MixedStrategy {
 public:
  explicit MixedStrategy(std::vector<Rational> probabilities);

  static MixedStrategy pure(std::size_t size, std::size_t index);
  static MixedStrategy uniform(std::size_t size);
  // Comma-separated rationals, optionally wrapped in [ ].
  static MixedStrategy parse(std::string_view text);

  std::size_t size() const { return probabilities_.size(); }
  const Rational& operator[](std::size_t k) const { return probabilities_[k]; }
  const std::vector<Rational>& probabilities() const { return probabilities_; }
  std::vector<std::size_t> support() const;

  friend bool operator==(const MixedStrategy&, const MixedStrategy&) = default;

 private:
  std::vector<Rational> probabilities_;
};

std::string to_string(const MixedStrategy& s);

// Diagonal observable X = sum_ij P_ij |ij><ij|.
struct PayoffOperator {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<PayoffPair> diagonal;
};

// Floating-point payoff pair from the general pipeline.
struct RealPayoff {
  double row = 0.0;
  double col = 0.0;
};

struct InducedGame {
  BimatrixGame game;
  std::string row_family;
  std::string col_family;
  std::string state;
  // False when the cells came from the floating pipeline.
  bool exact = true;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;

  friend bool operator==(const InducedGame&, const InducedGame&) = default;
};

// rho_fin = sum_ij p_i q_j (V_i (x) W_j) rho_in (V_i (x) W_j)^dagger.
DensityOperator final_state(const DensityOperator& rho_in, const OperatorFamily& fam_row,
                            const OperatorFamily& fam_col, const MixedStrategy& p,
                            const MixedStrategy& q);

PayoffOperator payoff_operator(const BimatrixGame& g);

// tr(X rho_fin), componentwise.
RealPayoff expected_payoff(const PayoffOperator& x, const DensityOperator& rho_fin);

// Exact route: sum_ij p_i q_j sum_kl w(k,l) P(sigma_i(k), tau_j(l)).
// Throws InexactWeightsError when w is not exact.
PayoffPair expected_payoff_exact(const BimatrixGame& g, const DiagonalWeights& w,
                                 const OperatorFamily& fam_row, const OperatorFamily& fam_col,
                                 const MixedStrategy& p, const MixedStrategy& q);

// Cell (s, t) is the expected payoff when the players apply operators s and t
// with certainty. Exact whenever the diagonal of rho_in is.
InducedGame induce_bimatrix(const BimatrixGame& g, const DensityOperator& rho_in,
                            const OperatorFamily& fam_row, const OperatorFamily& fam_col,
                            std::string state_label = {});

// Bilinear form sum_st p_s q_t cell(s, t).
PayoffPair mixed_value(const BimatrixGame& g, const MixedStrategy& p, const MixedStrategy& q);
inline PayoffPair mixed_value(const InducedGame& ig, const MixedStrategy& p,
                              const MixedStrategy& q) {
  return mixed_value(ig.game, p, q);
}

}  // namespace mwgames

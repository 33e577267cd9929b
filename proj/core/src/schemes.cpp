#include "mwgames/schemes.hpp"

#include <algorithm>
#include <cctype>

#include "mwgames/errors.hpp"

namespace mwgames {
namespace {

// Denominator bound used to tidy floating-pipeline cells into rationals.
constexpr std::int64_t kCellSnapDenominator = 1000;
constexpr double kCellSnapTolerance = 1e-12;

Rational cell_from_double(double x) {
  Rational r;
  if (Rational::snap(x, kCellSnapDenominator, kCellSnapTolerance, &r)) return r;
  return Rational::from_double(x);
}

void check_dims(const BimatrixGame& g, const OperatorFamily& fam_row,
                const OperatorFamily& fam_col) {
  if (fam_row.dim() != g.rows() || fam_col.dim() != g.cols()) {
    throw DimensionError("families act on " + std::to_string(fam_row.dim()) + "x" +
                         std::to_string(fam_col.dim()) + " but the game is " +
                         std::to_string(g.rows()) + "x" + std::to_string(g.cols()));
  }
}

void check_strategies(const OperatorFamily& fam_row, const OperatorFamily& fam_col,
                      const MixedStrategy& p, const MixedStrategy& q) {
  if (p.size() != fam_row.size() || q.size() != fam_col.size()) {
    throw DimensionError("strategy lengths " + std::to_string(p.size()) + "/" +
                         std::to_string(q.size()) + " do not match family sizes " +
                         std::to_string(fam_row.size()) + "/" + std::to_string(fam_col.size()));
  }
}

}  // namespace

PermutationUnitary::PermutationUnitary(std::vector<std::size_t> mapping, std::string label)
    : mapping_(std::move(mapping)), label_(std::move(label)) {
  if (mapping_.empty()) throw std::invalid_argument("permutation of an empty basis");
  std::vector<bool> seen(mapping_.size(), false);
  for (std::size_t k : mapping_) {
    if (k >= mapping_.size() || seen[k]) {
      throw std::invalid_argument("operator " + label_ + " is not a bijection");
    }
    seen[k] = true;
  }
}

Eigen::MatrixXi PermutationUnitary::integer_matrix() const {
  const auto l = static_cast<Eigen::Index>(dim());
  Eigen::MatrixXi u = Eigen::MatrixXi::Zero(l, l);
  for (std::size_t k = 0; k < dim(); ++k) {
    u(static_cast<Eigen::Index>(mapping_[k]), static_cast<Eigen::Index>(k)) = 1;
  }
  return u;
}

ComplexMatrix PermutationUnitary::matrix() const { return integer_matrix().cast<Amplitude>(); }

OperatorFamily::OperatorFamily(FamilyKind kind, std::size_t dim,
                               std::vector<PermutationUnitary> ops)
    : kind_(kind), dim_(dim), operators_(std::move(ops)) {
  for (const auto& op : operators_) {
    if (op.dim() != dim_) throw InvariantViolation("family operators disagree on dimension");
  }
}

std::string OperatorFamily::id() const {
  switch (kind_) {
    case FamilyKind::kGmw:
      return "gmw(" + std::to_string(dim_) + ")";
    case FamilyKind::kIt3:
      return "it3";
    case FamilyKind::kMw2:
      return "mw2";
  }
  return "?";
}

OperatorFamily gmw_family(std::size_t l) {
  if (l == 0) throw std::invalid_argument("cyclic family needs dimension >= 1");
  std::vector<PermutationUnitary> ops;
  ops.reserve(l);
  for (std::size_t k = 0; k < l; ++k) {
    std::vector<std::size_t> mapping(l);
    for (std::size_t i = 0; i < l; ++i) mapping[i] = (i + k) % l;
    ops.emplace_back(std::move(mapping), "V" + std::to_string(k));
  }
  return OperatorFamily(FamilyKind::kGmw, l, std::move(ops));
}

OperatorFamily it3_family() {
  // Second and third operators follow the order that reproduces the |01>
  // bimatrix of the criticized 3x3 scheme: D first, then C.
  return OperatorFamily(FamilyKind::kIt3, 3,
                        {PermutationUnitary({0, 1, 2}, "I"), PermutationUnitary({1, 0, 2}, "D"),
                         PermutationUnitary({2, 1, 0}, "C")});
}

OperatorFamily mw2_family() {
  return OperatorFamily(FamilyKind::kMw2, 2,
                        {PermutationUnitary({0, 1}, "I"), PermutationUnitary({1, 0}, "C")});
}

OperatorFamily family_by_name(std::string_view name, std::size_t dim) {
  if (name == "gmw") return gmw_family(dim);
  if (name == "it3") {
    if (dim != 3) {
      throw std::invalid_argument("it3 acts on dimension 3, not " + std::to_string(dim));
    }
    return it3_family();
  }
  if (name == "mw2") {
    if (dim != 2) {
      throw std::invalid_argument("mw2 acts on dimension 2, not " + std::to_string(dim));
    }
    return mw2_family();
  }
  throw std::invalid_argument("unknown scheme \"" + std::string(name) +
                              "\" (expected gmw, it3 or mw2)");
}

MixedStrategy::MixedStrategy(std::vector<Rational> probabilities)
    : probabilities_(std::move(probabilities)) {
  if (probabilities_.empty()) throw StateError("mixed strategy over zero operators");
  Rational total = 0;
  for (const Rational& x : probabilities_) {
    if (x.sign() < 0) throw StateError("negative probability " + x.to_string());
    total += x;
  }
  if (total != Rational(1)) {
    throw StateError("probabilities sum to " + total.to_string() + ", not 1");
  }
}

MixedStrategy MixedStrategy::pure(std::size_t size, std::size_t index) {
  if (index >= size) throw DimensionError("pure strategy index out of range");
  std::vector<Rational> p(size, Rational(0));
  p[index] = 1;
  return MixedStrategy(std::move(p));
}

MixedStrategy MixedStrategy::uniform(std::size_t size) {
  if (size == 0) throw DimensionError("uniform strategy over zero operators");
  return MixedStrategy(std::vector<Rational>(size, Rational(1, static_cast<std::int64_t>(size))));
}

MixedStrategy MixedStrategy::parse(std::string_view text) {
  std::string s(text);
  std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)) || c == '"'; });
  if (!s.empty() && s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated strategy list \"" + std::string(text) + "\"");
    s = s.substr(1, s.size() - 2);
  }
  std::vector<Rational> probs;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    try {
      probs.push_back(Rational::parse(s.substr(start, comma - start)));
    } catch (const std::invalid_argument& e) {
      throw ParseError("strategy entry " + std::to_string(probs.size()) + ": " + e.what());
    }
    start = comma + 1;
  }
  return MixedStrategy(std::move(probs));
}

std::vector<std::size_t> MixedStrategy::support() const {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < probabilities_.size(); ++k) {
    if (probabilities_[k].sign() > 0) out.push_back(k);
  }
  return out;
}

std::string to_string(const MixedStrategy& s) {
  std::string out = "(";
  for (std::size_t k = 0; k < s.size(); ++k) out += (k ? ", " : "") + s[k].to_string();
  return out + ")";
}

DensityOperator final_state(const DensityOperator& rho_in, const OperatorFamily& fam_row,
                            const OperatorFamily& fam_col, const MixedStrategy& p,
                            const MixedStrategy& q) {
  const std::size_t n = rho_in.rows();
  const std::size_t m = rho_in.cols();
  if (fam_row.dim() != n || fam_col.dim() != m) {
    throw DimensionError("families act on " + std::to_string(fam_row.dim()) + "x" +
                         std::to_string(fam_col.dim()) + " but the state lives on " +
                         std::to_string(n) + "x" + std::to_string(m));
  }
  check_strategies(fam_row, fam_col, p, q);

  const std::size_t d = n * m;
  const auto di = static_cast<Eigen::Index>(d);
  const ComplexMatrix& in = rho_in.matrix();
  ComplexMatrix out = ComplexMatrix::Zero(di, di);
  const auto& exact_in = rho_in.exact_diagonal();
  std::vector<Rational> exact_out(exact_in ? d : 0, Rational(0));

  std::vector<Eigen::Index> image(d);
  for (std::size_t s = 0; s < fam_row.size(); ++s) {
    if (p[s].sign() == 0) continue;
    for (std::size_t t = 0; t < fam_col.size(); ++t) {
      if (q[t].sign() == 0) continue;
      const Rational weight = p[s] * q[t];
      const double w = weight.to_double();
      const PermutationUnitary& u = fam_row.op(s);
      const PermutationUnitary& v = fam_col.op(t);
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          image[flat_index(k, l, m)] =
              static_cast<Eigen::Index>(flat_index(u.apply(k), v.apply(l), m));
        }
      }
      // (U rho U^dagger)(image[a], image[b]) = rho(a, b) for a permutation U.
      for (std::size_t a = 0; a < d; ++a) {
        for (std::size_t b = 0; b < d; ++b) {
          out(image[a], image[b]) += w * in(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b));
        }
      }
      if (exact_in) {
        for (std::size_t a = 0; a < d; ++a) {
          exact_out[static_cast<std::size_t>(image[a])] += weight * (*exact_in)[a];
        }
      }
    }
  }

  try {
    if (exact_in) return DensityOperator::with_exact_diagonal(n, m, std::move(out), std::move(exact_out));
    return DensityOperator(n, m, std::move(out));
  } catch (const StateError& e) {
    throw InvariantViolation(std::string("final state is not a density operator: ") + e.what());
  }
}

PayoffOperator payoff_operator(const BimatrixGame& g) {
  return PayoffOperator{g.rows(), g.cols(), g.cells()};
}

RealPayoff expected_payoff(const PayoffOperator& x, const DensityOperator& rho_fin) {
  if (x.rows != rho_fin.rows() || x.cols != rho_fin.cols()) {
    throw DimensionError("payoff operator and state dimensions differ");
  }
  RealPayoff e;
  for (std::size_t k = 0; k < x.diagonal.size(); ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    const Amplitude z = rho_fin.matrix()(idx, idx);
    if (std::abs(z.imag()) >= kImaginaryResidue) {
      throw InvariantViolation("diagonal entry " + std::to_string(k) +
                               " of the final state is not real");
    }
    e.row += x.diagonal[k].row.to_double() * z.real();
    e.col += x.diagonal[k].col.to_double() * z.real();
  }
  return e;
}

PayoffPair expected_payoff_exact(const BimatrixGame& g, const DiagonalWeights& w,
                                 const OperatorFamily& fam_row, const OperatorFamily& fam_col,
                                 const MixedStrategy& p, const MixedStrategy& q) {
  if (!w.exact) throw InexactWeightsError("diagonal weights are not exact rationals");
  check_dims(g, fam_row, fam_col);
  check_strategies(fam_row, fam_col, p, q);
  const std::size_t n = g.rows();
  const std::size_t m = g.cols();
  if (w.exact_values.size() != n * m) throw DimensionError("weights do not match the game");

  PayoffPair e{0, 0};
  for (std::size_t s = 0; s < fam_row.size(); ++s) {
    if (p[s].sign() == 0) continue;
    for (std::size_t t = 0; t < fam_col.size(); ++t) {
      if (q[t].sign() == 0) continue;
      PayoffPair cell{0, 0};
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < m; ++l) {
          const Rational& weight = w.exact_values[flat_index(k, l, m)];
          if (weight.sign() == 0) continue;
          const PayoffPair& pay = g.at(fam_row.op(s).apply(k), fam_col.op(t).apply(l));
          cell.row += weight * pay.row;
          cell.col += weight * pay.col;
        }
      }
      const Rational pq = p[s] * q[t];
      e.row += pq * cell.row;
      e.col += pq * cell.col;
    }
  }
  return e;
}

InducedGame induce_bimatrix(const BimatrixGame& g, const DensityOperator& rho_in,
                            const OperatorFamily& fam_row, const OperatorFamily& fam_col,
                            std::string state_label) {
  check_dims(g, fam_row, fam_col);
  if (rho_in.rows() != g.rows() || rho_in.cols() != g.cols()) {
    throw DimensionError("state dimensions do not match the game");
  }
  const DiagonalWeights w = diagonal_weights(rho_in);
  const std::size_t rows = fam_row.size();
  const std::size_t cols = fam_col.size();
  std::vector<PayoffPair> cells;
  cells.reserve(rows * cols);

  if (w.exact) {
    for (std::size_t s = 0; s < rows; ++s) {
      for (std::size_t t = 0; t < cols; ++t) {
        cells.push_back(expected_payoff_exact(g, w, fam_row, fam_col, MixedStrategy::pure(rows, s),
                                              MixedStrategy::pure(cols, t)));
      }
    }
  } else {
    const PayoffOperator x = payoff_operator(g);
    for (std::size_t s = 0; s < rows; ++s) {
      for (std::size_t t = 0; t < cols; ++t) {
        const RealPayoff e = expected_payoff(
            x, final_state(rho_in, fam_row, fam_col, MixedStrategy::pure(rows, s),
                           MixedStrategy::pure(cols, t)));
        cells.push_back({cell_from_double(e.row), cell_from_double(e.col)});
      }
    }
  }
  InducedGame out{BimatrixGame(rows, cols, std::move(cells)), fam_row.id(), fam_col.id(),
                  std::move(state_label), w.exact, {}, {}};
  for (const auto& op : fam_row.operators()) out.row_labels.push_back(op.label());
  for (const auto& op : fam_col.operators()) out.col_labels.push_back(op.label());
  return out;
}

PayoffPair mixed_value(const BimatrixGame& g, const MixedStrategy& p, const MixedStrategy& q) {
  if (p.size() != g.rows() || q.size() != g.cols()) {
    throw DimensionError("strategy lengths do not match the game");
  }
  PayoffPair v{0, 0};
  for (std::size_t s = 0; s < g.rows(); ++s) {
    if (p[s].sign() == 0) continue;
    for (std::size_t t = 0; t < g.cols(); ++t) {
      if (q[t].sign() == 0) continue;
      const Rational pq = p[s] * q[t];
      v.row += pq * g.at(s, t).row;
      v.col += pq * g.at(s, t).col;
    }
  }
  return v;
}

}  // namespace mwgames

#include "mwgames/state.hpp"

#include <cctype>
#include <cmath>
#include <sstream>

#include <nlohmann/json.hpp>

#include "mwgames/errors.hpp"
#include "mwgames/game.hpp"

namespace mwgames {
namespace {

using nlohmann::json;

std::string fmt_double(double x) {
  std::ostringstream os;
  os.precision(17);
  os << x;
  return os.str();
}

// Recursive-descent evaluator for ket expressions:
//   sum     := ['+'|'-'] term (('+'|'-') term)*
//   term    := [coeff ['*']] atom ('/' divisor)*
//   atom    := '|' digit digit '>' | '(' sum ')'
//   coeff   := (number | 'sqrt(' int ')') ('/' divisor)*
//   divisor := number | 'sqrt(' int ')'
class KetParser {
 public:
  KetParser(std::string_view text, std::size_t rows, std::size_t cols)
      : text_(text), rows_(rows), cols_(cols) {}

  std::vector<Amplitude> parse() {
    std::vector<Amplitude> v = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  using Vec = std::vector<Amplitude>;

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("ket expression \"" + std::string(text_) + "\" at offset " +
                     std::to_string(pos_) + ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool at_keyword(std::string_view kw) {
    skip_ws();
    return text_.substr(pos_, kw.size()) == kw;
  }

  Vec sum() {
    double sign = 1.0;
    if (accept('-')) {
      sign = -1.0;
    } else {
      accept('+');
    }
    Vec acc = term();
    scale(acc, sign);
    for (;;) {
      if (accept('+')) {
        add(acc, term(), 1.0);
      } else if (accept('-')) {
        add(acc, term(), -1.0);
      } else {
        return acc;
      }
    }
  }

  Vec term() {
    double coeff = 1.0;
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.' || at_keyword("sqrt")) {
      coeff = value();
      while (peek() == '/') {
        ++pos_;
        coeff /= divisor();
      }
      accept('*');
    }
    Vec v = atom();
    while (peek() == '/') {
      ++pos_;
      coeff /= divisor();
    }
    scale(v, coeff);
    return v;
  }

  Vec atom() {
    if (accept('(')) {
      Vec v = sum();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (accept('|')) {
      std::size_t i = digit(rows_, "row");
      std::size_t j = digit(cols_, "column");
      if (!accept('>')) fail("expected '>'");
      Vec v(rows_ * cols_);
      v[flat_index(i, j, cols_)] = 1.0;
      return v;
    }
    fail("expected a ket '|ij>' or '('");
  }

  std::size_t digit(std::size_t bound, const char* which) {
    char c = peek();
    if (!std::isdigit(static_cast<unsigned char>(c))) fail("expected a digit");
    auto d = static_cast<std::size_t>(c - '0');
    if (d >= bound) {
      fail(std::string(which) + " label " + std::string(1, c) + " out of range for dimension " +
           std::to_string(bound));
    }
    ++pos_;
    return d;
  }

  double value() {
    if (at_keyword("sqrt")) return root();
    return number();
  }

  double divisor() {
    double d = value();
    if (d == 0.0) fail("division by zero");
    return d;
  }

  double root() {
    pos_ += 4;
    if (!accept('(')) fail("expected '(' after sqrt");
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("sqrt takes a positive integer");
    double v = std::stod(std::string(text_.substr(start, pos_ - start)));
    if (v <= 0.0) fail("sqrt takes a positive integer");
    if (!accept(')')) fail("expected ')' after sqrt argument");
    return std::sqrt(v);
  }

  double number() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '.')) {
      ++pos_;
    }
    if (start == pos_) fail("expected a number");
    try {
      return Rational::parse(text_.substr(start, pos_ - start)).to_double();
    } catch (const std::invalid_argument&) {
      pos_ = start;
      fail("malformed number");
    }
  }

  static void scale(Vec& v, double s) {
    for (auto& a : v) a *= s;
  }

  static void add(Vec& acc, const Vec& v, double s) {
    for (std::size_t k = 0; k < acc.size(); ++k) acc[k] += s * v[k];
  }

  std::string_view text_;
  std::size_t rows_;
  std::size_t cols_;
  std::size_t pos_ = 0;
};

}  // namespace

PureState::PureState(std::size_t rows, std::size_t cols, std::vector<Amplitude> amplitudes,
                     double tol)
    : rows_(rows), cols_(cols), amplitudes_(std::move(amplitudes)) {
  if (rows_ == 0 || cols_ == 0) throw DimensionError("state dimensions must be positive");
  if (amplitudes_.size() != rows_ * cols_) {
    throw DimensionError("expected " + std::to_string(rows_ * cols_) + " amplitudes, got " +
                         std::to_string(amplitudes_.size()));
  }
  double norm2 = 0.0;
  for (const Amplitude& a : amplitudes_) {
    if (!std::isfinite(a.real()) || !std::isfinite(a.imag())) {
      throw StateError("non-finite amplitude");
    }
    norm2 += std::norm(a);
  }
  double norm = std::sqrt(norm2);
  if (std::abs(norm - 1.0) > tol) {
    throw StateError("state is not normalized: norm = " + fmt_double(norm), norm);
  }
}

const Amplitude& PureState::amplitude(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::out_of_range("basis label out of range");
  return amplitudes_[flat_index(i, j, cols_)];
}

DensityCheck check_density(const ComplexMatrix& matrix) {
  DensityCheck check;
  check.hermitian_error = (matrix - matrix.adjoint()).cwiseAbs().maxCoeff();
  check.trace_error = std::abs(matrix.trace() - Amplitude(1.0, 0.0));
  ComplexMatrix hermitian_part = (matrix + matrix.adjoint()) / 2.0;
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian_part, Eigen::EigenvaluesOnly);
  check.min_eigenvalue = solver.eigenvalues().minCoeff();
  return check;
}

DensityOperator::DensityOperator(std::size_t rows, std::size_t cols, ComplexMatrix matrix)
    : rows_(rows), cols_(cols), matrix_(std::move(matrix)) {
  const auto d = static_cast<Eigen::Index>(rows_ * cols_);
  if (rows_ == 0 || cols_ == 0) throw DimensionError("state dimensions must be positive");
  if (matrix_.rows() != d || matrix_.cols() != d) {
    throw DimensionError("density matrix must be " + std::to_string(d) + "x" + std::to_string(d));
  }
  if (!matrix_.allFinite()) throw StateError("density matrix has non-finite entries");
  DensityCheck check = check_density(matrix_);
  if (check.hermitian_error > kHermitianTolerance) {
    throw StateError("density matrix is not Hermitian (max deviation " +
                     fmt_double(check.hermitian_error) + ")");
  }
  if (check.trace_error > kTraceTolerance) {
    throw StateError("density matrix trace differs from 1 by " + fmt_double(check.trace_error));
  }
  if (check.min_eigenvalue < kEigenvalueFloor) {
    throw StateError("density matrix is not positive (min eigenvalue " +
                     fmt_double(check.min_eigenvalue) + ")");
  }
}

DensityOperator DensityOperator::from_diagonal(std::size_t rows, std::size_t cols,
                                               std::vector<Rational> weights) {
  const std::size_t d = rows * cols;
  if (weights.size() != d) {
    throw DimensionError("expected " + std::to_string(d) + " diagonal weights, got " +
                         std::to_string(weights.size()));
  }
  ComplexMatrix m = ComplexMatrix::Zero(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(d));
  for (std::size_t k = 0; k < d; ++k) {
    m(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = weights[k].to_double();
  }
  return with_exact_diagonal(rows, cols, std::move(m), std::move(weights));
}

DensityOperator DensityOperator::with_exact_diagonal(std::size_t rows, std::size_t cols,
                                                     ComplexMatrix matrix,
                                                     std::vector<Rational> exact_diagonal) {
  Rational total = 0;
  for (const Rational& w : exact_diagonal) {
    if (w.sign() < 0) throw StateError("diagonal weight " + w.to_string() + " is negative");
    total += w;
  }
  if (total != Rational(1)) {
    throw StateError("diagonal weights sum to " + total.to_string() + ", not 1");
  }
  DensityOperator rho(rows, cols, std::move(matrix));
  if (exact_diagonal.size() != rho.dim()) {
    throw DimensionError("exact diagonal has the wrong length");
  }
  for (std::size_t k = 0; k < exact_diagonal.size(); ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    if (std::abs(rho.matrix_(idx, idx).real() - exact_diagonal[k].to_double()) > kTraceTolerance) {
      throw StateError("exact diagonal disagrees with the matrix at index " + std::to_string(k));
    }
  }
  rho.exact_diagonal_ = std::move(exact_diagonal);
  return rho;
}

double DensityOperator::min_eigenvalue() const { return check_density(matrix_).min_eigenvalue; }

DensityOperator DensityOperator::dephased() const {
  ComplexMatrix diag = matrix_.diagonal().asDiagonal();
  DensityOperator out(rows_, cols_, std::move(diag));
  out.exact_diagonal_ = exact_diagonal_;
  return out;
}

PureState basis_state(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols) {
  if (i >= rows || j >= cols) {
    throw DimensionError("basis state |" + std::to_string(i) + "," + std::to_string(j) +
                         "> out of range for " + std::to_string(rows) + "x" +
                         std::to_string(cols));
  }
  std::vector<Amplitude> amps(rows * cols);
  amps[flat_index(i, j, cols)] = 1.0;
  return PureState(rows, cols, std::move(amps));
}

PureState parse_ket(std::string_view text, std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw DimensionError("state dimensions must be positive");
  if (rows > 10 || cols > 10) {
    throw DimensionError("ket expressions label each subsystem with one digit; use a state file "
                         "for dimensions above 10");
  }
  std::vector<Amplitude> amps = KetParser(text, rows, cols).parse();
  return PureState(rows, cols, std::move(amps), kKetNormTolerance);
}

DensityOperator density_from_pure(const PureState& s) {
  Eigen::Map<const Eigen::VectorXcd> psi(s.amplitudes().data(),
                                         static_cast<Eigen::Index>(s.dim()));
  ComplexMatrix rho = psi * psi.adjoint();
  return DensityOperator(s.rows(), s.cols(), std::move(rho));
}

DiagonalWeights diagonal_weights(const DensityOperator& rho) {
  DiagonalWeights w;
  const std::size_t d = rho.dim();
  w.values.reserve(d);
  for (std::size_t k = 0; k < d; ++k) {
    const auto idx = static_cast<Eigen::Index>(k);
    const Amplitude z = rho.matrix()(idx, idx);
    if (std::abs(z.imag()) >= kImaginaryResidue) {
      throw InvariantViolation("diagonal entry " + std::to_string(k) + " has imaginary part " +
                               fmt_double(z.imag()));
    }
    w.values.push_back(z.real());
  }

  if (rho.exact_diagonal()) {
    w.exact_values = *rho.exact_diagonal();
    w.exact = true;
    return w;
  }

  w.exact_values.reserve(d);
  Rational total = 0;
  for (double x : w.values) {
    Rational r;
    if (!Rational::snap(x, kSnapMaxDenominator, kSnapTolerance, &r)) {
      w.exact_values.clear();
      return w;
    }
    total += r;
    w.exact_values.push_back(r);
  }
  w.exact = total == Rational(1);
  if (!w.exact) w.exact_values.clear();
  return w;
}

DensityOperator parse_state_file(std::string_view text, std::size_t rows, std::size_t cols) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("malformed state file: ") + e.what());
  }
  const std::size_t d = rows * cols;
  if (doc.is_object() && doc.contains("diag")) {
    const json& diag = doc["diag"];
    if (!diag.is_array()) throw ParseError("\"diag\" must be an array");
    if (diag.size() != d) {
      throw DimensionError("\"diag\" has " + std::to_string(diag.size()) + " entries; the game needs " +
                           std::to_string(d));
    }
    std::vector<Rational> weights;
    for (std::size_t k = 0; k < diag.size(); ++k) {
      const json& v = diag[k];
      try {
        if (v.is_number_integer()) {
          weights.emplace_back(v.get<std::int64_t>());
        } else if (v.is_string()) {
          weights.push_back(Rational::parse(v.get<std::string>()));
        } else {
          throw std::invalid_argument("expected an integer or rational string");
        }
      } catch (const std::exception& e) {
        throw ParseError("\"diag\" entry " + std::to_string(k) + ": " + e.what());
      }
    }
    return DensityOperator::from_diagonal(rows, cols, std::move(weights));
  }
  if (doc.is_object() && doc.contains("matrix")) {
    const json& rows_json = doc["matrix"];
    if (!rows_json.is_array() || rows_json.size() != d) {
      throw DimensionError("\"matrix\" must have " + std::to_string(d) + " rows");
    }
    const auto n = static_cast<Eigen::Index>(d);
    ComplexMatrix m(n, n);
    for (std::size_t a = 0; a < d; ++a) {
      const json& row = rows_json[a];
      if (!row.is_array() || row.size() != d) {
        throw ParseError("\"matrix\" row " + std::to_string(a) + " must have " +
                             std::to_string(d) + " entries",
                         a);
      }
      for (std::size_t b = 0; b < d; ++b) {
        const json& z = row[b];
        if (!z.is_object() || !z.contains("re") || !z["re"].is_number() ||
            (z.contains("im") && !z["im"].is_number())) {
          throw ParseError("\"matrix\" entry (" + std::to_string(a) + "," + std::to_string(b) +
                               ") must be {\"re\": x, \"im\": y}",
                           a, b);
        }
        m(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) =
            Amplitude(z["re"].get<double>(), z.value("im", 0.0));
      }
    }
    return DensityOperator(rows, cols, std::move(m));
  }
  throw ParseError("state file must contain \"diag\" or \"matrix\"");
}

}  // namespace mwgames

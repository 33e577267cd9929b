#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "mwgames/rational.hpp"

namespace mwgames {

using Amplitude = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;

inline constexpr double kNormTolerance = 1e-12;
inline constexpr double kKetNormTolerance = 1e-9;
inline constexpr double kHermitianTolerance = 1e-12;
inline constexpr double kTraceTolerance = 1e-12;
inline constexpr double kEigenvalueFloor = -1e-9;
inline constexpr double kImaginaryResidue = 1e-12;
inline constexpr double kSnapTolerance = 1e-9;
inline constexpr std::int64_t kSnapMaxDenominator = 64;

// Pure state of C^n (x) C^m; amplitude of |ij> sits at flat_index(i, j, m).
class PureState {
 public:
  // Throws StateError when the norm differs from 1 by more than tol.
  PureState(std::size_t rows, std::size_t cols, std::vector<Amplitude> amplitudes,
            double tol = kNormTolerance);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return amplitudes_.size(); }
  const std::vector<Amplitude>& amplitudes() const { return amplitudes_; }
  const Amplitude& amplitude(std::size_t i, std::size_t j) const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Amplitude> amplitudes_;
};

// Density operator on C^n (x) C^m. Construction validates Hermiticity, unit
// trace and positivity (smallest eigenvalue of the Hermitian part).
//
// An operator built from an exact rational diagonal remembers it, so the
// exact payoff pipeline never has to recover it from floating point.
class DensityOperator {
 public:
  DensityOperator(std::size_t rows, std::size_t cols, ComplexMatrix matrix);

  // Diagonal operator with the given exact weights; they must be >= 0 and sum
  // to exactly 1.
  static DensityOperator from_diagonal(std::size_t rows, std::size_t cols,
                                       std::vector<Rational> weights);

  // Validated like the plain constructor; `exact_diagonal` must match the
  // matrix diagonal to within 1e-12 and sum to exactly 1.
  static DensityOperator with_exact_diagonal(std::size_t rows, std::size_t cols,
                                             ComplexMatrix matrix,
                                             std::vector<Rational> exact_diagonal);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t dim() const { return rows_ * cols_; }
  const ComplexMatrix& matrix() const { return matrix_; }
  const std::optional<std::vector<Rational>>& exact_diagonal() const { return exact_diagonal_; }

  double min_eigenvalue() const;

  // Copy with every off-diagonal entry set to zero.
  DensityOperator dephased() const;

 private:
  std::size_t rows_;
  std::size_t cols_;
  ComplexMatrix matrix_;
  std::optional<std::vector<Rational>> exact_diagonal_;
};

struct DensityCheck {
  double hermitian_error = 0.0;
  double trace_error = 0.0;
  double min_eigenvalue = 0.0;

  bool ok() const {
    return hermitian_error <= kHermitianTolerance && trace_error <= kTraceTolerance &&
           min_eigenvalue >= kEigenvalueFloor;
  }
};

DensityCheck check_density(const ComplexMatrix& matrix);

// Diagonal of a density operator. `exact` holds snapped rationals when every
// entry snapped and they sum to exactly 1; otherwise the flag is false and
// only `values` is meaningful.
struct DiagonalWeights {
  std::vector<double> values;
  std::vector<Rational> exact_values;
  bool exact = false;
};

PureState basis_state(std::size_t i, std::size_t j, std::size_t rows, std::size_t cols);

// Ket expressions such as "(|00> + |11>)/sqrt(2)" or "1/2*|01> - 1/2*|10> + ...".
// The result must already be normalized to within 1e-9.
PureState parse_ket(std::string_view text, std::size_t rows, std::size_t cols);

DensityOperator density_from_pure(const PureState& s);

DiagonalWeights diagonal_weights(const DensityOperator& rho);

// State file: {"diag": ["1/4", ...]} (exact, diagonal) or
// {"matrix": [[{"re": x, "im": y}, ...], ...]} (floating point).
DensityOperator parse_state_file(std::string_view text, std::size_t rows, std::size_t cols);

}  // namespace mwgames

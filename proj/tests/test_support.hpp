#pragma once

// Games, states and generators shared by the unit and acceptance suites.

#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

#include "mwgames/game.hpp"
#include "mwgames/schemes.hpp"
#include "mwgames/state.hpp"

namespace mwgames::testing {

// Rows Rock, Paper, Scissors; row 1 (Paper) beats column 0 (Rock).
inline BimatrixGame rps() {
  const std::vector<std::vector<Rational>> a = {{0, -1, 1}, {1, 0, -1}, {-1, 1, 0}};
  std::vector<std::vector<Rational>> b = a;
  for (auto& row : b) {
    for (auto& x : row) x = -x;
  }
  return BimatrixGame::from_matrices(a, b);
}

// Cell (i, j) carries (10i + j, -(10i + j)), so every cell is distinguishable.
inline BimatrixGame sentinel(std::size_t n = 3, std::size_t m = 3) {
  std::vector<PayoffPair> cells;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const auto v = static_cast<std::int64_t>(10 * i + j);
      cells.push_back({Rational(v), Rational(-v)});
    }
  }
  return BimatrixGame(n, m, std::move(cells));
}

inline PayoffPair sentinel_cell(std::size_t i, std::size_t j) {
  const auto v = static_cast<std::int64_t>(10 * i + j);
  return {Rational(v), Rational(-v)};
}

inline BimatrixGame coordination() {
  return BimatrixGame::from_matrices({{1, 0}, {0, 1}}, {{1, 0}, {0, 1}});
}

inline BimatrixGame matching_pennies() {
  return BimatrixGame::from_matrices({{1, -1}, {-1, 1}}, {{-1, 1}, {1, -1}});
}

inline BimatrixGame constant_game(std::size_t n, std::size_t m, const PayoffPair& p) {
  return BimatrixGame(n, m, std::vector<PayoffPair>(n * m, p));
}

inline Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::int64_t> num(-20, 20);
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  return Rational(num(rng), den(rng));
}

inline BimatrixGame random_game(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::vector<PayoffPair> cells;
  for (std::size_t k = 0; k < n * m; ++k) cells.push_back({random_rational(rng), random_rational(rng)});
  return BimatrixGame(n, m, std::move(cells));
}

inline PureState random_pure_state(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Amplitude> amps(n * m);
  double norm2 = 0.0;
  for (auto& a : amps) {
    a = {gauss(rng), gauss(rng)};
    norm2 += std::norm(a);
  }
  for (auto& a : amps) a /= std::sqrt(norm2);
  return PureState(n, m, std::move(amps));
}

// Random probability vector with small denominators, exact sum 1.
inline MixedStrategy random_strategy(std::mt19937_64& rng, std::size_t size) {
  std::uniform_int_distribution<std::int64_t> w(0, 5);
  std::vector<std::int64_t> raw(size);
  std::int64_t total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : raw) {
      x = w(rng);
      total += x;
    }
  }
  std::vector<Rational> p;
  for (auto x : raw) p.emplace_back(x, total);
  return MixedStrategy(std::move(p));
}

// Random mixed density operator: a convex mix of a few random pure states.
inline DensityOperator random_density(std::mt19937_64& rng, std::size_t n, std::size_t m) {
  std::uniform_real_distribution<double> u(0.05, 1.0);
  const auto d = static_cast<Eigen::Index>(n * m);
  ComplexMatrix rho = ComplexMatrix::Zero(d, d);
  double total = 0.0;
  for (int k = 0; k < 3; ++k) {
    const PureState s = random_pure_state(rng, n, m);
    Eigen::Map<const Eigen::VectorXcd> psi(s.amplitudes().data(), d);
    const double w = u(rng);
    rho += w * psi * psi.adjoint();
    total += w;
  }
  rho /= total;
  rho = (rho + rho.adjoint()).eval() / 2.0;
  return DensityOperator(n, m, rho);
}

}  // namespace mwgames::testing

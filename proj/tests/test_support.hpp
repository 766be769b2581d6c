#pragma once

// Closed-form constructions used as oracles across the unit tests. Nothing
// here goes through the library's exponential, logarithm or spectral code.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "sympcausal/linalg_core.hpp"

namespace sympcausal::testing {

// exp(sum_k theta_k J_k), with J_k the standard structure on (x_k, y_k).
inline Matrix block_rotation(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size());
  Matrix r = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double c = std::cos(angles[k]), s = std::sin(angles[k]);
    r(k, k) = c;
    r(k, n + k) = -s;
    r(n + k, k) = s;
    r(n + k, n + k) = c;
  }
  return r;
}

inline Matrix rotation(double theta) { return block_rotation({theta}); }

// blockdiag(theta_k J_k).
inline Matrix block_generator(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size());
  Matrix x = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    x(k, n + k) = -angles[k];
    x(n + k, k) = angles[k];
  }
  return x;
}

// A symplectic matrix built as a product of closed-form generators:
// shears [[I, S], [0, I]], [[I, 0], [S, I]] and diag(D, D^{-T}).
inline Matrix random_symplectic(std::mt19937_64& rng, int n, double spread = 0.5) {
  std::normal_distribution<double> normal(0.0, spread);
  auto sym = [&] {
    Matrix s(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) s(i, j) = normal(rng);
    return Matrix(0.5 * (s + s.transpose()));
  };
  Matrix upper = Matrix::Identity(2 * n, 2 * n);
  upper.topRightCorner(n, n) = sym();
  Matrix lower = Matrix::Identity(2 * n, 2 * n);
  lower.bottomLeftCorner(n, n) = sym();
  Matrix d = Matrix::Identity(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) d(i, j) += normal(rng) * 0.5;
  Matrix scale = Matrix::Zero(2 * n, 2 * n);
  scale.topLeftCorner(n, n) = d;
  scale.bottomRightCorner(n, n) = d.inverse().transpose();
  return upper * scale * lower;
}

inline Matrix conjugate(const Matrix& s, const Matrix& w) {
  return s * w * s.inverse();
}

struct RandomElliptic {
  Matrix w;
  std::vector<double> angles;  // sorted
};

// S exp(sum theta_k J_k) S^{-1} with angles uniform in (margin, pi - margin).
inline RandomElliptic random_elliptic(std::mt19937_64& rng, int n, double margin = 0.05) {
  std::uniform_real_distribution<double> angle(margin, std::numbers::pi - margin);
  std::vector<double> angles(static_cast<std::size_t>(n));
  for (auto& a : angles) a = angle(rng);
  const Matrix w = conjugate(random_symplectic(rng, n), block_rotation(angles));
  std::sort(angles.begin(), angles.end());
  return {w, angles};
}

// Omega^{-1}(A^T A + eps I) with A standard normal.
inline Matrix random_interior(std::mt19937_64& rng, int n, double eps = 1e-3) {
  std::normal_distribution<double> normal;
  Matrix a(2 * n, 2 * n);
  for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
  const Matrix s = a.transpose() * a + eps * Matrix::Identity(2 * n, 2 * n);
  return -omega_matrix(n) * s;
}

}  // namespace sympcausal::testing

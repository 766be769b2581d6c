#pragma once

// Conventions shared by every module.
//
// Coordinates on R^{2n} are ordered (x_1..x_n, y_1..y_n) and
//
//   Omega = [[0, I], [-I, 0]],   omega(v, w) = v^T Omega w,
//   J     = [[0, -I], [I, 0]],   Omega J = I.
//
// Tangent vectors A at a group element W are right-trivialized: X = A W^{-1}.

#include <Eigen/Dense>

#include <string_view>

#include "sympcausal/error.hpp"

namespace sympcausal {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;
using Complex = std::complex<double>;

struct Tolerances {
  double symplectic = 1e-9;   // relative to ||W||_F^2
  double hamiltonian = 1e-9;  // relative to ||X||_F
  double cone = 1e-9;         // eigenvalue band, relative to max(1, ||X||_F)

  static Tolerances uniform(double tol) { return {tol, tol, tol}; }
};

Matrix omega_matrix(int n);

// Half-dimension of a square even-sized matrix; throws OddDimension or
// DimensionMismatch otherwise.
int half_dimension(const Matrix& m);

// A 2n x 2n real matrix W with W^T Omega W = Omega.
class SympMatrix {
 public:
  // Validates the symplectic relation; throws NotSymplectic.
  explicit SympMatrix(Matrix m, double tol = Tolerances{}.symplectic);

  static SympMatrix identity(int n);
  // Skips validation; for matrices symplectic by construction.
  static SympMatrix unchecked(Matrix m);

  int n() const { return static_cast<int>(m_.rows() / 2); }
  const Matrix& matrix() const { return m_; }

  // W^{-1} = -Omega W^T Omega.
  SympMatrix inverse() const;

  friend SympMatrix operator*(const SympMatrix& a, const SympMatrix& b) {
    return SympMatrix::unchecked(a.m_ * b.m_);
  }

 private:
  struct Unchecked {};
  SympMatrix(Matrix m, Unchecked) : m_(std::move(m)) {}

  Matrix m_;
};

// A 2n x 2n real matrix X in sp(2n), i.e. Omega X symmetric.
class HamElement {
 public:
  // Validates membership in sp(2n); throws NotHamiltonian.
  explicit HamElement(Matrix m, double tol = Tolerances{}.hamiltonian);

  static HamElement unchecked(Matrix m);
  // X = Omega^{-1} S for a symmetric S.
  static HamElement from_symmetric(const Matrix& s);

  int n() const { return static_cast<int>(m_.rows() / 2); }
  const Matrix& matrix() const { return m_; }

  // (Omega X + (Omega X)^T) / 2.
  Matrix symmetric_form() const;

  friend HamElement operator*(double s, const HamElement& x) {
    return HamElement::unchecked(s * x.m_);
  }
  friend HamElement operator-(const HamElement& x) {
    return HamElement::unchecked(-x.m_);
  }

 private:
  struct Unchecked {};
  HamElement(Matrix m, Unchecked) : m_(std::move(m)) {}

  Matrix m_;
};

HamElement standard_j(int n);

enum class ConeStatus {
  Interior,
  Boundary,
  Outside,
  NegativeInterior,
  NegativeBoundary,
  Zero,
};

std::string_view to_string(ConeStatus status);
ConeStatus mirror(ConeStatus status);
inline bool is_causal(ConeStatus s) {
  return s == ConeStatus::Interior || s == ConeStatus::Boundary;
}

struct SymplecticCheck {
  bool symplectic = false;
  double residual = 0.0;           // ||M^T Omega M - Omega||_F
  double relative_residual = 0.0;  // residual / ||M||_F^2
};

SymplecticCheck is_symplectic(const Matrix& m,
                              double tol = Tolerances{}.symplectic);

// ||Omega X - (Omega X)^T||_F.
double hamiltonian_asymmetry(const Matrix& x);

ConeStatus cone_status(const Matrix& x, const Tolerances& tol = {});
ConeStatus cone_status(const HamElement& x, const Tolerances& tol = {});

// Classifies A as a tangent vector at W via cone_status(A W^{-1}).
ConeStatus cone_membership_tangent(const SympMatrix& w, const Matrix& a,
                                   const Tolerances& tol = {});

// Matrix exponential (Pade scaling and squaring).
Matrix expm(const Matrix& x);

// exp(t X) as a group element.
SympMatrix exp_ham(const HamElement& x, double t = 1.0);

// Spectral radius of the imaginary parts, max |Im lambda| over sigma(X).
double max_abs_imag_eigenvalue(const Matrix& x);

}  // namespace sympcausal

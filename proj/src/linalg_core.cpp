#include "sympcausal/linalg_core.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <algorithm>
#include <cmath>
#include <string>

namespace sympcausal {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::OddDimension: return "OddDimension";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NotSymplectic: return "NotSymplectic";
    case ErrorKind::NotHamiltonian: return "NotHamiltonian";
    case ErrorKind::OutsideCone: return "OutsideCone";
    case ErrorKind::SignatureDegenerate: return "SignatureDegenerate";
    case ErrorKind::NotElliptic: return "NotElliptic";
    case ErrorKind::NotConnectable: return "NotConnectable";
    case ErrorKind::NotCausal: return "NotCausal";
    case ErrorKind::ZeroDirection: return "ZeroDirection";
    case ErrorKind::DriftExceeded: return "DriftExceeded";
    case ErrorKind::RegionExit: return "RegionExit";
    case ErrorKind::MatchingAmbiguous: return "MatchingAmbiguous";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

std::string_view to_string(ConeStatus status) {
  switch (status) {
    case ConeStatus::Interior: return "interior";
    case ConeStatus::Boundary: return "boundary";
    case ConeStatus::Outside: return "outside";
    case ConeStatus::NegativeInterior: return "negative-interior";
    case ConeStatus::NegativeBoundary: return "negative-boundary";
    case ConeStatus::Zero: return "zero";
  }
  return "unknown";
}

ConeStatus mirror(ConeStatus status) {
  switch (status) {
    case ConeStatus::Interior: return ConeStatus::NegativeInterior;
    case ConeStatus::Boundary: return ConeStatus::NegativeBoundary;
    case ConeStatus::NegativeInterior: return ConeStatus::Interior;
    case ConeStatus::NegativeBoundary: return ConeStatus::Boundary;
    case ConeStatus::Outside: return ConeStatus::Outside;
    case ConeStatus::Zero: return ConeStatus::Zero;
  }
  return status;
}

Matrix omega_matrix(int n) {
  if (n < 1) {
    throw Error(ErrorKind::InvalidArgument, "half-dimension n must be >= 1");
  }
  Matrix om = Matrix::Zero(2 * n, 2 * n);
  om.topRightCorner(n, n).setIdentity();
  om.bottomLeftCorner(n, n) = -Matrix::Identity(n, n);
  return om;
}

int half_dimension(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "matrix must be square, got " + std::to_string(m.rows()) +
                    "x" + std::to_string(m.cols()));
  }
  if (m.rows() == 0 || m.rows() % 2 != 0) {
    throw Error(ErrorKind::OddDimension,
                "matrix dimension must be even and positive, got " +
                    std::to_string(m.rows()));
  }
  return static_cast<int>(m.rows() / 2);
}

SymplecticCheck is_symplectic(const Matrix& m, double tol) {
  const int n = half_dimension(m);
  const Matrix om = omega_matrix(n);
  SymplecticCheck check;
  check.residual = (m.transpose() * om * m - om).norm();
  const double scale = m.squaredNorm();
  check.relative_residual = scale > 0.0 ? check.residual / scale : check.residual;
  check.symplectic = check.residual <= tol * scale;
  return check;
}

SympMatrix::SympMatrix(Matrix m, double tol) : m_(std::move(m)) {
  const SymplecticCheck check = is_symplectic(m_, tol);
  if (!check.symplectic) {
    throw Error(ErrorKind::NotSymplectic,
                "matrix is not symplectic: ||W^T Omega W - Omega||_F = " +
                    std::to_string(check.residual));
  }
}

SympMatrix SympMatrix::identity(int n) {
  return SympMatrix(Matrix::Identity(2 * n, 2 * n), Unchecked{});
}

SympMatrix SympMatrix::unchecked(Matrix m) {
  half_dimension(m);
  return SympMatrix(std::move(m), Unchecked{});
}

SympMatrix SympMatrix::inverse() const {
  const Matrix om = omega_matrix(n());
  return SympMatrix(-om * m_.transpose() * om, Unchecked{});
}

double hamiltonian_asymmetry(const Matrix& x) {
  const Matrix s = omega_matrix(half_dimension(x)) * x;
  return (s - s.transpose()).norm();
}

HamElement::HamElement(Matrix m, double tol) : m_(std::move(m)) {
  const double asym = hamiltonian_asymmetry(m_);
  if (asym > tol * m_.norm()) {
    throw Error(ErrorKind::NotHamiltonian,
                "matrix is not in sp(2n): ||Omega X - (Omega X)^T||_F = " +
                    std::to_string(asym));
  }
}

HamElement HamElement::unchecked(Matrix m) {
  half_dimension(m);
  return HamElement(std::move(m), Unchecked{});
}

HamElement HamElement::from_symmetric(const Matrix& s) {
  const Matrix sym = 0.5 * (s + s.transpose());
  // Omega^{-1} = -Omega.
  return HamElement(-omega_matrix(half_dimension(s)) * sym, Unchecked{});
}

Matrix HamElement::symmetric_form() const {
  const Matrix s = omega_matrix(n()) * m_;
  return 0.5 * (s + s.transpose());
}

HamElement standard_j(int n) {
  return HamElement::unchecked(-omega_matrix(n));
}

ConeStatus cone_status(const Matrix& x, const Tolerances& tol) {
  const int n = half_dimension(x);
  const double norm = x.norm();
  const double asym = hamiltonian_asymmetry(x);
  if (asym > tol.hamiltonian * norm) {
    throw Error(ErrorKind::NotHamiltonian,
                "X is not in sp(2n) (A W^{-1} must be Hamiltonian): "
                "||Omega X - (Omega X)^T||_F = " + std::to_string(asym));
  }
  if (norm <= tol.cone) return ConeStatus::Zero;

  const Matrix s0 = omega_matrix(n) * x;
  const Matrix s = 0.5 * (s0 + s0.transpose());
  const Vector ev = Eigen::SelfAdjointEigenSolver<Matrix>(s, Eigen::EigenvaluesOnly)
                        .eigenvalues();
  const double band = tol.cone * std::max(1.0, norm);
  const double lo = ev.minCoeff();
  const double hi = ev.maxCoeff();

  if (lo > band) return ConeStatus::Interior;
  if (hi < -band) return ConeStatus::NegativeInterior;
  if (lo >= -band && hi <= band) return ConeStatus::Zero;
  if (lo >= -band) return ConeStatus::Boundary;
  if (hi <= band) return ConeStatus::NegativeBoundary;
  return ConeStatus::Outside;
}

ConeStatus cone_status(const HamElement& x, const Tolerances& tol) {
  return cone_status(x.matrix(), tol);
}

ConeStatus cone_membership_tangent(const SympMatrix& w, const Matrix& a,
                                   const Tolerances& tol) {
  if (a.rows() != w.matrix().rows() || a.cols() != w.matrix().cols()) {
    throw Error(ErrorKind::DimensionMismatch,
                "tangent and base point must have the same shape");
  }
  return cone_status(a * w.inverse().matrix(), tol);
}

Matrix expm(const Matrix& x) { return x.exp(); }

SympMatrix exp_ham(const HamElement& x, double t) {
  return SympMatrix::unchecked((t * x.matrix()).exp());
}

double max_abs_imag_eigenvalue(const Matrix& x) {
  const auto ev = Eigen::EigenSolver<Matrix>(x, false).eigenvalues();
  return ev.imag().cwiseAbs().maxCoeff();
}

}  // namespace sympcausal

#include "sympcausal/elliptic.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace sympcausal {

namespace {

constexpr double kPi = std::numbers::pi;

[[noreturn]] void throw_not_elliptic(EllipticDiagnosis d) {
  throw Error(ErrorKind::NotElliptic,
              std::string("matrix is not positively elliptic: ") +
                  std::string(describe(d)));
}

void require_elliptic(const KreinSpectrum& spec) {
  const EllipticCheck check = is_positively_elliptic(spec);
  if (!check.elliptic) throw_not_elliptic(check.diagnosis);
}

// Rotates v so that its largest entry (first on ties) is real positive.
void normalize_phase(CVector& v) {
  const double top = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (std::abs(v(i)) >= top * (1.0 - 1e-9)) {
      v *= std::conj(v(i)) / std::abs(v(i));
      return;
    }
  }
}

}  // namespace

std::string_view describe(EllipticDiagnosis d) {
  switch (d) {
    case EllipticDiagnosis::Elliptic: return "positively elliptic";
    case EllipticDiagnosis::OffCircle: return "off-circle eigenvalue";
    case EllipticDiagnosis::EigenvalueOne: return "eigenvalue +1";
    case EllipticDiagnosis::EigenvalueMinusOne: return "eigenvalue -1";
    case EllipticDiagnosis::Boundary: return "boundary";
    case EllipticDiagnosis::IndefiniteKrein: return "indefinite Krein signature";
  }
  return "unknown";
}

EllipticCheck is_positively_elliptic(const KreinSpectrum& spec) {
  const auto& cs = spec.clusters;
  auto any = [&](auto pred) { return std::any_of(cs.begin(), cs.end(), pred); };

  if (any([](const EigenCluster& c) { return c.location == EigenLocation::OffCircle; })) {
    return {false, EllipticDiagnosis::OffCircle};
  }
  if (any([](const EigenCluster& c) { return c.location == EigenLocation::PlusOne; })) {
    return {false, EllipticDiagnosis::EigenvalueOne};
  }
  if (any([](const EigenCluster& c) { return c.location == EigenLocation::MinusOne; })) {
    return {false, EllipticDiagnosis::EigenvalueMinusOne};
  }
  if (any([](const EigenCluster& c) { return c.degenerate; })) {
    return {false, EllipticDiagnosis::Boundary};
  }
  for (const auto& c : cs) {
    const KreinSignature want = c.value.imag() > 0.0 ? KreinSignature{c.alg_mult, 0}
                                                     : KreinSignature{0, c.alg_mult};
    if (*c.krein_signature != want) return {false, EllipticDiagnosis::IndefiniteKrein};
  }
  return {true, EllipticDiagnosis::Elliptic};
}

EllipticCheck is_positively_elliptic(const SympMatrix& w, const SpectrumTolerances& tol) {
  return is_positively_elliptic(analyze_spectrum(w.matrix(), tol));
}

std::vector<double> elliptic_angles(const SympMatrix& w, const SpectrumTolerances& tol) {
  const KreinSpectrum spec = analyze_spectrum(w.matrix(), tol);
  require_elliptic(spec);
  std::vector<double> angles;
  for (const auto& c : spec.clusters) {
    if (c.value.imag() <= 0.0) continue;
    for (Complex lambda : c.eigenvalues) angles.push_back(std::arg(lambda));
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

std::vector<double> elliptic_closure_angles(const SympMatrix& w,
                                            const SpectrumTolerances& tol) {
  const KreinSpectrum spec = analyze_spectrum(w.matrix(), tol);
  std::vector<double> angles;
  for (const auto& c : spec.clusters) {
    switch (c.location) {
      case EigenLocation::OffCircle:
        throw_not_elliptic(EllipticDiagnosis::OffCircle);
      case EigenLocation::PlusOne:
        angles.insert(angles.end(), static_cast<std::size_t>(c.alg_mult / 2), 0.0);
        break;
      case EigenLocation::MinusOne:
        angles.insert(angles.end(), static_cast<std::size_t>(c.alg_mult / 2), kPi);
        break;
      case EigenLocation::UnitCircleNonReal: {
        if (c.degenerate) throw_not_elliptic(EllipticDiagnosis::Boundary);
        const bool upper = c.value.imag() > 0.0;
        const KreinSignature want = upper ? KreinSignature{c.alg_mult, 0}
                                          : KreinSignature{0, c.alg_mult};
        if (*c.krein_signature != want) throw_not_elliptic(EllipticDiagnosis::IndefiniteKrein);
        if (upper) {
          for (Complex lambda : c.eigenvalues) angles.push_back(std::arg(lambda));
        }
        break;
      }
    }
  }
  std::sort(angles.begin(), angles.end());
  return angles;
}

Matrix EllipticSplitting::plane_structure(int k) const {
  const int nn = n();
  Matrix block = Matrix::Zero(2 * nn, 2 * nn);
  block(k, nn + k) = -1.0;
  block(nn + k, k) = 1.0;
  const Matrix om = omega_matrix(nn);
  return basis * block * (-om * basis.transpose() * om);
}

Matrix EllipticSplitting::normal_form_log() const {
  const int nn = n();
  Matrix d = Matrix::Zero(2 * nn, 2 * nn);
  for (int k = 0; k < nn; ++k) {
    d(k, nn + k) = -angles[static_cast<std::size_t>(k)];
    d(nn + k, k) = angles[static_cast<std::size_t>(k)];
  }
  return d;
}

EllipticSplitting elliptic_splitting(const SympMatrix& w, const SpectrumTolerances& tol) {
  const KreinSpectrum spec = analyze_spectrum(w.matrix(), tol);
  require_elliptic(spec);
  const int n = spec.n;
  const CMatrix wc = w.matrix().cast<Complex>();

  struct Plane {
    double angle;
    CVector v;  // kappa(v, v) = 1, W v = e^{i angle} v
  };
  std::vector<Plane> planes;

  for (const auto& c : spec.clusters) {
    if (c.value.imag() <= 0.0) continue;
    const CMatrix& u = c.basis;
    // kappa-orthonormalize: need C with C^T K conj(C) = I, i.e.
    // C^H conj(K) C = I, so C = L^{-H} for conj(K) = L L^H.
    const CMatrix kc = krein_gram(u).conjugate();
    Eigen::LLT<CMatrix> llt(kc);
    const CMatrix c_mat = llt.matrixU().solve(CMatrix::Identity(c.alg_mult, c.alg_mult));
    const CMatrix v = u * c_mat;
    // W restricted to the cluster; unitary in the kappa-orthonormal basis.
    const CMatrix m_u = u.adjoint() * wc * u;
    const CMatrix m_v = c_mat.inverse() * m_u * c_mat;
    Eigen::ComplexSchur<CMatrix> schur(m_v);
    const CMatrix vz = v * schur.matrixU();
    for (Eigen::Index j = 0; j < vz.cols(); ++j) {
      CVector col = vz.col(j);
      normalize_phase(col);
      planes.push_back({std::arg(schur.matrixT()(j, j)), std::move(col)});
    }
  }
  std::stable_sort(planes.begin(), planes.end(),
                   [](const Plane& a, const Plane& b) { return a.angle < b.angle; });

  EllipticSplitting out;
  out.basis = Matrix::Zero(2 * n, 2 * n);
  const double s = std::sqrt(2.0);
  for (int k = 0; k < n; ++k) {
    const auto& p = planes[static_cast<std::size_t>(k)];
    out.angles.push_back(p.angle);
    out.basis.col(k) = s * p.v.real();
    out.basis.col(n + k) = -s * p.v.imag();
  }
  return out;
}

EllipticLog log_elliptic(const SympMatrix& w, const SpectrumTolerances& tol) {
  const EllipticSplitting split = elliptic_splitting(w, tol);
  const int n = split.n();
  const Matrix om = omega_matrix(n);
  const Matrix b_inv = -om * split.basis.transpose() * om;
  const Matrix x = split.basis * split.normal_form_log() * b_inv;
  // Project Omega X onto its symmetric part so X lands exactly in sp(2n).
  const Matrix s = om * x;
  const HamElement clean = HamElement::from_symmetric(s);

  const double top = split.angles.back();
  return EllipticLog{clean, top, kPi - top < 1e-6, split.angles};
}

double tau_from_angles(const std::vector<double>& angles) {
  double sum = 0.0;
  for (double theta : angles) sum += std::log(theta) - std::log(kPi - theta);
  return sum;
}

double tau(const SympMatrix& w, const SpectrumTolerances& tol) {
  return tau_from_angles(elliptic_angles(w, tol));
}

double mu_elliptic(const SympMatrix& w, const SpectrumTolerances& tol) {
  const auto angles = elliptic_angles(w, tol);
  return std::accumulate(angles.begin(), angles.end(), 0.0) / (2.0 * kPi);
}

SympMatrix minus_inverse(const SympMatrix& w) {
  return SympMatrix::unchecked(-w.inverse().matrix());
}

}  // namespace sympcausal

#include "sympcausal/causal.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace sympcausal {

std::string_view to_string(ExitReason r) {
  switch (r) {
    case ExitReason::EigenvalueMinusOne: return "eigenvalue -1";
    case ExitReason::EigenvalueOne: return "eigenvalue +1";
    case ExitReason::KreinDegeneracy: return "Krein degeneracy";
    case ExitReason::OffCircle: return "off-circle eigenvalue";
  }
  return "unknown";
}

double finsler_G(const HamElement& x, const Tolerances& tol) {
  const ConeStatus status = cone_status(x, tol);
  if (status == ConeStatus::Boundary) return 0.0;
  if (status != ConeStatus::Interior) {
    throw Error(ErrorKind::OutsideCone,
                "G is defined on the closed cone only; X is " + std::string(to_string(status)));
  }
  // det X = det(Omega X) since det Omega = 1.
  const Eigen::LLT<Matrix> llt(x.symmetric_form());
  double log_det_half = 0.0;
  for (Eigen::Index i = 0; i < llt.matrixLLT().rows(); ++i) {
    log_det_half += std::log(llt.matrixLLT()(i, i));
  }
  return std::exp(log_det_half / x.n());
}

SympMatrix geodesic(const HamElement& x, const SympMatrix& w0, double t) {
  if (x.matrix().rows() != w0.matrix().rows()) {
    throw Error(ErrorKind::DimensionMismatch, "direction and base point differ in size");
  }
  return exp_ham(x, t) * w0;
}

double dist_formula(const SympMatrix& w, const SpectrumTolerances& tol) {
  const auto angles = elliptic_closure_angles(w, tol);
  double log_sum = 0.0;
  for (double theta : angles) {
    if (theta <= 0.0) return 0.0;
    log_sum += std::log(theta);
  }
  return std::exp(log_sum / static_cast<double>(angles.size()));
}

double path_length(const CausalPath& path, const Tolerances& tol) {
  double length = 0.0;
  for (std::size_t i = 0; i < path.tangents.size(); ++i) {
    double g = 0.0;
    try {
      g = finsler_G(path.tangents[i], tol);
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::OutsideCone) throw;
      throw Error(ErrorKind::OutsideCone,
                  "path tangent at step " + std::to_string(i) + " is outside the cone");
    }
    length += g * (path.times[i + 1] - path.times[i]);
  }
  return length;
}

ConnectResult connect(const SympMatrix& w0, const SympMatrix& w1, const SpectrumTolerances& tol) {
  const SympMatrix q = w1 * w0.inverse();
  const EllipticCheck check = is_positively_elliptic(q, tol);
  if (!check.elliptic) {
    throw Error(ErrorKind::NotConnectable,
                "W1 W0^{-1} is not positively elliptic (" + std::string(describe(check.diagnosis)) +
                    ")");
  }
  const EllipticLog lg = log_elliptic(q, tol);
  const ConeStatus status = cone_status(lg.x);
  if (!is_causal(status)) {
    throw Error(ErrorKind::NotCausal,
                "connecting direction is " + std::string(to_string(status)));
  }
  ConnectResult out{lg.x, status};
  out.endpoint_residual =
      (geodesic(lg.x, w0, 1.0).matrix() - w1.matrix()).norm() / w1.matrix().norm();
  for (int k = 1; k <= kConnectSamples; ++k) {
    const double s = static_cast<double>(k) / (kConnectSamples + 1);
    ++out.samples;
    if (is_positively_elliptic(geodesic(lg.x, w0, s), tol).elliptic) ++out.samples_elliptic;
  }
  return out;
}

namespace {

// Tighter +/-1 band than the membership default so that bisection can
// resolve the exit to well below kExitTolerance on semisimple crossings.
SpectrumTolerances exit_search_tolerances() {
  SpectrumTolerances tol;
  tol.real = 1e-12;
  return tol;
}

ExitBound search_exit(const SympMatrix& w0, const Matrix& dir, double t_max) {
  const SpectrumTolerances tol = exit_search_tolerances();
  auto at = [&](double t) { return SympMatrix::unchecked(expm(t * dir) * w0.matrix()); };
  auto inside = [&](double t) { return is_positively_elliptic(at(t), tol).elliptic; };

  // Angles move at a rate comparable to ||X||; start below a quarter turn.
  double lo = 0.0;
  double hi = std::min(1.0, 0.5 / dir.norm());
  while (inside(hi)) {
    lo = hi;
    if (hi >= t_max) return ExitBound{t_max, false, std::nullopt};
    hi = std::min(2.0 * hi, t_max);
  }
  // Guard against an exit and re-entry inside one doubling bracket.
  constexpr int kScan = 16;
  const double a = lo, width = hi - lo;
  for (int k = 1; k < kScan; ++k) {
    const double t = a + width * k / kScan;
    if (!inside(t)) {
      hi = t;
      break;
    }
    lo = t;
  }
  while (hi - lo > 0.01 * kExitTolerance) {
    const double mid = 0.5 * (lo + hi);
    (inside(mid) ? lo : hi) = mid;
  }

  const double c = 0.5 * (lo + hi);
  ExitBound bound{c, true, std::nullopt};
  const auto ev = Eigen::EigenSolver<Matrix>(at(c).matrix(), false).eigenvalues();
  const double to_minus = (ev.array() + 1.0).abs().minCoeff();
  const double to_plus = (ev.array() - 1.0).abs().minCoeff();
  constexpr double kNear = 1e-3;
  if (std::min(to_minus, to_plus) < kNear) {
    bound.reason = to_minus <= to_plus ? ExitReason::EigenvalueMinusOne : ExitReason::EigenvalueOne;
  } else {
    const EllipticCheck past = is_positively_elliptic(at(hi), tol);
    bound.reason = past.diagnosis == EllipticDiagnosis::OffCircle ? ExitReason::OffCircle
                                                                  : ExitReason::KreinDegeneracy;
  }
  return bound;
}

}  // namespace

ExitTimes exit_times(const SympMatrix& w0, const HamElement& x, double t_max,
                     const Tolerances& tol) {
  if (!(t_max > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "t_max must be positive");
  }
  const EllipticCheck start = is_positively_elliptic(w0);
  if (!start.elliptic) {
    throw Error(ErrorKind::NotElliptic,
                "exit_times needs an elliptic base point (" +
                    std::string(describe(start.diagnosis)) + ")");
  }
  const ConeStatus status = cone_status(x, tol);
  if (status == ConeStatus::Zero) {
    throw Error(ErrorKind::ZeroDirection, "exit_times needs a nonzero direction");
  }
  if (!is_causal(status)) {
    throw Error(ErrorKind::OutsideCone,
                "exit_times needs a direction in the closed cone; X is " +
                    std::string(to_string(status)));
  }
  ExitTimes out;
  out.forward = search_exit(w0, x.matrix(), t_max);
  out.backward = search_exit(w0, -x.matrix(), t_max);
  if (!out.forward.finite || !out.backward.finite) {
    out.warning = "no exit found before t_max = " + std::to_string(t_max) +
                  "; exits are finite for nonzero directions, so increase t_max";
  }
  return out;
}

}  // namespace sympcausal

#pragma once

// The positively elliptic region: symplectic W whose eigenvalues all lie on
// the unit circle minus {+1, -1}, with the Krein form positive definite on
// exactly the eigenspaces of eigenvalues with positive imaginary part.
//
// Every such W splits R^{2n} into symplectic planes on which it acts as
// exp(theta_k J_k), 0 < theta_1 <= ... <= theta_n < pi. The angles drive the
// time function, the Maslov value, the logarithm and the distance formula.

#include <string_view>
#include <vector>

#include "sympcausal/krein.hpp"

namespace sympcausal {

enum class EllipticDiagnosis {
  Elliptic,
  OffCircle,
  EigenvalueOne,
  EigenvalueMinusOne,
  Boundary,  // Krein form degenerate on some unit-circle cluster
  IndefiniteKrein,
};

// Human-readable reason, e.g. "off-circle eigenvalue".
std::string_view describe(EllipticDiagnosis d);

struct EllipticCheck {
  bool elliptic = false;
  EllipticDiagnosis diagnosis = EllipticDiagnosis::OffCircle;
};

EllipticCheck is_positively_elliptic(const SympMatrix& w,
                                     const SpectrumTolerances& tol = {});
EllipticCheck is_positively_elliptic(const KreinSpectrum& spec);

struct EllipticSplitting {
  std::vector<double> angles;  // ascending, each in (0, pi)
  // Symplectic; columns k and n+k span the k-th plane, and B^{-1} W B has
  // the block exp(theta_k J) on coordinates (x_k, y_k).
  Matrix basis;

  int n() const { return static_cast<int>(angles.size()); }
  // The compatible complex structure of plane k, as a 2n x 2n matrix acting
  // on R^{2n} (zero on the other planes).
  Matrix plane_structure(int k) const;
  // blockdiag(theta_k J) in the adapted coordinates.
  Matrix normal_form_log() const;
};

EllipticSplitting elliptic_splitting(const SympMatrix& w,
                                     const SpectrumTolerances& tol = {});

// Sorted rotation angles of an elliptic W; cheaper than the full splitting.
std::vector<double> elliptic_angles(const SympMatrix& w,
                                    const SpectrumTolerances& tol = {});

// Angles in [0, pi] for W in the closure of the region: eigenvalues +1 and
// -1 contribute half their multiplicity as angles 0 and pi respectively.
std::vector<double> elliptic_closure_angles(const SympMatrix& w,
                                            const SpectrumTolerances& tol = {});

struct EllipticLog {
  HamElement x;
  double spectral_bound = 0.0;  // max |Im sigma(X)| = theta_n
  bool ill_conditioned = false;  // some theta_k within 1e-6 of pi
  std::vector<double> angles;
};

// The unique logarithm in sp^+(2n) with spectrum in i(-pi, pi).
EllipticLog log_elliptic(const SympMatrix& w, const SpectrumTolerances& tol = {});

// sum_i ln(theta_i) - ln(pi - theta_i).
double tau(const SympMatrix& w, const SpectrumTolerances& tol = {});
double tau_from_angles(const std::vector<double>& angles);

// (theta_1 + ... + theta_n) / (2 pi).
double mu_elliptic(const SympMatrix& w, const SpectrumTolerances& tol = {});

// -W^{-1}.
SympMatrix minus_inverse(const SympMatrix& w);

}  // namespace sympcausal

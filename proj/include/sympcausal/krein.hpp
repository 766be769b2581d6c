#pragma once

// Krein-form spectral analysis of symplectic matrices.
//
// The Krein form is kappa(v, w) = -i v^T Omega conj(w): linear in the first
// slot, conjugate-linear in the second. With this convention the +i
// eigenvector of J has kappa(v, v) = +1, so exp(theta J) is positively
// elliptic for theta in (0, pi).

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "sympcausal/linalg_core.hpp"

namespace sympcausal {

struct SpectrumTolerances {
  double cluster_gap = 1e-6;  // relative gap below which eigenvalues merge
  double circle = 1e-8;       // band on ||lambda| - 1|
  double real = 1e-8;         // band on |lambda -/+ 1| and on |Im lambda|
  double signature = 1e-8;    // Gram eigenvalue band, relative to ||K||
};

enum class EigenLocation { UnitCircleNonReal, PlusOne, MinusOne, OffCircle };

std::string_view to_string(EigenLocation loc);

struct KreinSignature {
  int p = 0;
  int q = 0;
  friend bool operator==(const KreinSignature&, const KreinSignature&) = default;
};

struct EigenCluster {
  Complex value;  // mean of the member eigenvalues
  std::vector<Complex> eigenvalues;
  int alg_mult = 0;
  EigenLocation location = EigenLocation::OffCircle;
  // Present iff the cluster lies on the unit circle (including +/-1).
  std::optional<KreinSignature> krein_signature;
  // Some Gram eigenvalue fell inside the signature band.
  bool degenerate = false;
  // Orthonormal basis of the invariant subspace (2n x alg_mult).
  CMatrix basis;

  bool on_circle() const { return location != EigenLocation::OffCircle; }
};

struct KreinSpectrum {
  int n = 0;
  std::vector<EigenCluster> clusters;

  bool any_degenerate() const;
};

// K_{jk} = kappa(u_j, u_k) = -i u_j^T Omega conj(u_k) for the columns u_j.
CMatrix krein_gram(const CMatrix& vectors);
CMatrix krein_gram(std::span<const CVector> vectors);

// Full analysis; degenerate on-circle clusters are flagged, never thrown.
KreinSpectrum analyze_spectrum(const Matrix& w, const SpectrumTolerances& tol = {});

// Contract form: throws SignatureDegenerate when any on-circle cluster has a
// Gram eigenvalue inside the signature band.
KreinSpectrum krein_spectrum(const SympMatrix& w, const SpectrumTolerances& tol = {});

// (-1)^m prod lambda^{p(lambda)} over the non-real unit-circle clusters,
// where 2m is the multiplicity of negative real eigenvalues.
Complex nu(const SympMatrix& w, const SpectrumTolerances& tol = {});

namespace detail {

// Reorders a complex Schur form so that the diagonal entries flagged in
// `select` come first. `t` stays upper triangular and Q T Q^H is preserved.
void reorder_schur(CMatrix& t, CMatrix& q, std::vector<bool> select);

}  // namespace detail

}  // namespace sympcausal

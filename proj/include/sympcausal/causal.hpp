#pragma once

// Lorentz-Finsler geometry of the cone structure: the Lagrangian
// G(X) = det(X)^{1/2n}, geodesics exp(tX) W, lengths of discrete causal
// paths, geodesic connection inside the elliptic region and the parameter
// interval on which a geodesic stays in the region.

#include <optional>
#include <string>
#include <string_view>

#include "sympcausal/causal_path.hpp"
#include "sympcausal/elliptic.hpp"

namespace sympcausal {

// det(X)^{1/(2n)} on the interior, 0 on the boundary; throws OutsideCone
// elsewhere.
double finsler_G(const HamElement& x, const Tolerances& tol = {});

// exp(tX) W0.
SympMatrix geodesic(const HamElement& x, const SympMatrix& w0, double t);

// Geometric mean of the rotation angles, (theta_1 ... theta_n)^{1/n}; also
// defined on the closure of the elliptic region.
double dist_formula(const SympMatrix& w, const SpectrumTolerances& tol = {});

// Left Riemann sum of G along the grid; throws OutsideCone naming the
// offending step.
double path_length(const CausalPath& path, const Tolerances& tol = {});

struct ConnectResult {
  HamElement x;  // log(W1 W0^{-1})
  ConeStatus status;
  double endpoint_residual = 0.0;  // ||exp(X) W0 - W1||_F / ||W1||_F
  int samples = 0;                 // interior samples checked
  int samples_elliptic = 0;        // of which positively elliptic
};

inline constexpr int kConnectSamples = 64;

// Geodesic connection W0 -> W1 inside the elliptic region. Throws
// NotConnectable if W1 W0^{-1} is not positively elliptic and NotCausal if
// the connecting direction is not in the closed cone.
ConnectResult connect(const SympMatrix& w0, const SympMatrix& w1,
                      const SpectrumTolerances& tol = {});

enum class ExitReason { EigenvalueMinusOne, EigenvalueOne, KreinDegeneracy, OffCircle };

std::string_view to_string(ExitReason r);

struct ExitBound {
  double time = 0.0;
  bool finite = false;  // false: still elliptic at t_max
  std::optional<ExitReason> reason;
};

struct ExitTimes {
  ExitBound backward;  // c1: exp(-t X) W0 leaves the region at t = c1
  ExitBound forward;   // c2: exp(t X) W0 leaves the region at t = c2
  std::string warning;

  double c1() const { return backward.time; }
  double c2() const { return forward.time; }
};

inline constexpr double kExitTolerance = 1e-8;
inline constexpr double kDefaultTMax = 1e3;

// Parameter interval (-c1, c2) on which exp(tX) W0 stays positively elliptic,
// located by doubling and bisection on the membership predicate.
ExitTimes exit_times(const SympMatrix& w0, const HamElement& x,
                     double t_max = kDefaultTMax, const Tolerances& tol = {});

}  // namespace sympcausal

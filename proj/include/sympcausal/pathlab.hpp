#pragma once

// Seeded Monte-Carlo machinery: random cone elements, symplectic and elliptic
// matrices, piecewise-exponential causal paths, eigenphase tracking, the
// Maslov lift along paths, and the property harness behind `suite`.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "sympcausal/causal.hpp"

namespace sympcausal {

// splitmix64 finalizer applied to seed + golden-ratio * index.
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

// Deterministic generator: mt19937_64 with portable uniform/normal
// transforms (Box-Muller), so streams agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform();  // [0, 1)
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();
  Matrix normal_matrix(Eigen::Index rows, Eigen::Index cols);

 private:
  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

inline constexpr double kConeEpsilon = 1e-3;

// Omega^{-1} (A^T A + eps I) * scale with A standard normal.
HamElement random_cone_element(std::uint64_t seed, int n, double scale);
HamElement random_cone_element(Rng& rng, int n, double scale);

// exp(H) with H = Omega^{-1} sym(G) * spread, G standard normal.
SympMatrix random_symplectic(Rng& rng, int n, double spread = 0.3);

// S exp(sum theta_k J_k) S^{-1}, angles uniform in (margin, pi - margin).
SympMatrix random_elliptic(Rng& rng, int n, double margin = 0.05,
                           double spread = 0.3);

struct PathOptions {
  int steps = 50;
  double step_size = 0.02;
  // Reject steps that leave the elliptic region; redraw with half the step.
  bool confine = false;
  int max_halvings = 20;
  // Keep each drawn tangent for this many consecutive steps.
  int hold = 1;
  double drift_tol = 1e-7;
};

// Tangents are random cone elements normalized to unit Frobenius norm.
CausalPath random_causal_path(std::uint64_t seed, int n, const SympMatrix& start,
                              const PathOptions& opts = {});
CausalPath random_causal_path(Rng& rng, int n, const SympMatrix& start,
                              const PathOptions& opts = {});

struct LabeledPhase {
  double phase = 0.0;  // continuous argument
  int label = +1;      // Krein sign: +1 or -1
};

struct PhaseCrossing {
  std::size_t index = 0;  // refined grid index where the crossing is seen
  int eigenvalue = 1;     // +1 or -1
  int label = +1;
};

struct PhaseTrack {
  std::vector<double> times;  // refined grid
  // Per refined grid point; track j keeps its position while the number of
  // unit-circle eigenvalues per label is unchanged.
  std::vector<std::vector<LabeledPhase>> phases;
  std::vector<bool> off_circle;  // some eigenvalue off the unit circle
  std::vector<std::size_t> grid_index;  // refined index of each input point
  std::vector<PhaseCrossing> crossings;
  int refinements = 0;
};

struct PhaseOptions {
  double max_jump = 0.7853981633974483;  // pi / 4
  int max_depth = 20;
};

PhaseTrack track_phases(const CausalPath& path, const PhaseOptions& opts = {});

// Continuous lift of arg(nu(W(t))) / 2pi at each input grid point, anchored
// at `start` (0 for paths beginning at the identity).
std::vector<double> mu_along_path(const CausalPath& path, double start = 0.0,
                                  const PhaseOptions& opts = {});

struct PropertyResult {
  std::string name;
  bool passed = false;
  bool informational = false;  // recorded, never fails the suite
  long checked = 0;
  double worst = 0.0;      // worst observed value of the checked quantity
  double threshold = 0.0;  // pass iff worst is on the right side of this
  std::string detail;

  friend bool operator==(const PropertyResult&, const PropertyResult&) = default;
};

struct SuiteReport {
  std::uint64_t seed = 0;
  int n = 1;
  int trials = 1;
  std::vector<PropertyResult> properties;

  bool all_passed() const;
  friend bool operator==(const SuiteReport&, const SuiteReport&) = default;
};

// Individual properties; each derives its own stream from `seed`.
namespace checks {

PropertyResult distance_formula(std::uint64_t seed, int n, int trials);
PropertyResult maximality(std::uint64_t seed, int n, int trials, int collinear);
PropertyResult tau_monotone(std::uint64_t seed, int n, int paths, int steps);
PropertyResult phase_monotone(std::uint64_t seed, int n, int paths, int steps);
PropertyResult connect_endpoints(std::uint64_t seed, int n, int paths, int steps);
PropertyResult exit_finite(std::uint64_t seed, int n, int trials);
PropertyResult exit_closed_form();
PropertyResult tau_divergence(std::uint64_t seed, int n, int trials);
PropertyResult angle_complement(std::uint64_t seed, int n, int trials);
PropertyResult maslov_paths(std::uint64_t seed, int n, int paths, int steps);
PropertyResult maslov_loop();
PropertyResult krein_calibration();
PropertyResult diamond_bounded(std::uint64_t seed, int n, int samples);
PropertyResult closed_timelike_loop(std::uint64_t seed, int n);
PropertyResult quasimorphism_defect(std::uint64_t seed, int n, int trials);

inline constexpr double kDiamondNormBound = 1e3;

}  // namespace checks

SuiteReport verify_suite(std::uint64_t seed, int n, int trials);

}  // namespace sympcausal

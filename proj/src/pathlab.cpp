#include "sympcausal/pathlab.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <optional>
#include <string>

namespace sympcausal {

namespace {

constexpr double kPi = std::numbers::pi;

// Wraps to (-pi, pi].
double wrap(double a) {
  a = std::remainder(a, 2.0 * kPi);
  return a <= -kPi ? a + 2.0 * kPi : a;
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + (index + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double Rng::uniform() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double Rng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double u = 0.0;
  do {
    u = uniform();
  } while (u <= 0.0);
  const double v = uniform();
  const double r = std::sqrt(-2.0 * std::log(u));
  spare_ = r * std::sin(2.0 * kPi * v);
  has_spare_ = true;
  return r * std::cos(2.0 * kPi * v);
}

Matrix Rng::normal_matrix(Eigen::Index rows, Eigen::Index cols) {
  Matrix m(rows, cols);
  for (Eigen::Index j = 0; j < cols; ++j)
    for (Eigen::Index i = 0; i < rows; ++i) m(i, j) = normal();
  return m;
}

HamElement random_cone_element(Rng& rng, int n, double scale) {
  if (!(scale > 0.0)) {
    throw Error(ErrorKind::InvalidArgument, "random_cone_element needs scale > 0");
  }
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "half-dimension n must be >= 1");
  const Matrix a = rng.normal_matrix(2 * n, 2 * n);
  const Matrix s = a.transpose() * a + kConeEpsilon * Matrix::Identity(2 * n, 2 * n);
  return HamElement::from_symmetric(scale * s);
}

HamElement random_cone_element(std::uint64_t seed, int n, double scale) {
  Rng rng(seed);
  return random_cone_element(rng, n, scale);
}

SympMatrix random_symplectic(Rng& rng, int n, double spread) {
  const HamElement h = HamElement::from_symmetric(spread * rng.normal_matrix(2 * n, 2 * n));
  return exp_ham(h);
}

SympMatrix random_elliptic(Rng& rng, int n, double margin, double spread) {
  const SympMatrix s = random_symplectic(rng, n, spread);
  Matrix gen = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    const double theta = rng.uniform(margin, kPi - margin);
    gen(k, n + k) = -theta;
    gen(n + k, k) = theta;
  }
  const SympMatrix r = exp_ham(HamElement::unchecked(gen));
  return s * r * s.inverse();
}

CausalPath random_causal_path(Rng& rng, int n, const SympMatrix& start, const PathOptions& opts) {
  if (opts.steps < 1) throw Error(ErrorKind::InvalidArgument, "a causal path needs steps >= 1");
  if (!(opts.step_size > 0.0)) throw Error(ErrorKind::InvalidArgument, "step_size must be > 0");
  if (start.n() != n) throw Error(ErrorKind::DimensionMismatch, "start matrix has the wrong size");
  const int hold = std::max(1, opts.hold);

  auto draw = [&] {
    const HamElement x = random_cone_element(rng, n, 1.0);
    return (1.0 / x.matrix().norm()) * x;
  };

  CausalPath path;
  path.times.push_back(0.0);
  path.matrices.push_back(start);
  std::optional<HamElement> current;
  for (int i = 0; i < opts.steps; ++i) {
    if (i % hold == 0 || !current) current = draw();
    double dt = opts.step_size;
    SympMatrix next = exp_ham(*current, dt) * path.matrices.back();
    if (opts.confine) {
      int halvings = 0;
      while (!is_positively_elliptic(next).elliptic) {
        if (++halvings > opts.max_halvings) {
          throw Error(ErrorKind::RegionExit,
                      "step " + std::to_string(i) + " could not be kept inside the region");
        }
        current = draw();
        dt *= 0.5;
        next = exp_ham(*current, dt) * path.matrices.back();
      }
    }
    const auto check = is_symplectic(next.matrix());
    if (check.relative_residual > opts.drift_tol) {
      throw Error(ErrorKind::DriftExceeded,
                  "symplectic drift " + std::to_string(check.relative_residual) + " at step " +
                      std::to_string(i));
    }
    path.tangents.push_back(*current);
    path.times.push_back(path.times.back() + dt);
    path.matrices.push_back(std::move(next));
  }
  return path;
}

CausalPath random_causal_path(std::uint64_t seed, int n, const SympMatrix& start,
                              const PathOptions& opts) {
  Rng rng(seed);
  return random_causal_path(rng, n, start, opts);
}

namespace {

struct Snapshot {
  std::vector<LabeledPhase> raw;  // principal arguments
  bool off_circle = false;
};

Snapshot snapshot(const SympMatrix& w) {
  Snapshot s;
  for (const auto& c : analyze_spectrum(w.matrix()).clusters) {
    switch (c.location) {
      case EigenLocation::OffCircle:
        s.off_circle = true;
        break;
      case EigenLocation::PlusOne:
      case EigenLocation::MinusOne: {
        const double a = c.location == EigenLocation::PlusOne ? 0.0 : kPi;
        for (int k = 0; k < c.alg_mult / 2; ++k) {
          s.raw.push_back({a, +1});
          s.raw.push_back({a, -1});
        }
        break;
      }
      case EigenLocation::UnitCircleNonReal: {
        const auto sig = *c.krein_signature;
        if (sig.p == c.alg_mult || sig.q == c.alg_mult) {
          const int label = sig.p == c.alg_mult ? +1 : -1;
          for (Complex z : c.eigenvalues) s.raw.push_back({std::arg(z), label});
        } else {
          // Mixed or degenerate cluster: labels by count at the cluster angle.
          const double a = std::arg(c.value);
          for (int k = 0; k < c.alg_mult; ++k) s.raw.push_back({a, k < sig.p ? +1 : -1});
        }
        break;
      }
    }
  }
  return s;
}

// Matching within each Krein label. Tracks of one label are kept in phase
// order and paired with a window of consecutive raw angles on the lifted
// circle, choosing the window with the smallest largest jump. Returns
// nullopt when the label counts differ (eigenvalues entered or left the
// circle).
std::optional<std::pair<std::vector<LabeledPhase>, double>> match(
    const std::vector<LabeledPhase>& prev, const std::vector<LabeledPhase>& raw) {
  if (prev.size() != raw.size()) return std::nullopt;
  std::vector<LabeledPhase> next(prev.size());
  double max_jump = 0.0;
  for (int label : {+1, -1}) {
    std::vector<std::size_t> tracks;
    std::vector<double> angles;
    for (std::size_t j = 0; j < prev.size(); ++j)
      if (prev[j].label == label) tracks.push_back(j);
    for (const auto& r : raw)
      if (r.label == label) angles.push_back(r.phase);
    if (tracks.size() != angles.size()) return std::nullopt;
    if (tracks.empty()) continue;
    std::stable_sort(tracks.begin(), tracks.end(), [&](std::size_t x, std::size_t y) {
      return prev[x].phase < prev[y].phase;
    });
    const long k = static_cast<long>(tracks.size());
    const double base = prev[tracks.front()].phase;
    for (double& a : angles) a = base + wrap(a - base);
    std::sort(angles.begin(), angles.end());
    auto ext = [&](long i) {
      const long q = ((i % k) + k) % k;
      const long turns = (i - q) / k;
      return angles[static_cast<std::size_t>(q)] + 2.0 * kPi * static_cast<double>(turns);
    };
    long best_shift = 0;
    double best = std::numeric_limits<double>::infinity();
    for (long shift = -k; shift <= k; ++shift) {
      double worst = 0.0;
      for (long i = 0; i < k; ++i) {
        worst = std::max(worst, std::abs(ext(i + shift) - prev[tracks[static_cast<std::size_t>(i)]].phase));
      }
      if (worst < best) {
        best = worst;
        best_shift = shift;
      }
    }
    for (long i = 0; i < k; ++i) {
      const std::size_t j = tracks[static_cast<std::size_t>(i)];
      next[j] = {ext(i + best_shift), label};
    }
    max_jump = std::max(max_jump, best);
  }
  return std::make_pair(std::move(next), max_jump);
}

class PhaseTracker {
 public:
  PhaseTracker(const CausalPath& path, const PhaseOptions& opts) : path_(path), opts_(opts) {}

  PhaseTrack run() {
    const Snapshot first = snapshot(path_.matrices.front());
    push(path_.times.front(), first.raw, first.off_circle);
    out_.grid_index.push_back(0);
    for (std::size_t i = 0; i < path_.steps(); ++i) {
      segment(i, path_.times[i], path_.matrices[i], path_.times[i + 1], path_.matrices[i + 1], 0);
      out_.grid_index.push_back(out_.times.size() - 1);
    }
    return std::move(out_);
  }

 private:
  void push(double t, std::vector<LabeledPhase> phases, bool off) {
    if (!out_.phases.empty() && out_.phases.back().size() == phases.size()) {
      const std::size_t idx = out_.phases.size();
      for (std::size_t j = 0; j < phases.size(); ++j) {
        // Multiples of pi passed through or landed on; leaving one is not a crossing.
        const double a = out_.phases.back()[j].phase, b = phases[j].phase;
        constexpr double kTouch = 1e-12;
        const auto lo = static_cast<long>(std::floor(std::min(a, b) / kPi)) - 1;
        const auto hi = static_cast<long>(std::ceil(std::max(a, b) / kPi)) + 1;
        for (long m = lo; m <= hi; ++m) {
          const double c = static_cast<double>(m) * kPi;
          const bool through = std::min(a, b) + kTouch < c && c < std::max(a, b) - kTouch;
          const bool lands = std::abs(b - c) <= kTouch && std::abs(a - c) > kTouch;
          if (through || lands) {
            out_.crossings.push_back({idx, m % 2 == 0 ? +1 : -1, phases[j].label});
          }
        }
      }
    }
    out_.times.push_back(t);
    out_.phases.push_back(std::move(phases));
    out_.off_circle.push_back(off);
  }

  void segment(std::size_t step, double ta, const SympMatrix& wa, double tb, const SympMatrix& wb,
               int depth) {
    const Snapshot s = snapshot(wb);
    const auto matched = match(out_.phases.back(), s.raw);
    if (!matched) {  // eigenvalues entered or left the circle: restart
      push(tb, s.raw, s.off_circle);
      return;
    }
    if (matched->second <= opts_.max_jump) {
      push(tb, matched->first, s.off_circle);
      return;
    }
    if (depth >= opts_.max_depth) {
      throw Error(ErrorKind::MatchingAmbiguous,
                  "eigenphase matching still jumps by " + std::to_string(matched->second) +
                      " after " + std::to_string(depth) + " refinements at step " +
                      std::to_string(step));
    }
    ++out_.refinements;
    const double tm = 0.5 * (ta + tb);
    const SympMatrix wm = exp_ham(path_.tangents[step], tm - ta) * wa;
    segment(step, ta, wa, tm, wm, depth + 1);
    segment(step, tm, wm, tb, wb, depth + 1);
  }

  const CausalPath& path_;
  PhaseOptions opts_;
  PhaseTrack out_;
};

double nu_arg(const SympMatrix& w, std::size_t step) {
  try {
    return std::arg(nu(w));
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::SignatureDegenerate) throw;
    throw Error(ErrorKind::SignatureDegenerate,
                "nu undefined near grid point " + std::to_string(step) + ": " + e.what());
  }
}

}  // namespace

PhaseTrack track_phases(const CausalPath& path, const PhaseOptions& opts) {
  if (path.matrices.empty() || path.times.size() != path.matrices.size() ||
      path.tangents.size() + 1 != path.matrices.size()) {
    throw Error(ErrorKind::InvalidArgument, "causal path sizes are inconsistent");
  }
  return PhaseTracker(path, opts).run();
}

std::vector<double> mu_along_path(const CausalPath& path, double start, const PhaseOptions& opts) {
  if (path.matrices.empty() || path.tangents.size() + 1 != path.matrices.size()) {
    throw Error(ErrorKind::InvalidArgument, "causal path sizes are inconsistent");
  }
  std::vector<double> mu{start};
  double current = start;
  double arg_a = nu_arg(path.matrices.front(), 0);

  // Sum of wrapped arg increments of nu over [ta, tb], refining the step
  // until every increment is below max_jump.
  auto increment = [&](auto&& self, std::size_t step, double ta, const SympMatrix& wa, double aa,
                       double tb, const SympMatrix& wb, double ab, int depth) -> double {
    const double d = wrap(ab - aa);
    if (std::abs(d) <= opts.max_jump) return d;
    if (depth >= opts.max_depth) {
      throw Error(ErrorKind::MatchingAmbiguous,
                  "nu jumps by " + std::to_string(d) + " after refinement at step " +
                      std::to_string(step));
    }
    const double tm = 0.5 * (ta + tb);
    const SympMatrix wm = exp_ham(path.tangents[step], tm - ta) * wa;
    const double am = nu_arg(wm, step);
    return self(self, step, ta, wa, aa, tm, wm, am, depth + 1) +
           self(self, step, tm, wm, am, tb, wb, ab, depth + 1);
  };

  for (std::size_t i = 0; i < path.steps(); ++i) {
    const double arg_b = nu_arg(path.matrices[i + 1], i + 1);
    current += increment(increment, i, path.times[i], path.matrices[i], arg_a, path.times[i + 1],
                         path.matrices[i + 1], arg_b, 0) /
               (2.0 * kPi);
    mu.push_back(current);
    arg_a = arg_b;
  }
  return mu;
}

bool SuiteReport::all_passed() const {
  return std::all_of(properties.begin(), properties.end(),
                     [](const PropertyResult& p) { return p.passed || p.informational; });
}

namespace checks {

namespace {

SympMatrix block_rotation(const std::vector<double>& angles) {
  const int n = static_cast<int>(angles.size());
  Matrix gen = Matrix::Zero(2 * n, 2 * n);
  for (int k = 0; k < n; ++k) {
    gen(k, n + k) = -angles[static_cast<std::size_t>(k)];
    gen(n + k, k) = angles[static_cast<std::size_t>(k)];
  }
  return exp_ham(HamElement::unchecked(gen));
}

constexpr double kConfinedStep = 0.005;

PathOptions confined(int steps) {
  PathOptions o;
  o.steps = steps;
  o.step_size = kConfinedStep;
  o.confine = true;
  return o;
}

// A region-confined path; draws that cannot be kept inside are discarded
// and redrawn from the next sub-stream.
CausalPath confined_path(std::uint64_t seed, int n, int steps, bool from_identity, long& discarded) {
  for (std::uint64_t attempt = 0;; ++attempt) {
    Rng rng(attempt == 0 ? seed : derive_seed(seed, attempt));
    const SympMatrix start = from_identity ? SympMatrix::identity(n) : random_elliptic(rng, n, 0.3);
    try {
      return random_causal_path(rng, n, start, confined(steps));
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::RegionExit || attempt >= 16) throw;
      ++discarded;
    }
  }
}

PropertyResult named(const char* name) {
  PropertyResult r;
  r.name = name;
  return r;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

}  // namespace

PropertyResult distance_formula(std::uint64_t seed, int n, int trials) {
  PropertyResult r = named("distance_formula");
  r.threshold = 1e-9;
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const SympMatrix w = random_elliptic(rng, n);
    const double d = dist_formula(w);
    const double g = finsler_G(log_elliptic(w).x);
    r.worst = std::max(r.worst, std::abs(d - g) / (1.0 + d));
    ++r.checked;
  }
  r.passed = r.worst <= r.threshold;
  r.detail = "max |dist - G(log W)| / (1 + dist)";
  return r;
}

PropertyResult maximality(std::uint64_t seed, int n, int trials, int collinear) {
  PropertyResult r = named("maximality");
  r.threshold = 1e-9;
  r.worst = -std::numeric_limits<double>::infinity();
  long attempts = 0;
  double collinear_worst = 0.0;
  std::uint64_t idx = 0;
  while (r.checked < trials && attempts < 50L * trials) {
    ++attempts;
    Rng rng(derive_seed(seed, idx++));
    const SympMatrix w = random_elliptic(rng, n, 0.1);
    const HamElement xw = log_elliptic(w).x;
    const double s = rng.uniform(0.1, 0.9);
    const HamElement p = random_cone_element(rng, n, 1.0);
    const double rho = rng.uniform(0.0, 0.3) * xw.matrix().norm() / p.matrix().norm();
    const Matrix y = s * xw.matrix() + rho * (rng.uniform() < 0.5 ? 1.0 : -0.5) * p.matrix();
    const SympMatrix m = exp_ham(HamElement::unchecked(y));
    try {
      const ConnectResult first = connect(SympMatrix::identity(n), m);
      const ConnectResult second = connect(m, w);
      const double broken = finsler_G(first.x) + finsler_G(second.x);
      r.worst = std::max(r.worst, broken - dist_formula(w));
      ++r.checked;
    } catch (const Error&) {
      continue;  // midpoint not causally between id and W
    }
  }
  for (int i = 0; i < collinear; ++i) {
    Rng rng(derive_seed(seed ^ 0x5bd1e995ULL, static_cast<std::uint64_t>(i)));
    const SympMatrix w = random_elliptic(rng, n, 0.1);
    const HamElement xw = log_elliptic(w).x;
    const double s = rng.uniform(0.1, 0.9);
    const SympMatrix m = exp_ham(xw, s);
    const double broken = finsler_G(connect(SympMatrix::identity(n), m).x) +
                          finsler_G(connect(m, w).x);
    collinear_worst = std::max(collinear_worst, std::abs(broken - dist_formula(w)));
  }
  r.passed = r.checked == trials && r.worst <= r.threshold && collinear_worst <= 1e-9;
  r.detail = "max(broken - dist) over " + std::to_string(r.checked) + " midpoints (" +
             std::to_string(attempts) + " drawn); collinear max |broken - dist| = " +
             fmt(collinear_worst) + " over " + std::to_string(collinear) + " cases";
  return r;
}

PropertyResult tau_monotone(std::uint64_t seed, int n, int paths, int steps) {
  PropertyResult r = named("tau_monotone");
  long discarded = 0;
  r.threshold = 1e-12;
  r.worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < paths; ++i) {
    const CausalPath path =
        confined_path(derive_seed(seed, static_cast<std::uint64_t>(i)), n, steps, false, discarded);
    double prev = tau(path.matrices.front());
    for (std::size_t k = 1; k < path.matrices.size(); ++k) {
      const double t = tau(path.matrices[k]);
      r.worst = std::min(r.worst, t - prev);
      prev = t;
      ++r.checked;
    }
  }
  r.passed = r.worst > r.threshold;
  r.detail = "min tau increment per step over " + std::to_string(paths) +
             " region-confined paths; " + std::to_string(discarded) + " draws left the region";
  return r;
}

PropertyResult phase_monotone(std::uint64_t seed, int n, int paths, int steps) {
  PropertyResult r = named("phase_monotone");
  long discarded = 0;
  r.threshold = -1e-9;
  r.worst = std::numeric_limits<double>::infinity();
  for (int i = 0; i < paths; ++i) {
    const CausalPath path =
        confined_path(derive_seed(seed, static_cast<std::uint64_t>(i)), n, steps, false, discarded);
    const PhaseTrack track = track_phases(path);
    for (std::size_t k = 1; k < track.phases.size(); ++k) {
      const auto& a = track.phases[k - 1];
      const auto& b = track.phases[k];
      if (a.size() != b.size()) continue;
      for (std::size_t j = 0; j < a.size(); ++j) {
        // Signed so that the expected direction is positive for both labels.
        r.worst = std::min(r.worst, a[j].label * (b[j].phase - a[j].phase));
        ++r.checked;
      }
    }
  }
  r.passed = r.worst >= r.threshold;
  r.detail = "min signed phase increment (Krein-positive up, Krein-negative down); " +
             std::to_string(discarded) + " draws left the region";
  return r;
}

PropertyResult connect_endpoints(std::uint64_t seed, int n, int paths, int steps) {
  PropertyResult r = named("connect_endpoints");
  long discarded = 0;
  r.threshold = 1e-8;
  long failures = 0;
  for (int i = 0; i < paths; ++i) {
    const CausalPath path =
        confined_path(derive_seed(seed, static_cast<std::uint64_t>(i)), n, steps, false, discarded);
    ++r.checked;
    try {
      const ConnectResult c = connect(path.matrices.front(), path.matrices.back());
      if (c.samples_elliptic != c.samples) ++failures;
      r.worst = std::max(r.worst, c.endpoint_residual);
    } catch (const Error&) {
      ++failures;
    }
  }
  r.passed = failures == 0 && r.worst <= r.threshold;
  r.detail = std::to_string(failures) + " failures; max relative endpoint residual shown; " +
             std::to_string(discarded) + " draws left the region";
  return r;
}

namespace {

struct ExitCase {
  SympMatrix w0;
  HamElement x;
};

ExitCase exit_case(std::uint64_t seed, int n) {
  Rng rng(seed);
  SympMatrix w0 = random_elliptic(rng, n);
  HamElement x = random_cone_element(rng, n, 1.0);
  return {std::move(w0), std::move(x)};
}

}  // namespace

PropertyResult exit_finite(std::uint64_t seed, int n, int trials) {
  PropertyResult r = named("exit_finite");
  r.threshold = kDefaultTMax;
  long infinite = 0;
  for (int i = 0; i < trials; ++i) {
    const ExitCase ec = exit_case(derive_seed(seed, static_cast<std::uint64_t>(i)), n);
    const ExitTimes et = exit_times(ec.w0, ec.x);
    if (!et.forward.finite || !et.backward.finite) ++infinite;
    r.worst = std::max({r.worst, et.c1(), et.c2()});
    ++r.checked;
  }
  r.passed = infinite == 0;
  r.detail = std::to_string(infinite) + " searches hit t_max; max exit time shown";
  return r;
}

PropertyResult exit_closed_form() {
  PropertyResult r = named("exit_closed_form");
  r.threshold = kExitTolerance;
  const HamElement j = standard_j(1);
  const SympMatrix quarter = block_rotation({kPi / 4});
  const ExitTimes a = exit_times(quarter, j);
  r.worst = std::max(std::abs(a.c1() - kPi / 4), std::abs(a.c2() - 3 * kPi / 4));
  const ExitTimes b = exit_times(block_rotation({kPi / 2}), j);
  r.worst = std::max({r.worst, std::abs(b.c1() - kPi / 2), std::abs(b.c2() - kPi / 2)});
  const bool reasons = b.forward.reason == ExitReason::EigenvalueMinusOne &&
                       b.backward.reason == ExitReason::EigenvalueOne;
  const double tau_in = std::min(tau(geodesic(j, quarter, a.c2() - 1e-6)),
                                 -tau(geodesic(j, quarter, -a.c1() + 1e-6)));
  r.checked = 2;
  r.passed = r.worst <= r.threshold && reasons && tau_in > 10.0;
  r.detail = "exp(pi/4 J), J: c1 = pi/4, c2 = 3pi/4; |tau| 1e-6 inside = " + fmt(tau_in);
  return r;
}

PropertyResult tau_divergence(std::uint64_t seed, int n, int trials) {
  PropertyResult r = named("tau_divergence");
  r.threshold = 10.0;
  r.worst = std::numeric_limits<double>::infinity();
  long growing = 0;
  for (int i = 0; i < trials; ++i) {
    const ExitCase ec = exit_case(derive_seed(seed, static_cast<std::uint64_t>(i)), n);
    const ExitTimes et = exit_times(ec.w0, ec.x);
    if (!et.forward.finite || !et.backward.finite) continue;
    auto end_values = [&](double d) {
      return std::make_pair(tau(geodesic(ec.x, ec.w0, et.c2() - d)),
                            tau(geodesic(ec.x, ec.w0, -et.c1() + d)));
    };
    const auto [fwd, bwd] = end_values(1e-6);
    const auto [fwd9, bwd9] = end_values(1e-9);
    if (fwd9 > fwd && bwd9 < bwd) ++growing;
    r.worst = std::min({r.worst, fwd, -bwd});
    ++r.checked;
  }
  r.passed = r.worst > r.threshold;
  r.detail = "min |tau| at 1e-6 inside either exit; " + std::to_string(growing) + "/" +
             std::to_string(r.checked) + " pairs grow further at 1e-9";
  return r;
}

PropertyResult angle_complement(std::uint64_t seed, int n, int trials) {
  PropertyResult r = named("angle_complement");
  r.threshold = 1e-8;
  long cone_failures = 0;
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const SympMatrix w = random_elliptic(rng, n);
    const EllipticLog lw = log_elliptic(w);
    const SympMatrix mi = minus_inverse(w);
    const EllipticLog lm = log_elliptic(mi);
    if (cone_status(lw.x) != ConeStatus::Interior || cone_status(lm.x) != ConeStatus::Interior ||
        max_abs_imag_eigenvalue(lw.x.matrix()) >= kPi) {
      ++cone_failures;
    }
    const std::size_t k = lw.angles.size();
    for (std::size_t j = 0; j < k; ++j) {
      r.worst = std::max(r.worst, std::abs(lm.angles[j] - (kPi - lw.angles[k - 1 - j])));
    }
    ++r.checked;
  }
  r.passed = cone_failures == 0 && r.worst <= r.threshold;
  r.detail = std::to_string(cone_failures) +
             " logs outside the interior or spectral band; max angle-complement error shown";
  return r;
}

PropertyResult maslov_paths(std::uint64_t seed, int n, int paths, int steps) {
  PropertyResult r = named("maslov_paths");
  long discarded = 0;
  r.threshold = 1e-6;
  for (int i = 0; i < paths; ++i) {
    const CausalPath path =
        confined_path(derive_seed(seed, static_cast<std::uint64_t>(i)), n, steps, true, discarded);
    const double lifted = mu_along_path(path).back();
    r.worst = std::max(r.worst, std::abs(lifted - mu_elliptic(path.matrices.back())));
    ++r.checked;
  }
  r.passed = r.worst <= r.threshold;
  r.detail = "max |lifted mu - mu_elliptic| at path endpoints from id; " +
             std::to_string(discarded) + " draws left the region";
  return r;
}

PropertyResult maslov_loop() {
  PropertyResult r = named("maslov_loop");
  r.threshold = 1e-8;
  constexpr int kSteps = 64;
  std::vector<double> times;
  for (int i = 0; i <= kSteps; ++i) times.push_back(2.0 * kPi * i / kSteps);
  const CausalPath loop = CausalPath::integrate(
      SympMatrix::identity(1), times, std::vector<HamElement>(kSteps, standard_j(1)));
  const auto mu = mu_along_path(loop);
  for (std::size_t i = 0; i < mu.size(); ++i) {
    r.worst = std::max(r.worst, std::abs(mu[i] - times[i] / (2.0 * kPi)));
    ++r.checked;
  }
  r.passed = r.worst <= r.threshold;
  r.detail = "exp(tJ), t in [0, 2pi]: max |mu(t) - t / 2pi|, through the -1 crossing";
  return r;
}

PropertyResult krein_calibration() {
  PropertyResult r = named("krein_calibration");
  bool ok = true;
  for (double theta : {0.1, kPi / 3, kPi / 2, 3.0}) {
    ok = ok && is_positively_elliptic(block_rotation({theta})).elliptic;
    ++r.checked;
  }
  for (double theta : {0.0, kPi}) {
    ok = ok && !is_positively_elliptic(block_rotation({theta})).elliptic;
    ++r.checked;
  }
  const EllipticCheck mixed = is_positively_elliptic(block_rotation({0.7, -0.7}));
  ok = ok && !mixed.elliptic && mixed.diagnosis == EllipticDiagnosis::IndefiniteKrein;
  ++r.checked;
  r.passed = ok;
  r.worst = ok ? 0.0 : 1.0;
  r.detail = "exp(theta J) in the region for theta in {0.1, pi/3, pi/2, 3}, not for {0, pi}; "
             "blockdiag(R(0.7), R(-0.7)) indefinite";
  return r;
}

PropertyResult diamond_bounded(std::uint64_t seed, int n, int samples) {
  PropertyResult r = named("diamond_bounded");
  r.threshold = kDiamondNormBound;
  std::vector<double> base{0.2, 0.3, 0.4, 0.5, 0.6};
  base.resize(static_cast<std::size_t>(n), 0.25);
  const SympMatrix w0 = block_rotation(base);
  const HamElement y = 2.0 * standard_j(n);
  const SympMatrix w1 = exp_ham(y) * w0;
  long attempts = 0;
  std::uint64_t idx = 0;
  while (r.checked < samples && attempts < 50L * samples) {
    ++attempts;
    Rng rng(derive_seed(seed, idx++));
    const double s = rng.uniform(0.05, 0.95);
    const HamElement p = random_cone_element(rng, n, 1.0);
    const double rho = rng.uniform(0.0, 0.5) / p.matrix().norm();
    const HamElement step = HamElement::unchecked(s * y.matrix() + rho * p.matrix());
    const SympMatrix m = exp_ham(step) * w0;
    try {
      connect(w0, m);
      connect(m, w1);
    } catch (const Error&) {
      continue;
    }
    r.worst = std::max(r.worst, m.matrix().norm());
    ++r.checked;
  }
  r.passed = r.checked == samples && std::isfinite(r.worst) && r.worst < r.threshold;
  r.detail = "max ||M||_F over broken-geodesic midpoints in J+(W0) n J-(W1), " +
             std::to_string(attempts) + " drawn; W1 = exp(2J) W0";
  return r;
}

PropertyResult closed_timelike_loop(std::uint64_t seed, int n) {
  PropertyResult r = named("closed_timelike_loop");
  r.threshold = 1e-9;
  Rng rng(seed);
  const SympMatrix w = random_symplectic(rng, n);
  constexpr int kSteps = 256;
  std::vector<double> times;
  for (int i = 0; i <= kSteps; ++i) times.push_back(2.0 * kPi * i / kSteps);
  const CausalPath loop =
      CausalPath::integrate(w, times, std::vector<HamElement>(kSteps, standard_j(n)));
  bool timelike = true;
  for (std::size_t i = 0; i < loop.tangents.size(); ++i) {
    const Matrix a = loop.tangents[i].matrix() * loop.matrices[i].matrix();
    timelike = timelike && cone_membership_tangent(loop.matrices[i], a) == ConeStatus::Interior;
  }
  r.worst = (loop.matrices.back().matrix() - w.matrix()).norm() / w.matrix().norm();
  r.checked = kSteps;
  r.passed = timelike && r.worst <= r.threshold;
  r.detail = "exp(tJ) W, t in [0, 2pi]: relative closure error; all tangents interior = " +
             std::string(timelike ? "true" : "false");
  return r;
}

PropertyResult quasimorphism_defect(std::uint64_t seed, int n, int trials) {
  PropertyResult r = named("quasimorphism_defect");
  r.informational = true;
  r.passed = true;
  constexpr int kSteps = 32;
  for (int i = 0; i < trials; ++i) {
    Rng rng(derive_seed(seed, static_cast<std::uint64_t>(i)));
    const SympMatrix v = random_elliptic(rng, n);
    const SympMatrix w = random_elliptic(rng, n);
    const HamElement xv = log_elliptic(v).x;
    const HamElement xw = log_elliptic(w).x;
    std::vector<double> times;
    std::vector<HamElement> tangents;
    for (int k = 0; k <= 2 * kSteps; ++k) times.push_back(static_cast<double>(k) / kSteps);
    for (int k = 0; k < kSteps; ++k) tangents.push_back(xw);
    for (int k = 0; k < kSteps; ++k) tangents.push_back(xv);
    // id -> w along exp(t Xw), then w -> v w along exp(t Xv) w.
    const CausalPath path = CausalPath::integrate(SympMatrix::identity(n), times, tangents);
    try {
      const double mu_vw = mu_along_path(path).back();
      r.worst = std::max(r.worst, std::abs(mu_vw - mu_elliptic(v) - mu_elliptic(w)));
      ++r.checked;
    } catch (const Error&) {
      continue;  // path crosses a Krein degeneracy; lift undefined there
    }
  }
  r.detail = "max |mu(vw) - mu(v) - mu(w)| over elliptic pairs; no bound asserted";
  return r;
}

}  // namespace checks

SuiteReport verify_suite(std::uint64_t seed, int n, int trials) {
  if (trials < 1) throw Error(ErrorKind::InvalidArgument, "suite needs trials >= 1");
  if (n < 1) throw Error(ErrorKind::InvalidArgument, "half-dimension n must be >= 1");
  SuiteReport report;
  report.seed = seed;
  report.n = n;
  report.trials = trials;
  auto sub = [&](std::uint64_t k) { return derive_seed(seed, 1000 + k); };
  const int steps = 50;
  auto& p = report.properties;
  p.push_back(checks::distance_formula(sub(0), n, trials));
  p.push_back(checks::maximality(sub(1), n, trials, std::max(1, trials / 4)));
  p.push_back(checks::tau_monotone(sub(2), n, trials, steps));
  p.push_back(checks::phase_monotone(sub(2), n, trials, steps));
  p.push_back(checks::connect_endpoints(sub(2), n, trials, steps));
  p.push_back(checks::exit_finite(sub(3), n, trials));
  p.push_back(checks::exit_closed_form());
  p.push_back(checks::tau_divergence(sub(3), n, trials));
  p.push_back(checks::angle_complement(sub(4), n, trials));
  p.push_back(checks::maslov_paths(sub(5), n, trials, steps));
  p.push_back(checks::maslov_loop());
  p.push_back(checks::krein_calibration());
  p.push_back(checks::diamond_bounded(sub(6), n, 10 * trials));
  p.push_back(checks::closed_timelike_loop(sub(7), n));
  p.push_back(checks::quasimorphism_defect(sub(8), n, trials));
  return report;
}

}  // namespace sympcausal

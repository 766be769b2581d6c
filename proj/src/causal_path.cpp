#include "sympcausal/causal_path.hpp"

#include <string>

namespace sympcausal {

CausalPath CausalPath::integrate(const SympMatrix& start, std::vector<double> times,
                                 std::vector<HamElement> tangents) {
  if (times.size() != tangents.size() + 1) {
    throw Error(ErrorKind::InvalidArgument,
                "a causal path needs one more grid point than tangents");
  }
  CausalPath path;
  path.matrices.reserve(times.size());
  path.matrices.push_back(start);
  for (std::size_t i = 0; i < tangents.size(); ++i) {
    const double dt = times[i + 1] - times[i];
    path.matrices.push_back(exp_ham(tangents[i], dt) * path.matrices.back());
  }
  path.times = std::move(times);
  path.tangents = std::move(tangents);
  return path;
}

CausalPath CausalPath::reversed() const {
  CausalPath out;
  for (auto it = times.rbegin(); it != times.rend(); ++it) out.times.push_back(-*it);
  for (auto it = tangents.rbegin(); it != tangents.rend(); ++it) out.tangents.push_back(-*it);
  out.matrices.assign(matrices.rbegin(), matrices.rend());
  return out;
}

void CausalPath::validate(const Tolerances& tol, double drift_tol) const {
  if (matrices.empty() || times.size() != matrices.size() ||
      tangents.size() + 1 != matrices.size()) {
    throw Error(ErrorKind::InvalidArgument,
                "causal path sizes are inconsistent: need N tangents, N+1 times and matrices");
  }
  for (std::size_t i = 0; i + 1 < times.size(); ++i) {
    if (!(times[i + 1] > times[i])) {
      throw Error(ErrorKind::InvalidArgument,
                  "causal path grid must be strictly increasing at index " + std::to_string(i));
    }
  }
  for (std::size_t i = 0; i < tangents.size(); ++i) {
    if (!is_causal(cone_status(tangents[i], tol))) {
      throw Error(ErrorKind::OutsideCone,
                  "tangent " + std::to_string(i) + " is not in the closed cone");
    }
  }
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    const auto check = is_symplectic(matrices[i].matrix());
    if (check.relative_residual > drift_tol) {
      throw Error(ErrorKind::DriftExceeded,
                  "matrix " + std::to_string(i) + " drifted from Sp(2n): relative residual " +
                      std::to_string(check.relative_residual));
    }
  }
}

}  // namespace sympcausal

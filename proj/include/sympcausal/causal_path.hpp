#pragma once

#include <cstddef>
#include <vector>

#include "sympcausal/linalg_core.hpp"

namespace sympcausal {

// Discrete causal curve: W_{i+1} = exp((t_{i+1} - t_i) X_i) W_i with
// right-trivialized tangents X_i in the closed cone.
struct CausalPath {
  std::vector<double> times;        // t_0 < ... < t_N
  std::vector<HamElement> tangents;  // N entries
  std::vector<SympMatrix> matrices;  // N + 1 entries

  std::size_t steps() const { return tangents.size(); }
  int n() const { return matrices.front().n(); }

  // Builds the matrices from a start point by exact group updates.
  static CausalPath integrate(const SympMatrix& start, std::vector<double> times,
                              std::vector<HamElement> tangents);

  // Same matrices in reverse order with negated tangents. The result runs
  // backwards in time and is past-directed.
  CausalPath reversed() const;

  // Throws InvalidArgument on inconsistent sizes or a non-increasing grid,
  // OutsideCone on a tangent outside the closed cone, DriftExceeded when a
  // matrix has drifted from Sp(2n) beyond `drift_tol` (relative residual).
  void validate(const Tolerances& tol = {}, double drift_tol = 1e-8) const;
};

}  // namespace sympcausal

#include "sympcausal/krein.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace sympcausal {

std::string_view to_string(EigenLocation loc) {
  switch (loc) {
    case EigenLocation::UnitCircleNonReal: return "unit-circle";
    case EigenLocation::PlusOne: return "plus-one";
    case EigenLocation::MinusOne: return "minus-one";
    case EigenLocation::OffCircle: return "off-circle";
  }
  return "unknown";
}

bool KreinSpectrum::any_degenerate() const {
  return std::any_of(clusters.begin(), clusters.end(),
                     [](const EigenCluster& c) { return c.degenerate; });
}

CMatrix krein_gram(const CMatrix& vectors) {
  const auto dim = vectors.rows();
  if (dim == 0 || dim % 2 != 0) {
    throw Error(ErrorKind::DimensionMismatch,
                "Krein Gram vectors must have even length 2n");
  }
  const CMatrix om = omega_matrix(static_cast<int>(dim / 2)).cast<Complex>();
  const CMatrix k = Complex(0.0, -1.0) * (vectors.transpose() * om * vectors.conjugate());
  // Hermitian by construction; drop roundoff skew.
  return 0.5 * (k + k.adjoint());
}

CMatrix krein_gram(std::span<const CVector> vectors) {
  if (vectors.empty()) return CMatrix(0, 0);
  const auto dim = vectors.front().size();
  CMatrix u(dim, static_cast<Eigen::Index>(vectors.size()));
  for (std::size_t j = 0; j < vectors.size(); ++j) {
    if (vectors[j].size() != dim) {
      throw Error(ErrorKind::DimensionMismatch,
                  "Krein Gram vectors must all have the same length");
    }
    u.col(static_cast<Eigen::Index>(j)) = vectors[j];
  }
  return krein_gram(u);
}

namespace detail {

namespace {

// Exchanges diagonal entries k and k+1 of the upper triangular t with a
// unitary rotation whose first column is the eigenvector of the 2x2 block
// for t(k+1, k+1).
void swap_adjacent(CMatrix& t, CMatrix& q, Eigen::Index k) {
  const Complex a = t(k, k);
  const Complex b = t(k + 1, k + 1);
  const Complex c = t(k, k + 1);
  Complex x1 = c;
  Complex x2 = b - a;
  const double nrm = std::hypot(std::abs(x1), std::abs(x2));
  if (nrm == 0.0) return;  // identical diagonal, nothing to exchange
  x1 /= nrm;
  x2 /= nrm;
  // G = [[x1, -conj(x2)], [x2, conj(x1)]]
  const Complex g00 = x1, g01 = -std::conj(x2), g10 = x2, g11 = std::conj(x1);
  const Eigen::Index dim = t.rows();
  for (Eigen::Index j = 0; j < dim; ++j) {  // rows: G^H T
    const Complex r0 = t(k, j), r1 = t(k + 1, j);
    t(k, j) = std::conj(g00) * r0 + std::conj(g10) * r1;
    t(k + 1, j) = std::conj(g01) * r0 + std::conj(g11) * r1;
  }
  for (Eigen::Index i = 0; i < dim; ++i) {  // columns: T G, Q G
    const Complex c0 = t(i, k), c1 = t(i, k + 1);
    t(i, k) = c0 * g00 + c1 * g10;
    t(i, k + 1) = c0 * g01 + c1 * g11;
    const Complex q0 = q(i, k), q1 = q(i, k + 1);
    q(i, k) = q0 * g00 + q1 * g10;
    q(i, k + 1) = q0 * g01 + q1 * g11;
  }
  t(k + 1, k) = Complex(0.0, 0.0);
  t(k, k) = b;
  t(k + 1, k + 1) = a;
}

}  // namespace

void reorder_schur(CMatrix& t, CMatrix& q, std::vector<bool> select) {
  const auto dim = static_cast<Eigen::Index>(select.size());
  Eigen::Index front = 0;
  for (Eigen::Index j = 0; j < dim; ++j) {
    if (!select[static_cast<std::size_t>(j)]) continue;
    for (Eigen::Index k = j - 1; k >= front; --k) {
      swap_adjacent(t, q, k);
      std::swap(select[static_cast<std::size_t>(k)],
                select[static_cast<std::size_t>(k + 1)]);
    }
    ++front;
  }
}

}  // namespace detail

namespace {

EigenLocation classify(Complex v, const SpectrumTolerances& tol) {
  if (std::abs(v - 1.0) <= tol.real) return EigenLocation::PlusOne;
  if (std::abs(v + 1.0) <= tol.real) return EigenLocation::MinusOne;
  if (std::abs(std::abs(v) - 1.0) <= tol.circle && std::abs(v.imag()) > tol.real) {
    return EigenLocation::UnitCircleNonReal;
  }
  return EigenLocation::OffCircle;
}

// Eigenvalues closer than `gap` (relative) merge, except that a conjugate
// pair straddling the real axis stays split while both imaginary parts clear
// the real band; otherwise the +/-1 band would widen to the cluster gap.
std::vector<std::vector<Eigen::Index>> cluster_indices(const CVector& ev,
                                                       const SpectrumTolerances& tol) {
  const Eigen::Index dim = ev.size();
  std::vector<Eigen::Index> parent(static_cast<std::size_t>(dim));
  std::iota(parent.begin(), parent.end(), Eigen::Index{0});
  auto find = [&](Eigen::Index i) {
    while (parent[static_cast<std::size_t>(i)] != i) {
      i = parent[static_cast<std::size_t>(i)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(i)])];
    }
    return i;
  };
  for (Eigen::Index i = 0; i < dim; ++i) {
    for (Eigen::Index j = i + 1; j < dim; ++j) {
      const double scale = std::max({1.0, std::abs(ev(i)), std::abs(ev(j))});
      const bool straddle = ev(i).imag() * ev(j).imag() < 0.0 &&
                            std::abs(ev(i).imag()) > tol.real &&
                            std::abs(ev(j).imag()) > tol.real;
      if (!straddle && std::abs(ev(i) - ev(j)) <= tol.cluster_gap * scale) {
        parent[static_cast<std::size_t>(find(j))] = find(i);
      }
    }
  }
  std::vector<std::vector<Eigen::Index>> groups;
  std::vector<Eigen::Index> slot(static_cast<std::size_t>(dim), -1);
  for (Eigen::Index i = 0; i < dim; ++i) {
    const Eigen::Index root = find(i);
    auto& s = slot[static_cast<std::size_t>(root)];
    if (s < 0) {
      s = static_cast<Eigen::Index>(groups.size());
      groups.emplace_back();
    }
    groups[static_cast<std::size_t>(s)].push_back(i);
  }
  return groups;
}

}  // namespace

KreinSpectrum analyze_spectrum(const Matrix& w, const SpectrumTolerances& tol) {
  const int n = half_dimension(w);
  Eigen::ComplexSchur<CMatrix> schur(w.cast<Complex>());
  const CMatrix& t0 = schur.matrixT();
  const CMatrix& q0 = schur.matrixU();
  const CVector ev = t0.diagonal();

  KreinSpectrum spec;
  spec.n = n;
  for (const auto& members : cluster_indices(ev, tol)) {
    EigenCluster c;
    c.alg_mult = static_cast<int>(members.size());
    Complex sum(0.0, 0.0);
    std::vector<bool> select(static_cast<std::size_t>(ev.size()), false);
    for (Eigen::Index i : members) {
      sum += ev(i);
      c.eigenvalues.push_back(ev(i));
      select[static_cast<std::size_t>(i)] = true;
    }
    c.value = sum / static_cast<double>(c.alg_mult);
    c.location = classify(c.value, tol);

    CMatrix t = t0;
    CMatrix q = q0;
    detail::reorder_schur(t, q, std::move(select));
    c.basis = q.leftCols(c.alg_mult);

    if (c.on_circle()) {
      const CMatrix k = krein_gram(c.basis);
      const Vector g = Eigen::SelfAdjointEigenSolver<CMatrix>(k, Eigen::EigenvaluesOnly)
                           .eigenvalues();
      // The basis is orthonormal, so |kappa| <= 1 on it; a one-dimensional
      // cluster still needs an absolute scale to detect a null vector.
      const double band = tol.signature * std::max(1.0, g.cwiseAbs().maxCoeff());
      KreinSignature sig;
      for (Eigen::Index i = 0; i < g.size(); ++i) {
        if (g(i) > band) ++sig.p;
        else if (g(i) < -band) ++sig.q;
      }
      c.degenerate = sig.p + sig.q < c.alg_mult;
      c.krein_signature = sig;
    }
    spec.clusters.push_back(std::move(c));
  }

  std::stable_sort(spec.clusters.begin(), spec.clusters.end(),
                   [](const EigenCluster& a, const EigenCluster& b) {
                     const double aa = std::arg(a.value), ab = std::arg(b.value);
                     if (aa != ab) return aa < ab;
                     return std::abs(a.value) < std::abs(b.value);
                   });
  return spec;
}

KreinSpectrum krein_spectrum(const SympMatrix& w, const SpectrumTolerances& tol) {
  KreinSpectrum spec = analyze_spectrum(w.matrix(), tol);
  for (const auto& c : spec.clusters) {
    if (c.degenerate) {
      throw Error(ErrorKind::SignatureDegenerate,
                  "Krein form is degenerate on the invariant subspace of the "
                  "eigenvalue cluster at (" + std::to_string(c.value.real()) + ", " +
                      std::to_string(c.value.imag()) + ")");
    }
  }
  return spec;
}

Complex nu(const SympMatrix& w, const SpectrumTolerances& tol) {
  const KreinSpectrum spec = analyze_spectrum(w.matrix(), tol);
  int negative_real = 0;
  Complex product(1.0, 0.0);
  for (const auto& c : spec.clusters) {
    const bool real_axis = std::abs(c.value.imag()) <= tol.real * std::max(1.0, std::abs(c.value));
    if (c.location == EigenLocation::MinusOne ||
        (c.location == EigenLocation::OffCircle && real_axis && c.value.real() < 0.0)) {
      negative_real += c.alg_mult;
    }
    if (c.location != EigenLocation::UnitCircleNonReal) continue;
    if (c.degenerate) {
      throw Error(ErrorKind::SignatureDegenerate,
                  "nu is undefined: Krein form degenerate on a unit-circle eigenvalue cluster");
    }
    const Complex unit = c.value / std::abs(c.value);
    for (int k = 0; k < c.krein_signature->p; ++k) product *= unit;
  }
  if ((negative_real / 2) % 2 != 0) product = -product;
  return product / std::abs(product);
}

}  // namespace sympcausal

#include "doctest.h"

#include <algorithm>
#include <numbers>
#include <random>

#include "sympcausal/elliptic.hpp"
#include "test_support.hpp"

using namespace sympcausal;
using namespace sympcausal::testing;

namespace {

constexpr double kPi = std::numbers::pi;

double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
  REQUIRE(a.size() == b.size());
  double d = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) d = std::max(d, std::abs(a[i] - b[i]));
  return d;
}

}  // namespace

TEST_CASE("is_positively_elliptic worked examples") {
  CHECK(is_positively_elliptic(SympMatrix(rotation(kPi / 3))).elliptic);

  Matrix stretch(2, 2);
  stretch << 2, 0, 0, 0.5;
  auto check = is_positively_elliptic(SympMatrix(stretch));
  CHECK_FALSE(check.elliptic);
  CHECK(describe(check.diagnosis) == "off-circle eigenvalue");

  check = is_positively_elliptic(SympMatrix(Matrix(-Matrix::Identity(2, 2))));
  CHECK_FALSE(check.elliptic);
  CHECK(check.diagnosis == EllipticDiagnosis::EigenvalueMinusOne);

  check = is_positively_elliptic(SympMatrix(block_rotation({0.7, -0.7})));
  CHECK_FALSE(check.elliptic);
  CHECK(describe(check.diagnosis) == "indefinite Krein signature");

  // Negative rotation: Krein-negative eigenvalue in the upper half plane.
  check = is_positively_elliptic(SympMatrix(rotation(-1.0)));
  CHECK_FALSE(check.elliptic);
  CHECK(check.diagnosis == EllipticDiagnosis::IndefiniteKrein);

  CHECK_FALSE(is_positively_elliptic(SympMatrix::identity(2)).elliptic);
  CHECK(is_positively_elliptic(SympMatrix(rotation(1e-6))).elliptic);
  CHECK_FALSE(is_positively_elliptic(SympMatrix(rotation(1e-9))).elliptic);
}

TEST_CASE("elliptic_splitting worked examples") {
  const auto quarter = elliptic_splitting(SympMatrix(rotation(kPi / 2)));
  REQUIRE(quarter.angles.size() == 1);
  CHECK(quarter.angles[0] == doctest::Approx(kPi / 2).epsilon(1e-14));
  CHECK((quarter.basis - Matrix::Identity(2, 2)).norm() < 1e-14);

  const auto block = elliptic_splitting(SympMatrix(block_rotation({0.4, 2.0})));
  CHECK(max_diff(block.angles, {0.4, 2.0}) < 1e-14);
  CHECK((block.basis - Matrix::Identity(4, 4)).norm() < 1e-14);

  std::mt19937_64 rng(4);
  const Matrix s = random_symplectic(rng, 2);
  const SympMatrix w(conjugate(s, block_rotation({0.4, 2.0})));
  const auto conj = elliptic_splitting(w);
  CHECK(max_diff(conj.angles, {0.4, 2.0}) < 1e-12);
  CHECK((conj.basis - Matrix::Identity(4, 4)).norm() > 1e-3);

  Matrix stretch(2, 2);
  stretch << 2, 0, 0, 0.5;
  CHECK_THROWS_AS(elliptic_splitting(SympMatrix(stretch)), Error);
}

TEST_CASE("splitting invariants on random elliptic matrices") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 3;
    auto [w, angles] = random_elliptic(rng, n);
    if (trial % 30 == 0 && n > 1) {  // repeated angle
      std::vector<double> rep(static_cast<std::size_t>(n), 1.1);
      rep[0] = 0.3;
      w = conjugate(random_symplectic(rng, n), block_rotation(rep));
      angles = rep;
      std::sort(angles.begin(), angles.end());
    }
    const auto split = elliptic_splitting(SympMatrix(w));
    CHECK(max_diff(split.angles, angles) < 1e-9);
    const Matrix& b = split.basis;
    const Matrix om = omega_matrix(n);
    CHECK((b.transpose() * om * b - om).norm() < 1e-9 * b.squaredNorm());
    const Matrix normal = b.inverse() * w * b;
    CHECK((normal - block_rotation(split.angles)).norm() < 1e-8 * (1.0 + w.norm()));
    Matrix sum = Matrix::Zero(2 * n, 2 * n);
    for (int k = 0; k < n; ++k) {
      const Matrix jk = split.plane_structure(k);
      sum += jk;
      CHECK(cone_status(jk) == (n == 1 ? ConeStatus::Interior : ConeStatus::Boundary));
    }
    // The plane structures assemble to a compatible complex structure.
    CHECK((sum * sum + Matrix::Identity(2 * n, 2 * n)).norm() < 1e-8 * sum.squaredNorm());
    CHECK(cone_status(sum) == ConeStatus::Interior);
  }
}

TEST_CASE("log_elliptic worked examples and roundtrip") {
  const auto half = log_elliptic(SympMatrix(rotation(0.5)));
  CHECK((half.x.matrix() - 0.5 * standard_j(1).matrix()).norm() < 1e-10);
  CHECK_FALSE(half.ill_conditioned);

  const auto blocks = log_elliptic(SympMatrix(block_rotation({0.4, 2.0})));
  CHECK((blocks.x.matrix() - block_generator({0.4, 2.0})).norm() < 1e-10);
  CHECK(blocks.spectral_bound == doctest::Approx(2.0));

  CHECK(log_elliptic(SympMatrix(rotation(kPi - 1e-7))).ill_conditioned);

  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 3;
    const auto [w, angles] = random_elliptic(rng, n);
    const auto lg = log_elliptic(SympMatrix(w));
    CHECK((expm(lg.x.matrix()) - w).norm() <= 1e-8 * w.norm());
    CHECK(cone_status(lg.x) == ConeStatus::Interior);
    CHECK(max_abs_imag_eigenvalue(lg.x.matrix()) < kPi);
    CHECK(hamiltonian_asymmetry(lg.x.matrix()) < 1e-12 * lg.x.matrix().norm());
  }
}

TEST_CASE("exp of small sp+ elements is elliptic") {
  std::mt19937_64 rng(321);
  std::normal_distribution<double> normal;
  int tested = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 3;
    Matrix a(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
    Matrix x = HamElement::from_symmetric(a.transpose() * a + 1e-3 * Matrix::Identity(2 * n, 2 * n))
                   .matrix();
    const double bound = max_abs_imag_eigenvalue(x);
    x *= std::uniform_real_distribution<double>(0.05, 0.95)(rng) * kPi / bound;
    REQUIRE(max_abs_imag_eigenvalue(x) < kPi);
    CHECK(is_positively_elliptic(SympMatrix(expm(x))).elliptic);
    ++tested;
  }
  CHECK(tested == 300);
}

TEST_CASE("tau worked examples") {
  CHECK(std::abs(tau(SympMatrix(rotation(kPi / 2)))) < 1e-14);
  CHECK(tau(SympMatrix(rotation(kPi / 3))) == doctest::Approx(-std::log(2.0)).epsilon(1e-13));
  CHECK(tau(SympMatrix(block_rotation({kPi / 2, kPi / 3}))) ==
        doctest::Approx(-0.6931471805599453).epsilon(1e-13));
  CHECK(tau(SympMatrix(rotation(1e-6))) < -13.0);
  CHECK(tau(SympMatrix(rotation(kPi - 1e-6))) > 13.0);
  CHECK_THROWS_AS(tau(SympMatrix::identity(1)), Error);
}

TEST_CASE("mu_elliptic worked examples") {
  CHECK(mu_elliptic(SympMatrix(rotation(kPi / 3))) == doctest::Approx(1.0 / 6.0).epsilon(1e-14));
  CHECK(mu_elliptic(SympMatrix(block_rotation({0.4, 2.0}))) ==
        doctest::Approx(0.3819718634205488).epsilon(1e-13));
  std::mt19937_64 rng(5);
  const Matrix s = random_symplectic(rng, 2);
  const Matrix w = block_rotation({0.4, 2.0});
  CHECK(mu_elliptic(SympMatrix(conjugate(s, w))) ==
        doctest::Approx(mu_elliptic(SympMatrix(w))).epsilon(1e-12));
}

TEST_CASE("minus_inverse") {
  const SympMatrix w(rotation(0.3));
  CHECK((minus_inverse(w).matrix() - rotation(kPi - 0.3)).norm() < 1e-15);
  CHECK((minus_inverse(minus_inverse(w)).matrix() - w.matrix()).norm() == 0.0);

  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + trial % 3;
    const auto [m, angles] = random_elliptic(rng, n);
    const SympMatrix we(m);
    const SympMatrix mi = minus_inverse(we);
    std::vector<double> expected;
    for (auto it = angles.rbegin(); it != angles.rend(); ++it) expected.push_back(kPi - *it);
    CHECK(max_diff(elliptic_angles(mi), expected) < 1e-8);
    CHECK(std::abs(tau(mi) + tau(we)) < 1e-8);
    CHECK(std::abs(mu_elliptic(mi) + mu_elliptic(we) - 0.5 * n) < 1e-8);
  }
}

TEST_CASE("closure angles on the boundary") {
  const auto id = elliptic_closure_angles(SympMatrix::identity(2));
  CHECK(id == std::vector<double>{0.0, 0.0});
  const auto mixed = elliptic_closure_angles(SympMatrix(block_rotation({kPi, 0.5})));
  REQUIRE(mixed.size() == 2);
  CHECK(mixed[0] == doctest::Approx(0.5));
  CHECK(mixed[1] == doctest::Approx(kPi));
  Matrix stretch(2, 2);
  stretch << 2, 0, 0, 0.5;
  CHECK_THROWS_AS(elliptic_closure_angles(SympMatrix(stretch)), Error);
}

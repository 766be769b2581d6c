#include "doctest.h"

#include <numbers>
#include <random>

#include "sympcausal/linalg_core.hpp"
#include "test_support.hpp"

using namespace sympcausal;
using sympcausal::testing::random_symplectic;
using sympcausal::testing::rotation;

TEST_CASE("omega_matrix block form") {
  Matrix expected1(2, 2);
  expected1 << 0, 1, -1, 0;
  CHECK(omega_matrix(1) == expected1);

  Matrix expected2(4, 4);
  expected2 << 0, 0, 1, 0,
               0, 0, 0, 1,
               -1, 0, 0, 0,
               0, -1, 0, 0;
  CHECK(omega_matrix(2) == expected2);

  for (int n = 1; n <= 5; ++n) {
    const Matrix om = omega_matrix(n);
    CHECK((om * om + Matrix::Identity(2 * n, 2 * n)).norm() == 0.0);
  }
  CHECK_THROWS_AS(omega_matrix(0), Error);
}

TEST_CASE("standard J is compatible") {
  Matrix expected(2, 2);
  expected << 0, -1, 1, 0;
  CHECK(standard_j(1).matrix() == expected);
  for (int n = 1; n <= 4; ++n) {
    const Matrix j = standard_j(n).matrix();
    CHECK((omega_matrix(n) * j - Matrix::Identity(2 * n, 2 * n)).norm() == 0.0);
    CHECK((j * j + Matrix::Identity(2 * n, 2 * n)).norm() == 0.0);
  }
  CHECK(cone_status(standard_j(3)) == ConeStatus::Interior);
}

TEST_CASE("is_symplectic") {
  for (double theta : {0.0, 0.3, 1.7, -2.9, 10.0}) {
    CHECK(is_symplectic(rotation(theta)).symplectic);
  }
  Matrix stretch(2, 2);
  stretch << 2, 0, 0, 0.5;
  CHECK(is_symplectic(stretch).symplectic);

  Matrix scaled(2, 2);
  scaled << 2, 0, 0, 2;
  const auto check = is_symplectic(scaled);
  CHECK_FALSE(check.symplectic);
  // M^T Omega M = 4 Omega, residual 3 ||Omega||_F = 3 sqrt 2.
  CHECK(check.residual == doctest::Approx(3.0 * std::sqrt(2.0)));

  CHECK_THROWS_AS(is_symplectic(Matrix::Identity(3, 3)), Error);
  try {
    is_symplectic(Matrix::Identity(3, 3));
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::OddDimension);
  }
  CHECK_THROWS_AS(SympMatrix{scaled}, Error);
}

TEST_CASE("cone_status worked examples") {
  CHECK(cone_status(standard_j(1)) == ConeStatus::Interior);

  Matrix null(2, 2);
  null << 0, -1, 0, 0;
  CHECK(cone_status(null) == ConeStatus::Boundary);

  Matrix hyperbolic(2, 2);
  hyperbolic << 1, 0, 0, -1;
  CHECK(cone_status(hyperbolic) == ConeStatus::Outside);

  CHECK(cone_status(-standard_j(2)) == ConeStatus::NegativeInterior);
  CHECK(cone_status(Matrix(-null)) == ConeStatus::NegativeBoundary);
  CHECK(cone_status(Matrix::Zero(4, 4)) == ConeStatus::Zero);

  try {
    cone_status(Matrix::Identity(2, 2));
    FAIL("identity is not Hamiltonian");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotHamiltonian);
  }
}

TEST_CASE("cone_membership_tangent is right-invariant") {
  std::mt19937_64 rng(7);
  for (int n = 1; n <= 3; ++n) {
    const SympMatrix w(random_symplectic(rng, n));
    CHECK(cone_membership_tangent(w, standard_j(n).matrix() * w.matrix()) ==
          ConeStatus::Interior);
  }
  const SympMatrix w(rotation(0.3));
  CHECK(cone_membership_tangent(w, standard_j(1).matrix() * w.matrix()) ==
        ConeStatus::Interior);
  CHECK_THROWS_AS(cone_membership_tangent(w, w.matrix()), Error);
}

TEST_CASE("random interior elements, conjugation and mirror symmetry") {
  std::mt19937_64 rng(20261019);
  std::normal_distribution<double> normal;
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = 1 + trial % 3;
    Matrix a(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < a.size(); ++i) a.data()[i] = normal(rng);
    const Matrix s = a.transpose() * a + 1e-3 * Matrix::Identity(2 * n, 2 * n);
    const HamElement x = HamElement::from_symmetric(s);
    REQUIRE(cone_status(x) == ConeStatus::Interior);
    CHECK(cone_status(-x) == ConeStatus::NegativeInterior);

    if (trial % 10 == 0) {
      const SympMatrix w(random_symplectic(rng, n));
      const Matrix conj = w.matrix() * x.matrix() * w.inverse().matrix();
      CHECK(cone_status(conj) == ConeStatus::Interior);
    }
  }

  // Mirror relation for indefinite and boundary cases too.
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 3;
    Matrix s(2 * n, 2 * n);
    for (Eigen::Index i = 0; i < s.size(); ++i) s.data()[i] = normal(rng);
    if (trial % 4 == 0) {
      // rank-deficient PSD -> boundary
      Vector v(2 * n);
      for (int i = 0; i < 2 * n; ++i) v(i) = normal(rng);
      s = v * v.transpose();
    }
    const HamElement x = HamElement::from_symmetric(s);
    CHECK(cone_status(-x) == mirror(cone_status(x)));
  }
}

TEST_CASE("symplectic inverse and exponential") {
  std::mt19937_64 rng(3);
  for (int n = 1; n <= 3; ++n) {
    const SympMatrix w(random_symplectic(rng, n));
    CHECK((w.inverse().matrix() * w.matrix() - Matrix::Identity(2 * n, 2 * n)).norm() <
          1e-10);
    CHECK(w.matrix().determinant() > 0.0);
  }
  const Matrix e = expm(std::numbers::pi / 3 * standard_j(1).matrix());
  CHECK((e - rotation(std::numbers::pi / 3)).norm() < 1e-14);
}

// Copyright 2026 The holo Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>
#include <random>

#include "doctest.h"
#include "holo/errors.hpp"
#include "holo/linalg.hpp"
#include "holo/model.hpp"
#include "test_helpers.hpp"

using namespace holo;

TEST_CASE("exponential of the zero generator is the identity") {
  const OperatorMatrix u = matrix_exponential_step(OperatorMatrix::hermitian(Matrix::Zero(4, 4)), 1.0);
  CHECK(max_abs_entry(u.entries() - Matrix::Identity(4, 4)) < 1e-15);
}

TEST_CASE("full Rabi transfer between |a> and |e>") {
  const double omega = 3.7;
  Matrix h = Matrix::Zero(4, 4);
  h(kLevelE, kLevelA) = h(kLevelA, kLevelE) = omega;
  const OperatorMatrix u = matrix_exponential_step(OperatorMatrix::hermitian(h), kPi / (2.0 * omega));
  // exp(-i omega t sigma_x) at omega t = pi/2 is -i sigma_x on the {a, e} pair.
  const QuantumState a = QuantumState::basis_state(single_ion_labels(), "a");
  const QuantumState out = a.evolved(u.entries());
  CHECK(std::abs(out.amplitude("e") - Complex(0.0, -1.0)) < 1e-12);
  CHECK(std::abs(out.amplitude("a")) < 1e-12);
  CHECK(std::abs(out.amplitude("0")) < 1e-15);
}

TEST_CASE("diagonal generator only rotates phases") {
  const double energy = 2.5, dt = 0.3;
  Matrix h = Matrix::Zero(4, 4);
  h(3, 3) = energy;
  const OperatorMatrix u = matrix_exponential_step(OperatorMatrix::hermitian(h), dt);
  CHECK(std::abs(u(3, 3) - std::polar(1.0, -energy * dt)) < 1e-14);
  CHECK(std::abs(u(0, 0) - 1.0) < 1e-14);
}

TEST_CASE("exponential agrees with a Taylor-series oracle on random generators") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const int dim = trial % 2 ? 4 : 16;
    const Matrix h = testing::random_hermitian(dim, rng);
    const double dt = 0.05 + 0.1 * trial;
    const OperatorMatrix u = matrix_exponential_step(OperatorMatrix(h, true), dt);
    CHECK(max_abs_entry(u.entries() - testing::taylor_propagator(h, dt)) < 1e-11);
    CHECK(unitarity_defect(u.entries()) < 1e-12);
  }
}

TEST_CASE("exponential rejects bad input") {
  Matrix nonherm = Matrix::Zero(2, 2);
  nonherm(0, 1) = 1.0;
  CHECK_THROWS_AS(matrix_exponential_step(OperatorMatrix(nonherm), 1.0), ValidationError);
  CHECK_THROWS_WITH(matrix_exponential_step(OperatorMatrix(nonherm), 1.0),
                    doctest::Contains("max |H - H^dagger| = 1"));
  const OperatorMatrix zero = OperatorMatrix::hermitian(Matrix::Zero(2, 2));
  CHECK_THROWS_AS(matrix_exponential_step(zero, 0.0), ValidationError);
  CHECK_THROWS_AS(matrix_exponential_step(zero, -1.0), ValidationError);
  CHECK_THROWS_AS(matrix_exponential_step(zero, std::nan("")), ValidationError);
  CHECK_THROWS_AS(OperatorMatrix::hermitian(nonherm), ValidationError);
}

TEST_CASE("products of many propagators preserve the norm") {
  std::mt19937_64 rng(11);
  Vector psi = Vector::Random(4);
  psi.normalize();
  for (int k = 0; k < 10000; ++k) {
    const Matrix h = testing::random_hermitian(4, rng);
    psi = matrix_exponential_step(OperatorMatrix(h, true), 0.01).entries() * psi;
  }
  CHECK(std::abs(psi.norm() - 1.0) < 1e-9);
}

TEST_CASE("null space when only |a> couples to |e>") {
  const double omega = 1.3;
  const OperatorMatrix h = build_single_ion_hamiltonian({0.0, 0.0, omega});
  const Basis null = null_space_basis(h);
  REQUIRE(null.cols() == 2);
  // Canonical order: |0>, then |1>.
  CHECK(std::abs(null(kLevel0, 0) - 1.0) < 1e-12);
  CHECK(std::abs(null(kLevel1, 1) - 1.0) < 1e-12);
  // The remaining two eigenstates are (|a> +- |e>)/sqrt(2) at +-omega.
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h.entries());
  CHECK(solver.eigenvalues()(0) == doctest::Approx(-omega).epsilon(1e-12));
  CHECK(solver.eigenvalues()(3) == doctest::Approx(omega).epsilon(1e-12));
  CHECK(std::abs(solver.eigenvectors()(kLevelA, 3)) == doctest::Approx(std::sqrt(0.5)));
  CHECK(std::abs(solver.eigenvectors()(kLevelE, 3)) == doctest::Approx(std::sqrt(0.5)));
}

TEST_CASE("null space edge cases") {
  CHECK(null_space_basis(OperatorMatrix::identity(4)).cols() == 0);
  CHECK(null_space_basis(OperatorMatrix::hermitian(Matrix::Zero(3, 3))).cols() == 3);
  CHECK_THROWS_AS(null_space_basis(OperatorMatrix::identity(2), 0.0), ValidationError);
  CHECK_THROWS_AS(null_space_basis(OperatorMatrix::identity(2), -1.0), ValidationError);
}

TEST_CASE("null space basis is orthonormal and annihilated (random kernels)") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> normal(0.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    const SingleIonControls c{Complex(normal(rng), normal(rng)), Complex(normal(rng), normal(rng)),
                              Complex(normal(rng), normal(rng))};
    const OperatorMatrix h = build_single_ion_hamiltonian(c);
    const Basis null = null_space_basis(h);
    REQUIRE(null.cols() == 2);
    CHECK(max_abs_entry(null.adjoint() * null - Matrix::Identity(2, 2)) < 1e-12);
    const double norm = spectral_norm_hermitian(h.entries());
    for (Eigen::Index j = 0; j < null.cols(); ++j) {
      CHECK((h.entries() * null.col(j)).norm() < 10.0 * kNullTolerance * norm);
    }
  }
}

TEST_CASE("reference alignment fixes order and phases") {
  const OperatorMatrix h = build_single_ion_hamiltonian({0.0, 0.0, 1.0});
  Basis ref = Basis::Zero(4, 2);
  ref(kLevel1, 0) = std::polar(1.0, 0.4);
  ref(kLevel0, 1) = 1.0;
  const Basis aligned = null_space_basis(h, kNullTolerance, ref);
  CHECK(max_abs_entry(aligned - ref) < 1e-12);
}

TEST_CASE("subspace overlap unitary") {
  Basis a = Basis::Zero(4, 2);
  a(0, 0) = 1.0;
  a(1, 1) = 1.0;
  CHECK(max_abs_entry(subspace_overlap_unitary(a, a) - Matrix::Identity(2, 2)) < 1e-14);

  const double alpha = 0.83;
  Basis b = a;
  b.col(1) *= std::polar(1.0, alpha);
  const Matrix u = subspace_overlap_unitary(a, b);
  CHECK(std::abs(u(0, 0) - 1.0) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::polar(1.0, alpha)) < 1e-14);
  CHECK(std::abs(u(0, 1)) < 1e-14);

  // Real unit vectors at angle beta: the overlap cos(beta) has polar factor
  // of modulus one.
  for (double beta : {0.1, 0.7, 1.4}) {
    Basis x = Basis::Zero(3, 1), y = Basis::Zero(3, 1);
    x(0, 0) = 1.0;
    y(0, 0) = std::cos(beta);
    y(1, 0) = std::sin(beta);
    CHECK(std::abs(subspace_overlap_unitary(x, y)(0, 0)) == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("subspace overlap: forward then backward is the identity") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix q1 = Eigen::HouseholderQR<Matrix>(testing::random_hermitian(6, rng)).householderQ();
    const Matrix q2 = Eigen::HouseholderQR<Matrix>(testing::random_hermitian(6, rng)).householderQ();
    const Basis a = q1.leftCols(2);
    const Basis b = q2.leftCols(2);
    const Matrix prod = subspace_overlap_unitary(a, b) * subspace_overlap_unitary(b, a);
    CHECK(max_abs_entry(prod - Matrix::Identity(2, 2)) < 1e-10);
  }
}

TEST_CASE("singular overlap is reported with its position") {
  Basis a = Basis::Zero(3, 1), b = Basis::Zero(3, 1);
  a(0, 0) = 1.0;
  b(1, 0) = 1.0;
  try {
    subspace_overlap_unitary(a, b, 0.375);
    FAIL("expected NumericalError");
  } catch (const NumericalError& e) {
    CHECK(e.where() == 0.375);
  }
}

TEST_CASE("quantum state labels") {
  CHECK(two_ion_labels().size() == 16);
  CHECK(two_ion_labels()[two_ion_index(kLevel1, kLevel1)] == "11");
  CHECK(two_ion_labels()[two_ion_index(kLevelA, kLevelE)] == "ae");
  CHECK_THROWS_AS(QuantumState::basis_state(single_ion_labels(), "x"), ValidationError);
  CHECK_THROWS_AS(QuantumState(Vector::Zero(3), single_ion_labels()), ValidationError);
}

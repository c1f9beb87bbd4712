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
#include "holo/gates.hpp"
#include "test_helpers.hpp"

using namespace holo;
using holo::testing::taylor_propagator;

namespace {

Matrix projector_one() {
  Matrix p = Matrix::Zero(2, 2);
  p(1, 1) = 1.0;
  return p;
}

// Brute-force minimum of ||A - e^{i alpha} B|| over a fine grid plus a local
// golden-section refinement.
double grid_min_distance(const Matrix& a, const Matrix& b) {
  auto f = [&](double alpha) { return (a - std::polar(1.0, alpha) * b).norm(); };
  double best_alpha = 0.0, best = f(0.0);
  for (int i = 1; i < 3600; ++i) {
    const double alpha = 2.0 * kPi * i / 3600.0;
    if (f(alpha) < best) best = f(alpha), best_alpha = alpha;
  }
  double lo = best_alpha - 2.0 * kPi / 3600.0, hi = best_alpha + 2.0 * kPi / 3600.0;
  const double g = (std::sqrt(5.0) - 1.0) / 2.0;
  for (int i = 0; i < 200; ++i) {
    const double m1 = hi - g * (hi - lo), m2 = lo + g * (hi - lo);
    if (f(m1) < f(m2)) hi = m2; else lo = m1;
  }
  return f(0.5 * (lo + hi));
}

}  // namespace

TEST_CASE("analytic gates match exponentials of their generators") {
  for (double p : {-2.5, -0.4, 0.0, 0.7, kPi / 2.0, 3.0}) {
    CAPTURE(p);
    // exp(i p G) = exp(-i (-G) p)
    CHECK(max_abs_entry(analytic_gate_matrix(GateKind::kU1, p) - taylor_propagator(-projector_one(), p)) < 1e-13);
    CHECK(max_abs_entry(analytic_gate_matrix(GateKind::kU2, p) - taylor_propagator(-pauli_y(), p)) < 1e-13);
    Matrix p11 = Matrix::Zero(4, 4);
    p11(3, 3) = 1.0;
    CHECK(max_abs_entry(analytic_gate_matrix(GateKind::kU3, p) - taylor_propagator(-p11, p)) < 1e-13);
    for (GateKind k : {GateKind::kU1, GateKind::kU2, GateKind::kU3}) {
      CHECK(unitarity_defect(analytic_gate(k, p).matrix) < 1e-15);
    }
  }
  const Matrix u2 = analytic_gate_matrix(GateKind::kU2, 0.3);
  CHECK(u2(0, 1).real() == doctest::Approx(std::sin(0.3)));
  CHECK(u2(1, 0).real() == doctest::Approx(-std::sin(0.3)));
}

TEST_CASE("gates form one-parameter groups") {
  for (GateKind k : {GateKind::kU1, GateKind::kU2, GateKind::kU3}) {
    CHECK(max_abs_entry(analytic_gate_matrix(k, 0.4) * analytic_gate_matrix(k, 1.1) -
                        analytic_gate_matrix(k, 1.5)) < 1e-15);
  }
}

TEST_CASE("gate fidelity and phase-aligned distance") {
  const Matrix u = analytic_gate_matrix(GateKind::kU2, 0.8);
  CHECK(gate_fidelity(u, u) == doctest::Approx(1.0));
  CHECK(gate_fidelity(u, std::polar(1.0, 1.3) * u) == doctest::Approx(1.0));
  Matrix z = Matrix::Identity(2, 2);
  z(1, 1) = -1.0;
  CHECK(gate_fidelity(Matrix::Identity(2, 2), z) < 1e-16);
  CHECK_THROWS_AS(gate_fidelity(u, Matrix::Identity(4, 4)), ValidationError);

  std::mt19937_64 rng(3);
  for (int i = 0; i < 10; ++i) {
    const Matrix a = haar_random_unitary(2, rng);
    const Matrix b = 0.9 * haar_random_unitary(2, rng);
    CHECK(phase_aligned_distance(a, b) == doctest::Approx(grid_min_distance(a, b)).epsilon(1e-9));
  }
  CHECK(phase_aligned_distance(u, std::polar(1.0, 2.0) * u) < 1e-7);
}

TEST_CASE("noncommutativity witness") {
  CHECK(noncommutativity_witness(0.0, 1.0) < 1e-15);
  CHECK(noncommutativity_witness(1.0, 0.0) < 1e-15);
  // U1(pi/2) = diag(1, i), U2(pi/2) = [[0, 1], [-1, 0]]: the commutator is
  // [[0, -1 + i], [-1 + i, 0]], Frobenius norm 2.
  CHECK(noncommutativity_witness(kPi / 2.0, kPi / 2.0) == doctest::Approx(2.0));
  CHECK(noncommutativity_witness(kPi / 2.0, kPi / 2.0) > 0.1);
}

TEST_CASE("gate angle recovers the analytic phase") {
  for (double p : {-3.0, -1.0, 0.0, 0.25, 1.4, 3.1}) {
    const Complex g = std::polar(1.0, 0.7);
    CHECK(gate_angle(GateKind::kU1, g * analytic_gate_matrix(GateKind::kU1, p)) == doctest::Approx(p));
    CHECK(gate_angle(GateKind::kU3, g * analytic_gate_matrix(GateKind::kU3, p)) == doctest::Approx(p));
  }
  // U2 has period 2 pi in the rotation angle but a global sign of -1 at pi,
  // so the angle is defined modulo pi once the global phase is stripped.
  for (double p : {-1.5, -0.3, 0.0, 0.9, 1.5}) {
    CHECK(gate_angle(GateKind::kU2, std::polar(1.0, -0.4) * analytic_gate_matrix(GateKind::kU2, p)) ==
          doctest::Approx(p));
  }
}

TEST_CASE("circuit composition order and qubit embedding") {
  const Circuit c{{GateKind::kU2, 0.3, {0}}, {GateKind::kU1, 1.1, {0}}};
  CHECK(max_abs_entry(compose_circuit(c, 1) - analytic_gate_matrix(GateKind::kU1, 1.1) *
                                                  analytic_gate_matrix(GateKind::kU2, 0.3)) < 1e-15);
  const Complex e = std::polar(1.0, 0.5);
  Matrix on0 = compose_circuit({{GateKind::kU1, 0.5, {0}}}, 2);
  Matrix on1 = compose_circuit({{GateKind::kU1, 0.5, {1}}}, 2);
  CHECK(std::abs(on0(1, 1) - 1.0) < 1e-15);
  CHECK(std::abs(on0(2, 2) - e) < 1e-15);
  CHECK(std::abs(on1(1, 1) - e) < 1e-15);
  CHECK(std::abs(on1(2, 2) - 1.0) < 1e-15);
  CHECK(std::abs(on0(3, 3) - e) < 1e-15);
  CHECK_THROWS_AS(compose_circuit({{GateKind::kU3, 1.0, {0, 1}}}, 1), ValidationError);
  CHECK_THROWS_AS(compose_circuit({{GateKind::kU1, 1.0, {2}}}, 2), ValidationError);
}

TEST_CASE("single-qubit synthesis") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 200; ++i) {
    const Matrix target = haar_random_unitary(2, rng);
    const Circuit c = synthesize_single_qubit(target);
    CHECK(c.size() <= 3);
    CHECK(gate_fidelity(compose_circuit(c, 1), target) > 1.0 - 1e-12);
  }
  CHECK(synthesize_single_qubit(Matrix::Identity(2, 2)).empty());
  CHECK(synthesize_single_qubit(std::polar(1.0, 0.3) * Matrix::Identity(2, 2)).empty());
  const Circuit single = synthesize_single_qubit(analytic_gate_matrix(GateKind::kU1, 0.3));
  REQUIRE(single.size() == 1);
  CHECK(single[0].kind == GateKind::kU1);
  CHECK(single[0].phase == doctest::Approx(0.3));
  CHECK(synthesize_single_qubit(analytic_gate_matrix(GateKind::kU2, 0.6)).size() == 1);
  CHECK(gate_fidelity(compose_circuit(synthesize_single_qubit(hadamard()), 1), hadamard()) >
        1.0 - 1e-14);

  Matrix bad = Matrix::Identity(2, 2);
  bad(0, 1) = 0.1;
  CHECK_THROWS_AS(synthesize_single_qubit(bad), ValidationError);
  CHECK_THROWS_AS(synthesize_single_qubit(Matrix::Identity(4, 4)), ValidationError);
}

TEST_CASE("CNOT from Hadamards around U3(pi)") {
  const Circuit c = controlled_not_construction();
  const Matrix m = compose_circuit(c, 2);
  CHECK(gate_fidelity(m, cnot_matrix()) > 1.0 - 1e-12);
  // Control is qubit 0: |10> -> |11>, |01> unchanged.
  CHECK(std::abs(std::abs(m(3, 2)) - 1.0) < 1e-12);
  CHECK(std::abs(std::abs(m(1, 1)) - 1.0) < 1e-12);
  for (const auto& op : c) {
    if (op.kind != GateKind::kU3) CHECK(op.qubits == std::vector<int>{1});
  }
  CHECK(!describe(c).empty());
}

TEST_CASE("Haar unitaries") {
  std::mt19937_64 rng(5);
  double mean = 0.0;
  const int n = 4000;
  for (int i = 0; i < n; ++i) {
    const Matrix u = haar_random_unitary(2, rng);
    CHECK(unitarity_defect(u) < 1e-14);
    mean += std::norm(u(0, 0));
  }
  // |U00|^2 is uniform on [0, 1] for Haar SU(2): mean 1/2, sd 1/sqrt(12 n).
  CHECK(std::abs(mean / n - 0.5) < 5.0 / std::sqrt(12.0 * n));
  CHECK(unitarity_defect(haar_random_unitary(4, rng)) < 1e-14);
}

TEST_CASE("gate kind names") {
  for (GateKind k : {GateKind::kU1, GateKind::kU2, GateKind::kU3}) {
    CHECK(parse_gate_kind(to_string(k)) == k);
  }
  CHECK_THROWS_AS(parse_gate_kind("U4"), ValidationError);
}

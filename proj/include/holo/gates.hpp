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

// Analytic holonomic gates, comparison metrics and circuit synthesis.
//
//   U1(p) = exp(i p |1><1|)          = diag(1, e^{ip})
//   U2(p) = exp(i p sigma_y)         = cos p I + i sin p sigma_y
//   U3(p) = exp(i p |11><11|)        = diag(1, 1, 1, e^{ip})
//
// with sigma_y = i(|1><0| - |0><1|). Two-qubit matrices use the basis
// |00>, |01>, |10>, |11> with qubit 0 most significant.

#pragma once

#include <functional>
#include <random>
#include <string>
#include <vector>

#include "holo/linalg.hpp"

namespace holo {

enum class GateKind { kU1, kU2, kU3 };

std::string to_string(GateKind kind);
GateKind parse_gate_kind(const std::string& name);

struct GateTarget {
  GateKind kind;
  double phase;
  Matrix matrix;
};

GateTarget analytic_gate(GateKind kind, double phase);

Matrix pauli_y();
Matrix hadamard();
Matrix cnot_matrix();

// |Tr(A^dagger B)| / d. Insensitive to a global phase, sensitive to relative
// phases. Throws on shape mismatch.
double gate_fidelity(const Matrix& a, const Matrix& b);

// min over alpha of ||A - e^{i alpha} B||_F.
double phase_aligned_distance(const Matrix& a, const Matrix& b);

// ||U1(phase1) U2(phase2) - U2(phase2) U1(phase1)||_F.
double noncommutativity_witness(double phase1, double phase2);

// Gate angle of a (possibly leaky) holonomy, principal branch (-pi, pi].
// U1: arg h11 - arg h00. U2: rotation angle of the real-rotation part.
// U3: arg h33 - arg h00.
double gate_angle(GateKind kind, const Matrix& holonomy);

struct GateOp {
  GateKind kind;
  double phase;
  std::vector<int> qubits;
};

// Ordered first-acting-first; composed right to left.
using Circuit = std::vector<GateOp>;

// Returns the 2x2 (U1, U2) or 4x4 (U3) matrix realizing a gate.
using GateProvider = std::function<Matrix(GateKind, double)>;

Matrix analytic_gate_matrix(GateKind kind, double phase);

// Full matrix of a circuit on `num_qubits` (1 or 2) qubits.
Matrix compose_circuit(const Circuit& circuit, int num_qubits,
                       const GateProvider& provider = analytic_gate_matrix);

// Z-Y-Z Euler decomposition into at most three U1/U2 gates on `qubit`.
// Rotations that are trivial up to global phase are dropped. Rejects
// non-unitary targets; throws NumericalError if recomposition misses
// fidelity 1 - tol.
Circuit synthesize_single_qubit(const Matrix& target, double tol = 1e-10, int qubit = 0);

// CNOT (control qubit 0, target qubit 1) as H_1 . U3(pi) . H_1 with the
// Hadamards synthesized from U1/U2.
Circuit controlled_not_construction();

// Haar-distributed unitary of the given dimension.
Matrix haar_random_unitary(int dim, std::mt19937_64& rng);

std::string describe(const Circuit& circuit);

}  // namespace holo

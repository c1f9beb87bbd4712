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

#include "holo/gates.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "holo/errors.hpp"

namespace holo {

namespace {

// Distance of x from the nearest multiple of period.
double off_period(double x, double period) {
  const double r = std::remainder(x, period);
  return std::abs(r);
}

Matrix embed(const Matrix& gate, const std::vector<int>& qubits, int num_qubits) {
  if (num_qubits == 1) {
    if (gate.rows() != 2 || qubits != std::vector<int>{0}) {
      throw ValidationError("single-qubit circuit can only hold one-qubit gates on qubit 0");
    }
    return gate;
  }
  const Matrix id = Matrix::Identity(2, 2);
  if (gate.rows() == 4) {
    if (qubits != std::vector<int>{0, 1}) throw ValidationError("two-qubit gate needs qubits {0, 1}");
    return gate;
  }
  if (qubits.size() != 1 || (qubits[0] != 0 && qubits[0] != 1)) {
    throw ValidationError("one-qubit gate needs a single qubit index 0 or 1");
  }
  return qubits[0] == 0 ? Matrix(Eigen::kroneckerProduct(gate, id))
                        : Matrix(Eigen::kroneckerProduct(id, gate));
}

}  // namespace

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kU1: return "U1";
    case GateKind::kU2: return "U2";
    case GateKind::kU3: return "U3";
  }
  return "?";
}

GateKind parse_gate_kind(const std::string& name) {
  if (name == "U1" || name == "u1") return GateKind::kU1;
  if (name == "U2" || name == "u2") return GateKind::kU2;
  if (name == "U3" || name == "u3") return GateKind::kU3;
  throw ValidationError("unknown gate kind '" + name + "' (expected U1, U2 or U3)");
}

Matrix pauli_y() {
  Matrix y(2, 2);
  y << 0.0, -kI, kI, 0.0;
  return y;
}

Matrix hadamard() {
  Matrix h(2, 2);
  h << 1.0, 1.0, 1.0, -1.0;
  return h / std::sqrt(2.0);
}

Matrix cnot_matrix() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = 1.0;
  m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Matrix analytic_gate_matrix(GateKind kind, double phase) {
  switch (kind) {
    case GateKind::kU1: {
      Matrix m = Matrix::Identity(2, 2);
      m(1, 1) = std::polar(1.0, phase);
      return m;
    }
    case GateKind::kU2:
      return std::cos(phase) * Matrix::Identity(2, 2) + kI * std::sin(phase) * pauli_y();
    case GateKind::kU3: {
      Matrix m = Matrix::Identity(4, 4);
      m(3, 3) = std::polar(1.0, phase);
      return m;
    }
  }
  throw ValidationError("unknown gate kind");
}

GateTarget analytic_gate(GateKind kind, double phase) {
  return GateTarget{kind, phase, analytic_gate_matrix(kind, phase)};
}

double gate_fidelity(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw ValidationError("gate_fidelity: operators must be square with equal dimensions");
  }
  return std::abs((a.adjoint() * b).trace()) / static_cast<double>(a.rows());
}

double phase_aligned_distance(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("phase_aligned_distance: shape mismatch");
  }
  // The minimizing phase aligns Tr(A^dagger e^{i alpha} B) with the real axis.
  // Evaluating the norm there avoids cancellation in |A|^2 + |B|^2 - 2|Tr|.
  const Complex overlap = (b.adjoint() * a).trace();
  const Complex align = std::abs(overlap) > 0.0 ? overlap / std::abs(overlap) : Complex(1.0);
  return (a - align * b).norm();
}

double noncommutativity_witness(double phase1, double phase2) {
  const Matrix u1 = analytic_gate_matrix(GateKind::kU1, phase1);
  const Matrix u2 = analytic_gate_matrix(GateKind::kU2, phase2);
  return (u1 * u2 - u2 * u1).norm();
}

double gate_angle(GateKind kind, const Matrix& h) {
  switch (kind) {
    case GateKind::kU1:
      return std::arg(h(1, 1) * std::conj(h(0, 0)));
    case GateKind::kU2: {
      // h ~ g [[c, s], [-s, c]]; strip the global phase g via sqrt(det).
      const Complex g = std::sqrt(h.determinant());
      const Complex c = 0.5 * (h(0, 0) + h(1, 1)) / g;
      const Complex s = 0.5 * (h(0, 1) - h(1, 0)) / g;
      return std::atan2(s.real(), c.real());
    }
    case GateKind::kU3:
      return std::arg(h(3, 3) * std::conj(h(0, 0)));
  }
  return 0.0;
}

Matrix compose_circuit(const Circuit& circuit, int num_qubits, const GateProvider& provider) {
  if (num_qubits != 1 && num_qubits != 2) {
    throw ValidationError("compose_circuit supports one or two qubits");
  }
  const Eigen::Index dim = num_qubits == 1 ? 2 : 4;
  Matrix total = Matrix::Identity(dim, dim);
  for (const auto& op : circuit) {
    total = embed(provider(op.kind, op.phase), op.qubits, num_qubits) * total;
  }
  return total;
}

Circuit synthesize_single_qubit(const Matrix& target, double tol, int qubit) {
  if (target.rows() != 2 || target.cols() != 2) {
    throw ValidationError("synthesize_single_qubit needs a 2x2 target");
  }
  const double defect = unitarity_defect(target);
  if (!(defect < 1e-8)) {
    std::ostringstream msg;
    msg << "synthesize_single_qubit: target is not unitary (defect " << defect << ")";
    throw ValidationError(msg.str());
  }
  // Reduce to SU(2): [[a, -b*], [b, a*]] = Rz(beta) Ry(gamma) Rz(delta), with
  // a = e^{-i(beta+delta)/2} cos(gamma/2), b = e^{i(beta-delta)/2} sin(gamma/2).
  const Matrix v = target / std::sqrt(target.determinant());
  const Complex a = v(0, 0);
  const Complex b = v(1, 0);
  const double gamma = 2.0 * std::atan2(std::abs(b), std::abs(a));
  // At gamma = 0 or pi only one of beta +- delta is defined; putting the
  // free one equal to the other folds everything into a single rotation.
  double sum = std::abs(a) > 1e-12 ? -2.0 * std::arg(a) : 0.0;
  double diff = std::abs(b) > 1e-12 ? 2.0 * std::arg(b) : 0.0;
  if (std::abs(b) <= 1e-12) diff = -sum;
  if (std::abs(a) <= 1e-12) sum = diff;
  const double beta = 0.5 * (sum + diff);
  const double delta = 0.5 * (sum - diff);

  // Rz(x) equals U1(x) up to global phase; Ry(gamma) = U2(-gamma/2). Since
  // Rz(pi) Ry(gamma) Rz(-pi) = Ry(-gamma), (beta - pi, -gamma, delta + pi) is
  // an equivalent decomposition; keep whichever needs fewer gates.
  constexpr double kTrivial = 1e-13;
  auto build = [&](double b_angle, double g_angle, double d_angle) {
    Circuit c;
    if (off_period(d_angle, 2.0 * kPi) > kTrivial) c.push_back({GateKind::kU1, d_angle, {qubit}});
    if (off_period(-0.5 * g_angle, kPi) > kTrivial) {
      c.push_back({GateKind::kU2, -0.5 * g_angle, {qubit}});
    }
    if (off_period(b_angle, 2.0 * kPi) > kTrivial) c.push_back({GateKind::kU1, b_angle, {qubit}});
    return c;
  };
  Circuit out = build(beta, gamma, delta);
  Circuit alt = build(std::remainder(beta - kPi, 2.0 * kPi), -gamma,
                      std::remainder(delta + kPi, 2.0 * kPi));
  if (alt.size() < out.size()) out = std::move(alt);

  Circuit local = out;
  for (auto& op : local) op.qubits = {0};
  const double fidelity = gate_fidelity(compose_circuit(local, 1), target);
  if (!(fidelity > 1.0 - tol)) {
    std::ostringstream msg;
    msg << "single-qubit synthesis reached fidelity " << fidelity << " only";
    throw NumericalError(msg.str(), 0.0);
  }
  return out;
}

Circuit controlled_not_construction() {
  const Circuit h = synthesize_single_qubit(hadamard(), 1e-12, 1);
  Circuit out = h;
  out.push_back({GateKind::kU3, kPi, {0, 1}});
  out.insert(out.end(), h.begin(), h.end());
  return out;
}

Matrix haar_random_unitary(int dim, std::mt19937_64& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix z(dim, dim);
  for (int r = 0; r < dim; ++r) {
    for (int c = 0; c < dim; ++c) z(r, c) = Complex(normal(rng), normal(rng));
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  const Matrix rmat = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int i = 0; i < dim; ++i) {
    const Complex d = rmat(i, i);
    q.col(i) *= d / std::abs(d);
  }
  return q;
}

std::string describe(const Circuit& circuit) {
  std::ostringstream out;
  out.precision(17);
  for (std::size_t i = 0; i < circuit.size(); ++i) {
    if (i) out << " ; ";
    out << to_string(circuit[i].kind) << "(" << circuit[i].phase << ")@";
    for (std::size_t q = 0; q < circuit[i].qubits.size(); ++q) {
      out << (q ? "," : "") << circuit[i].qubits[q];
    }
  }
  return out.str();
}

}  // namespace holo

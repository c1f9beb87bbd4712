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

#include "holo/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

namespace {

constexpr double kHermitianTolerance = 1e-12;
constexpr double kSingularOverlap = 1e-8;

std::vector<std::string> make_two_ion_labels() {
  std::vector<std::string> out;
  for (const auto& a : single_ion_labels()) {
    for (const auto& b : single_ion_labels()) out.push_back(a + b);
  }
  return out;
}

// Gram-Schmidt over the projections of the standard basis vectors onto the
// column span of `null`.
Basis canonical_basis(const Matrix& null) {
  const Eigen::Index d = null.rows();
  const Eigen::Index k = null.cols();
  Basis out(d, k);
  Eigen::Index filled = 0;
  for (Eigen::Index i = 0; i < d && filled < k; ++i) {
    Vector v = null * null.row(i).adjoint();
    for (Eigen::Index j = 0; j < filled; ++j) {
      v -= out.col(j) * out.col(j).dot(v);
    }
    const double n = v.norm();
    if (n < 1e-6) continue;
    v /= n;
    // The i-th component of the projected vector is real and positive by
    // construction; re-phase to remove rounding.
    const Complex lead = v(i);
    if (std::abs(lead) > 0.0) v *= std::conj(lead) / std::abs(lead);
    out.col(filled++) = v;
  }
  return out.leftCols(filled);
}

}  // namespace

QuantumState::QuantumState(Vector amplitudes, std::vector<std::string> labels)
    : amplitudes_(std::move(amplitudes)), labels_(std::move(labels)) {
  if (static_cast<Eigen::Index>(labels_.size()) != amplitudes_.size()) {
    throw ValidationError("QuantumState: label count does not match dimension");
  }
}

QuantumState QuantumState::basis_state(const std::vector<std::string>& labels,
                                       const std::string& label) {
  const auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) throw ValidationError("unknown basis label '" + label + "'");
  Vector v = Vector::Zero(static_cast<Eigen::Index>(labels.size()));
  v(it - labels.begin()) = 1.0;
  return QuantumState(std::move(v), labels);
}

Complex QuantumState::amplitude(const std::string& label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) throw ValidationError("unknown basis label '" + label + "'");
  return amplitudes_(it - labels_.begin());
}

QuantumState QuantumState::evolved(const Matrix& propagator) const {
  if (propagator.rows() != dimension() || propagator.cols() != dimension()) {
    throw ValidationError("propagator dimension does not match state dimension");
  }
  return QuantumState(propagator * amplitudes_, labels_);
}

const std::vector<std::string>& single_ion_labels() {
  static const std::vector<std::string> labels{"0", "1", "a", "e"};
  return labels;
}

const std::vector<std::string>& two_ion_labels() {
  static const std::vector<std::string> labels = make_two_ion_labels();
  return labels;
}

OperatorMatrix::OperatorMatrix(Matrix entries, bool hermitian_flag)
    : entries_(std::move(entries)), hermitian_(hermitian_flag) {
  if (entries_.rows() != entries_.cols()) {
    throw ValidationError("OperatorMatrix must be square");
  }
}

OperatorMatrix OperatorMatrix::hermitian(Matrix entries) {
  const double asym = hermitian_asymmetry(entries);
  if (!(asym < kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "matrix is not hermitian: max |M - M^dagger| = " << asym;
    throw ValidationError(msg.str());
  }
  return OperatorMatrix(std::move(entries), true);
}

OperatorMatrix OperatorMatrix::identity(Eigen::Index dim) {
  return OperatorMatrix(Matrix::Identity(dim, dim), true);
}

OperatorMatrix OperatorMatrix::operator*(const OperatorMatrix& rhs) const {
  if (dimension() != rhs.dimension()) throw ValidationError("operator dimension mismatch");
  return OperatorMatrix(entries_ * rhs.entries_);
}

double max_abs_entry(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

double hermitian_asymmetry(const Matrix& m) {
  if (m.rows() != m.cols()) return std::numeric_limits<double>::infinity();
  return max_abs_entry(m - m.adjoint());
}

double unitarity_defect(const Matrix& u) {
  return max_abs_entry(u.adjoint() * u - Matrix::Identity(u.cols(), u.cols()));
}

double spectral_norm_hermitian(const Matrix& h) {
  if (h.size() == 0) return 0.0;
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h, Eigen::EigenvaluesOnly);
  return solver.eigenvalues().cwiseAbs().maxCoeff();
}

OperatorMatrix matrix_exponential_step(const OperatorMatrix& hamiltonian, double dt) {
  if (!std::isfinite(dt) || dt <= 0.0) {
    std::ostringstream msg;
    msg << "time step must be finite and positive, got " << dt;
    throw ValidationError(msg.str());
  }
  const Matrix& h = hamiltonian.entries();
  const double asym = hermitian_asymmetry(h);
  if (!(asym < kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "matrix_exponential_step needs a hermitian generator: max |H - H^dagger| = " << asym;
    throw ValidationError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Matrix& vecs = solver.eigenvectors();
  Vector phases(lambda.size());
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    phases(i) = std::polar(1.0, -lambda(i) * dt);
  }
  return OperatorMatrix(vecs * phases.asDiagonal() * vecs.adjoint());
}

Basis null_space_basis(const OperatorMatrix& hamiltonian, double tol,
                       const std::optional<Basis>& reference) {
  if (!std::isfinite(tol) || tol <= 0.0) {
    throw ValidationError("null_space_basis: tolerance must be positive");
  }
  const Matrix& h = hamiltonian.entries();
  const double asym = hermitian_asymmetry(h);
  if (!(asym < kHermitianTolerance)) {
    std::ostringstream msg;
    msg << "null_space_basis needs a hermitian matrix: max |H - H^dagger| = " << asym;
    throw ValidationError(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(h);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const double scale = lambda.size() ? lambda.cwiseAbs().maxCoeff() : 0.0;
  const double threshold = tol * scale;

  std::vector<Eigen::Index> kept;
  for (Eigen::Index i = 0; i < lambda.size(); ++i) {
    if (std::abs(lambda(i)) <= threshold) kept.push_back(i);
  }
  Matrix null(h.rows(), static_cast<Eigen::Index>(kept.size()));
  for (std::size_t j = 0; j < kept.size(); ++j) {
    null.col(static_cast<Eigen::Index>(j)) = solver.eigenvectors().col(kept[j]);
  }
  if (null.cols() == 0) return null;

  if (reference && reference->rows() == null.rows() && reference->cols() == null.cols()) {
    double smallest = 0.0;
    const Matrix align = polar_unitary(null.adjoint() * *reference, &smallest);
    if (smallest > kSingularOverlap) return null * align;
  }
  return canonical_basis(null);
}

Matrix polar_unitary(const Matrix& m, double* min_singular_value) {
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  if (min_singular_value) {
    *min_singular_value =
        svd.singularValues().size() ? svd.singularValues().minCoeff() : 0.0;
  }
  return svd.matrixU() * svd.matrixV().adjoint();
}

Matrix subspace_overlap_unitary(const Basis& a, const Basis& b, double where) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw ValidationError("subspace_overlap_unitary: bases must have equal shape");
  }
  double smallest = 0.0;
  Matrix u = polar_unitary(a.adjoint() * b, &smallest);
  if (smallest < kSingularOverlap) {
    std::ostringstream msg;
    msg << "singular subspace overlap (smallest singular value " << smallest
        << ") at s = " << where;
    throw NumericalError(msg.str(), where);
  }
  return u;
}

}  // namespace holo

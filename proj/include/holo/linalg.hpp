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

// Dense complex linear algebra used by every other module.
//
// Units: Hamiltonians are in angular-frequency units (rad/s, hbar = 1) and
// times are in seconds, so a propagator over dt is exp(-i H dt).

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace holo {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

// Columns are orthonormal states of a subspace. Column order is meaningful:
// holonomies are expressed in it.
using Basis = Eigen::MatrixXcd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr Complex kI{0.0, 1.0};

// Default degeneracy tolerance for null-space extraction, relative to ||H||.
inline constexpr double kNullTolerance = 1e-9;

// Amplitude vector over a labelled product basis of ion levels.
class QuantumState {
 public:
  QuantumState(Vector amplitudes, std::vector<std::string> labels);

  // Basis state |label>; throws if the label is unknown.
  static QuantumState basis_state(const std::vector<std::string>& labels,
                                  const std::string& label);

  const Vector& amplitudes() const { return amplitudes_; }
  const std::vector<std::string>& labels() const { return labels_; }
  Eigen::Index dimension() const { return amplitudes_.size(); }
  double norm() const { return amplitudes_.norm(); }
  Complex amplitude(const std::string& label) const;

  QuantumState evolved(const Matrix& propagator) const;

 private:
  Vector amplitudes_;
  std::vector<std::string> labels_;
};

// Level labels for one ion (|0>, |1>, |a>, |e>) and for two ions.
const std::vector<std::string>& single_ion_labels();
const std::vector<std::string>& two_ion_labels();

// Dense square operator. `hermitian()` records that the entries were checked
// (or constructed) to satisfy M = M^dagger.
class OperatorMatrix {
 public:
  OperatorMatrix() = default;
  explicit OperatorMatrix(Matrix entries, bool hermitian_flag = false);

  // Checks max |M - M^dagger| < 1e-12 and tags the result.
  static OperatorMatrix hermitian(Matrix entries);
  static OperatorMatrix identity(Eigen::Index dim);

  const Matrix& entries() const { return entries_; }
  Eigen::Index dimension() const { return entries_.rows(); }
  bool hermitian() const { return hermitian_; }
  Complex operator()(Eigen::Index r, Eigen::Index c) const { return entries_(r, c); }

  OperatorMatrix operator*(const OperatorMatrix& rhs) const;

 private:
  Matrix entries_;
  bool hermitian_ = false;
};

double max_abs_entry(const Matrix& m);
double hermitian_asymmetry(const Matrix& m);
// max |U^dagger U - I| entry.
double unitarity_defect(const Matrix& u);
// Largest-magnitude eigenvalue of a hermitian matrix (spectral norm).
double spectral_norm_hermitian(const Matrix& h);

// exp(-i H dt) for hermitian H. Rejects non-hermitian H (reporting the
// asymmetry) and non-positive or non-finite dt.
OperatorMatrix matrix_exponential_step(const OperatorMatrix& hamiltonian, double dt);

// Orthonormal basis of the eigenspace with |lambda| <= tol * ||H||.
//
// With a reference basis of matching width, the result is rotated within the
// null space to maximal overlap with it (polar alignment), which fixes both
// column order and phases. Otherwise (or when the overlap with the reference
// is singular) the basis is canonical: Gram-Schmidt over the projections of
// |0>, |1>, ... onto the null space, so columns are ordered by their first
// nonzero component and that component is real and positive.
Basis null_space_basis(const OperatorMatrix& hamiltonian, double tol = kNullTolerance,
                       const std::optional<Basis>& reference = std::nullopt);

// Unitary polar factor of a square matrix (closest unitary in Frobenius norm).
// `min_singular_value`, when given, receives the smallest singular value.
Matrix polar_unitary(const Matrix& m, double* min_singular_value = nullptr);

// Polar factor of the overlap M_ab = <A_a|B_b>. Throws NumericalError when
// the smallest singular value of M is below 1e-8 (`where` is forwarded).
Matrix subspace_overlap_unitary(const Basis& a, const Basis& b, double where = 0.0);

}  // namespace holo

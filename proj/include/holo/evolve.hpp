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

// Adiabatic transport around control loops and holonomy extraction.
//
// Two independent routes to the same gate:
//  * adiabatic_propagate / adiabatic_holonomy integrate the Schroedinger
//    equation for a finite duration T (rad/s Hamiltonians, seconds);
//  * wilson_line_holonomy parallel-transports the numerically extracted dark
//    subspace around the loop and does not depend on T at all.

#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "holo/gates.hpp"
#include "holo/linalg.hpp"
#include "holo/loops.hpp"
#include "holo/model.hpp"

namespace holo {

// Parameters of the two-ion interaction that are not set by the loop.
struct TwoIonCoupling {
  double eta = 0.1;    // Lamb-Dicke parameter
  double delta = 1.0;  // rad/s
};

// A gate construction: Hamiltonian family, tracked dark subspace and the
// closed-form dark frame used to unwrap accumulated phases.
//
//  U1: single ion, tracked basis {|0>, dark state in span{|1>,|a>}}.
//  U2: single ion, tracked basis = the two-dimensional null space.
//  U3: two ions, tracked basis {|00>, |01>, |10>, dark state of the
//      {|11>, |aa>, |ee>} block}; the other 13 states are audited for zero
//      coupling to that block.
class GateSystem {
 public:
  explicit GateSystem(GateKind kind, TwoIonCoupling coupling = {});

  GateKind kind() const { return kind_; }
  const TwoIonCoupling& coupling() const { return coupling_; }
  int dimension() const { return kind_ == GateKind::kU3 ? 16 : 4; }
  int tracked_dimension() const { return kind_ == GateKind::kU3 ? 4 : 2; }
  std::vector<std::string> tracked_labels() const;

  OperatorMatrix hamiltonian(const LoopPoint& p) const;

  // Numerical dark basis (null-space extraction), optionally aligned to a
  // reference of the same shape.
  Basis dark_basis(const LoopPoint& p, const std::optional<Basis>& reference = std::nullopt) const;

  // Closed-form dark frame, single valued on the sphere and equal to the
  // computational basis at theta = 0.
  Basis analytic_frame(const LoopPoint& p) const;

  Basis computational_basis() const;

  // Energy gap protecting the tracked subspace: Omega for U1/U2,
  // eta^2 Omega^2/|delta| for U3.
  double gap(double omega_scale) const;

  // U3 only: largest |H(r, c)| between the {11, aa, ee} block and the rest
  // (zero for U1/U2).
  double block_coupling(const LoopPoint& p) const;

 private:
  GateKind kind_;
  TwoIonCoupling coupling_;
};

struct HolonomyResult {
  Matrix holonomy;                         // raw k x k, <D_a(0)| U |D_b(0)>
  double leakage = 0.0;                    // 1 - mean_b sum_a |holonomy_ab|^2
  std::vector<double> phase_diagnostics;   // accumulated phase per tracked state, rad
  double gate_phase = 0.0;                 // accumulated gate angle, rad (unwrapped)
  double total_time = 0.0;                 // s
  int steps = 0;
  double max_block_coupling = 0.0;         // U3 audit

  // Closest unitary to the raw holonomy (polar factor).
  Matrix unitary_part() const;
};

using HamiltonianPath = std::function<OperatorMatrix(double s)>;
// Called after every step with the step index, the loop parameter reached and
// the propagator so far.
using StepObserver = std::function<void(int step, double s, const Matrix& propagator)>;

// Time-ordered product of exp(-i H(s_mid) dt) over n equal steps of a
// duration-T traversal of s in [0, 1].
OperatorMatrix adiabatic_propagate(const HamiltonianPath& path, double total_time, int steps,
                                   const StepObserver& observer = {});

// Gate-system overload. Appends a warning to `warnings` (if given) when
// gap * T / n >= 0.1; the run still proceeds.
OperatorMatrix adiabatic_propagate(const GateSystem& system, const ParameterLoop& loop,
                                   double total_time, int steps,
                                   std::vector<std::string>* warnings = nullptr,
                                   const StepObserver& observer = {});

// holonomy[a][b] = <D_a|U|D_b>; phase diagnostics are principal arguments of
// the diagonal.
HolonomyResult extract_holonomy(const OperatorMatrix& propagator, const Basis& dark_basis_at_start);

// Adiabatic run plus extraction, with phases unwrapped continuously along
// the loop against the analytic frame.
HolonomyResult adiabatic_holonomy(const GateSystem& system, const ParameterLoop& loop,
                                  double total_time, int steps,
                                  std::vector<std::string>* warnings = nullptr);

// T-independent oracle: discrete parallel transport of the dark subspace.
// Throws NumericalError (with the offending s) on a subspace dimension jump
// or a singular overlap between consecutive steps.
HolonomyResult wilson_line_holonomy(const GateSystem& system, const ParameterLoop& loop, int steps);

struct SweepRow {
  double total_time = 0.0;   // s
  double gap_time = 0.0;     // gap * T, dimensionless
  int steps = 0;
  double leakage = 0.0;
  double distance = 0.0;     // phase-aligned Frobenius distance to the oracle
  double fidelity = 0.0;     // |Tr(A^dagger B)|/k against the oracle
  double phase = 0.0;        // simulated gate angle
  double oracle_phase = 0.0;
  bool asymptotic = true;    // false below one gap period (gap * T < 2 pi)
};

struct SweepOptions {
  double steps_per_radian = 12.0;  // steps per unit of gap * T
  int min_steps = 1000;
  int oracle_steps = 20000;
  int threads = 1;
  // Leakage of a row is the mean over `average_samples` runs at
  // gap*T + j * average_window / average_samples. Abrupt velocity changes
  // along a loop leave interference fringes in the leakage; a window of one
  // fringe period removes them and keeps the 1/T^2 envelope.
  int average_samples = 1;
  double average_window = 0.0;  // gap * T units
};

// One adiabatic run per entry of `times` (ascending, >= 4 entries, spanning
// at least a decade), compared against a single Wilson-line oracle.
std::vector<SweepRow> adiabatic_convergence_sweep(const GateSystem& system,
                                                  const ParameterLoop& loop,
                                                  const std::vector<double>& times,
                                                  const SweepOptions& options = {});

int steps_for(double gap_time, double steps_per_radian, int min_steps);

// Fringe period of the leakage, in gap * T units, for a loop whose velocity
// jumps at its sweep ends: 2 pi / (1 - 2 r) for a latitude loop with ramp
// fraction r.
double latitude_fringe_period(double ramp_fraction);

// The constant c with (gate angle) = c * (solid angle), measured with the
// Wilson line on a reference latitude loop and snapped to {-1, -1/2, 1/2, 1}.
double pin_holonomy_constant(GateKind kind, TwoIonCoupling coupling = {});

// Latitude loop whose gate angle is `phase` given the pinned constant c.
// Returns nullopt when the phase is trivial. For U3 the cap never reaches
// theta = pi.
std::optional<ParameterLoop> loop_for_phase(GateKind kind, double phase, double c,
                                            double ramp_fraction = 0.1,
                                            double omega_scale = 1.0);

struct SimulationSettings {
  double omega_scale = 1.0;
  double gap_time = 2000.0;  // gap * T for every gate
  double steps_per_radian = 12.0;
  double ramp_fraction = 0.1;
  TwoIonCoupling coupling;
};

// Gate provider backed by adiabatic runs; each gate is realized on the
// latitude loop chosen by loop_for_phase.
GateProvider simulated_gate_provider(const SimulationSettings& settings);

}  // namespace holo

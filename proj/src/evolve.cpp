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

#include "holo/evolve.hpp"

#include <array>
#include <cmath>
#include <sstream>

#include "holo/errors.hpp"
#include "holo/parallel.hpp"

namespace holo {

namespace {

// Indices of |11>, |aa>, |ee> in the two-ion basis.
constexpr std::array<int, 3> kPairBlock{two_ion_index(kLevel1, kLevel1),
                                        two_ion_index(kLevelA, kLevelA),
                                        two_ion_index(kLevelE, kLevelE)};
constexpr std::array<int, 3> kDecoupled{two_ion_index(kLevel0, kLevel0),
                                        two_ion_index(kLevel0, kLevel1),
                                        two_ion_index(kLevel1, kLevel0)};

constexpr double kBlockAuditTolerance = 1e-12;

bool in_pair_block(int i) {
  return i == kPairBlock[0] || i == kPairBlock[1] || i == kPairBlock[2];
}

// Follows the gate angle and the per-state phases of M(s) = E(s)^dagger Psi(s)
// continuously along the loop.
class PhaseTracker {
 public:
  PhaseTracker(GateKind kind, Eigen::Index k)
      : kind_(kind), last_raw_(static_cast<std::size_t>(k), 0.0),
        unwrapped_(static_cast<std::size_t>(k), 0.0) {}

  void update(const Matrix& m) {
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
      const double raw = std::arg(m(a, a));
      auto i = static_cast<std::size_t>(a);
      unwrapped_[i] += std::remainder(raw - last_raw_[i], 2.0 * kPi);
      last_raw_[i] = raw;
    }
    const double raw = gate_angle(kind_, m);
    gate_ += std::remainder(raw - last_gate_raw_, 2.0 * kPi);
    last_gate_raw_ = raw;
  }

  const std::vector<double>& phases() const { return unwrapped_; }
  double gate_phase() const { return gate_; }

 private:
  GateKind kind_;
  std::vector<double> last_raw_;
  std::vector<double> unwrapped_;
  double last_gate_raw_ = 0.0;
  double gate_ = 0.0;
};

Vector basis_vector(Eigen::Index dim, int index) {
  Vector v = Vector::Zero(dim);
  v(index) = 1.0;
  return v;
}

}  // namespace

GateSystem::GateSystem(GateKind kind, TwoIonCoupling coupling) : kind_(kind), coupling_(coupling) {
  if (kind_ == GateKind::kU3) {
    TwoIonControls probe{.eta = coupling.eta, .delta = coupling.delta};
    probe.validate();
  }
}

std::vector<std::string> GateSystem::tracked_labels() const {
  if (kind_ == GateKind::kU3) return {"00", "01", "10", "11"};
  return {"0", "1"};
}

OperatorMatrix GateSystem::hamiltonian(const LoopPoint& p) const {
  switch (kind_) {
    case GateKind::kU1: return build_single_ion_hamiltonian(u1_control_map(p));
    case GateKind::kU2: return build_single_ion_hamiltonian(u2_control_map(p));
    case GateKind::kU3:
      return build_two_ion_hamiltonian(u3_control_map(p, coupling_.eta, coupling_.delta));
  }
  throw ValidationError("unknown gate kind");
}

double GateSystem::block_coupling(const LoopPoint& p) const {
  if (kind_ != GateKind::kU3) return 0.0;
  const Matrix& h = hamiltonian(p).entries();
  double worst = 0.0;
  for (int r : kPairBlock) {
    for (int c = 0; c < 16; ++c) {
      if (!in_pair_block(c)) worst = std::max({worst, std::abs(h(r, c)), std::abs(h(c, r))});
    }
  }
  return worst;
}

Basis GateSystem::dark_basis(const LoopPoint& p, const std::optional<Basis>& reference) const {
  if (kind_ != GateKind::kU3) return null_space_basis(hamiltonian(p), kNullTolerance, reference);

  const Matrix& h = hamiltonian(p).entries();
  Matrix block(3, 3);
  for (int r = 0; r < 3; ++r) {
    for (int c = 0; c < 3; ++c) block(r, c) = h(kPairBlock[r], kPairBlock[c]);
  }
  std::optional<Basis> block_reference;
  if (reference && reference->cols() == 4) {
    Basis ref(3, 1);
    for (int r = 0; r < 3; ++r) ref(r, 0) = (*reference)(kPairBlock[r], 3);
    if (ref.norm() > 1e-6) block_reference = ref / ref.norm();
  }
  const Basis dark = null_space_basis(OperatorMatrix(block, true), kNullTolerance, block_reference);

  Basis out = Basis::Zero(16, 3 + dark.cols());
  for (int i = 0; i < 3; ++i) out(kDecoupled[i], i) = 1.0;
  for (Eigen::Index j = 0; j < dark.cols(); ++j) {
    for (int r = 0; r < 3; ++r) out(kPairBlock[r], 3 + j) = dark(r, j);
  }
  return out;
}

Basis GateSystem::analytic_frame(const LoopPoint& p) const {
  const double half = 0.5 * p.theta;
  switch (kind_) {
    case GateKind::kU1: {
      Basis e = Basis::Zero(4, 2);
      e(kLevel0, 0) = 1.0;
      e(kLevel1, 1) = std::cos(half);
      e(kLevelA, 1) = std::sin(half) * std::polar(1.0, p.phi);
      return e;
    }
    case GateKind::kU2: {
      // Closed-form dark pair D1, D2 rotated by phi so the frame is regular
      // at the pole.
      const double ct = std::cos(p.theta), st = std::sin(p.theta);
      const double cp = std::cos(p.phi), sp = std::sin(p.phi);
      Vector d1 = Vector::Zero(4), d2 = Vector::Zero(4);
      d1(kLevel0) = ct * cp;
      d1(kLevel1) = ct * sp;
      d1(kLevelA) = -st;
      d2(kLevel0) = -sp;
      d2(kLevel1) = cp;
      Basis e(4, 2);
      e.col(0) = cp * d1 - sp * d2;
      e.col(1) = sp * d1 + cp * d2;
      return e;
    }
    case GateKind::kU3: {
      Basis e = Basis::Zero(16, 4);
      for (int i = 0; i < 3; ++i) e(kDecoupled[i], i) = 1.0;
      e(two_ion_index(kLevel1, kLevel1), 3) = std::cos(half);
      e(two_ion_index(kLevelA, kLevelA), 3) = std::sin(half) * std::polar(1.0, p.phi);
      return e;
    }
  }
  throw ValidationError("unknown gate kind");
}

Basis GateSystem::computational_basis() const {
  if (kind_ == GateKind::kU3) {
    Basis b = Basis::Zero(16, 4);
    for (int i = 0; i < 3; ++i) b(kDecoupled[i], i) = 1.0;
    b(two_ion_index(kLevel1, kLevel1), 3) = 1.0;
    return b;
  }
  Basis b = Basis::Zero(4, 2);
  b.col(0) = basis_vector(4, kLevel0);
  b.col(1) = basis_vector(4, kLevel1);
  return b;
}

double GateSystem::gap(double omega_scale) const {
  if (kind_ == GateKind::kU3) return two_ion_gap(omega_scale, coupling_.eta, coupling_.delta);
  return omega_scale;
}

Matrix HolonomyResult::unitary_part() const { return polar_unitary(holonomy); }

OperatorMatrix adiabatic_propagate(const HamiltonianPath& path, double total_time, int steps,
                                   const StepObserver& observer) {
  if (!std::isfinite(total_time) || total_time <= 0.0) {
    throw ValidationError("propagation time must be positive");
  }
  if (steps < 1) throw ValidationError("propagation needs at least one step");
  const double dt = total_time / steps;
  Matrix u;
  for (int k = 0; k < steps; ++k) {
    const double s_mid = (k + 0.5) / steps;
    const OperatorMatrix step = matrix_exponential_step(path(s_mid), dt);
    u = k == 0 ? step.entries() : Matrix(step.entries() * u);
    if (observer) observer(k, static_cast<double>(k + 1) / steps, u);
  }
  return OperatorMatrix(std::move(u));
}

OperatorMatrix adiabatic_propagate(const GateSystem& system, const ParameterLoop& loop,
                                   double total_time, int steps,
                                   std::vector<std::string>* warnings,
                                   const StepObserver& observer) {
  if (steps >= 1 && std::isfinite(total_time)) {
    const double per_step = system.gap(loop.omega_scale()) * total_time / steps;
    if (per_step >= 0.1 && warnings) {
      std::ostringstream msg;
      msg << "step size gap*dt = " << per_step << " is not below 0.1; results may not be converged";
      warnings->push_back(msg.str());
    }
  }
  return adiabatic_propagate([&](double s) { return system.hamiltonian(loop.at(s)); },
                             total_time, steps, observer);
}

HolonomyResult extract_holonomy(const OperatorMatrix& propagator, const Basis& dark_basis_at_start) {
  if (propagator.dimension() != dark_basis_at_start.rows()) {
    throw ValidationError("extract_holonomy: basis dimension does not match propagator");
  }
  HolonomyResult out;
  out.holonomy = dark_basis_at_start.adjoint() * propagator.entries() * dark_basis_at_start;
  const Eigen::Index k = out.holonomy.cols();
  double kept = 0.0;
  for (Eigen::Index b = 0; b < k; ++b) kept += out.holonomy.col(b).squaredNorm();
  out.leakage = std::clamp(1.0 - kept / static_cast<double>(k), 0.0, 1.0);
  for (Eigen::Index a = 0; a < k; ++a) out.phase_diagnostics.push_back(std::arg(out.holonomy(a, a)));
  return out;
}

HolonomyResult adiabatic_holonomy(const GateSystem& system, const ParameterLoop& loop,
                                  double total_time, int steps,
                                  std::vector<std::string>* warnings) {
  const Basis start = system.computational_basis();
  PhaseTracker tracker(system.kind(), start.cols());
  double audit = system.block_coupling(loop.at(0.0));
  const OperatorMatrix u = adiabatic_propagate(
      system, loop, total_time, steps, warnings, [&](int, double s, const Matrix& prop) {
        const LoopPoint p = loop.at(s);
        tracker.update(system.analytic_frame(p).adjoint() * prop * start);
        if (system.kind() == GateKind::kU3) audit = std::max(audit, system.block_coupling(p));
      });
  if (audit > kBlockAuditTolerance) {
    std::ostringstream msg;
    msg << "U3 pair block couples to the rest of the space (" << audit << ")";
    throw NumericalError(msg.str(), 0.0);
  }
  HolonomyResult out = extract_holonomy(u, start);
  out.phase_diagnostics = tracker.phases();
  out.gate_phase = tracker.gate_phase();
  out.total_time = total_time;
  out.steps = steps;
  out.max_block_coupling = audit;
  return out;
}

HolonomyResult wilson_line_holonomy(const GateSystem& system, const ParameterLoop& loop, int steps) {
  if (steps < 2) throw ValidationError("wilson_line_holonomy needs at least two steps");
  const Basis start = system.computational_basis();
  const Eigen::Index k = start.cols();
  PhaseTracker tracker(system.kind(), k);
  double audit = 0.0;

  Basis transported = start;
  for (int j = 1; j <= steps; ++j) {
    const double s = static_cast<double>(j) / steps;
    const LoopPoint p = loop.at(s);
    const Basis dark = system.dark_basis(p, transported);
    if (dark.cols() != k) {
      std::ostringstream msg;
      msg << "dark subspace dimension jumped from " << k << " to " << dark.cols() << " at s = " << s;
      throw NumericalError(msg.str(), s);
    }
    transported = dark * subspace_overlap_unitary(dark, transported, s);
    tracker.update(system.analytic_frame(p).adjoint() * transported);
    audit = std::max(audit, system.block_coupling(p));
  }
  if (audit > kBlockAuditTolerance) {
    std::ostringstream msg;
    msg << "U3 pair block couples to the rest of the space (" << audit << ")";
    throw NumericalError(msg.str(), 0.0);
  }

  HolonomyResult out;
  out.holonomy = start.adjoint() * transported;
  out.leakage = 0.0;
  out.phase_diagnostics = tracker.phases();
  out.gate_phase = tracker.gate_phase();
  out.steps = steps;
  out.max_block_coupling = audit;
  return out;
}

int steps_for(double gap_time, double steps_per_radian, int min_steps) {
  const double wanted = std::ceil(gap_time * steps_per_radian);
  return std::max(min_steps, static_cast<int>(std::min(wanted, 2.0e9)));
}

std::vector<SweepRow> adiabatic_convergence_sweep(const GateSystem& system,
                                                  const ParameterLoop& loop,
                                                  const std::vector<double>& times,
                                                  const SweepOptions& options) {
  if (times.size() < 4) throw ValidationError("convergence sweep needs at least 4 durations");
  for (std::size_t i = 0; i < times.size(); ++i) {
    if (!(times[i] > 0.0) || (i > 0 && !(times[i] > times[i - 1]))) {
      throw ValidationError("convergence sweep durations must be positive and ascending");
    }
  }
  if (times.back() < 10.0 * times.front()) {
    throw ValidationError("convergence sweep must span at least one decade in T");
  }
  if (options.average_samples < 1 || !(options.average_window >= 0.0)) {
    throw ValidationError("convergence sweep averaging needs samples >= 1 and a non-negative window");
  }
  const HolonomyResult oracle = wilson_line_holonomy(system, loop, options.oracle_steps);
  const double gap = system.gap(loop.omega_scale());
  const std::size_t m = static_cast<std::size_t>(options.average_samples);

  // One job per (row, sample); sample 0 is the nominal duration.
  std::vector<HolonomyResult> runs(times.size() * m);
  parallel_for(runs.size(), options.threads, [&](std::size_t job) {
    const std::size_t i = job / m, j = job % m;
    const double gap_time = gap * times[i] + options.average_window * static_cast<double>(j) / m;
    runs[job] = adiabatic_holonomy(system, loop, gap_time / gap,
                                   steps_for(gap_time, options.steps_per_radian, options.min_steps));
  });

  std::vector<SweepRow> rows(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    const HolonomyResult& run = runs[i * m];
    SweepRow& row = rows[i];
    row.total_time = times[i];
    row.gap_time = gap * times[i];
    row.steps = run.steps;
    double leakage = 0.0;
    for (std::size_t j = 0; j < m; ++j) leakage += runs[i * m + j].leakage;
    row.leakage = leakage / static_cast<double>(m);
    row.distance = phase_aligned_distance(run.holonomy, oracle.holonomy);
    row.fidelity = gate_fidelity(run.holonomy, oracle.holonomy);
    row.phase = run.gate_phase;
    row.oracle_phase = oracle.gate_phase;
    row.asymptotic = row.gap_time >= 2.0 * kPi;
  }
  return rows;
}

double latitude_fringe_period(double ramp_fraction) {
  if (!(ramp_fraction > 0.0 && ramp_fraction < 0.5)) {
    throw ValidationError("latitude_fringe_period: ramp_fraction must lie in (0, 0.5)");
  }
  return 2.0 * kPi / (1.0 - 2.0 * ramp_fraction);
}

double pin_holonomy_constant(GateKind kind, TwoIonCoupling coupling) {
  const GateSystem system(kind, coupling);
  const ParameterLoop loop = latitude_loop(kPi / 3.0, 0.1);
  const HolonomyResult oracle = wilson_line_holonomy(system, loop, 4000);
  const double ratio = oracle.gate_phase / solid_angle(loop, 4000);
  double best = 0.0;
  for (double c : {-1.0, -0.5, 0.5, 1.0}) {
    if (best == 0.0 || std::abs(ratio - c) < std::abs(ratio - best)) best = c;
  }
  if (std::abs(ratio - best) > 1e-3) {
    std::ostringstream msg;
    msg << "holonomy/solid-angle ratio " << ratio << " for " << to_string(kind)
        << " is not a recognised constant";
    throw NumericalError(msg.str(), 0.0);
  }
  return best;
}

std::optional<ParameterLoop> loop_for_phase(GateKind kind, double phase, double c,
                                            double ramp_fraction, double omega_scale) {
  if (c == 0.0 || !std::isfinite(phase)) throw ValidationError("loop_for_phase: bad phase or constant");
  const double wrapped = std::remainder(phase, 2.0 * kPi);
  if (std::abs(wrapped) < 1e-12) return std::nullopt;
  const double solid = wrapped / c;
  const double cap = std::abs(solid);
  if (cap >= 4.0 * kPi) throw ValidationError("loop_for_phase: phase needs more than a full sphere");
  const double theta0 = std::acos(1.0 - cap / (2.0 * kPi));
  if (kind == GateKind::kU3 && !(theta0 < kPi)) {
    throw ValidationError("loop_for_phase: U3 loop would reach theta = pi");
  }
  ParameterLoop loop = latitude_loop(theta0, ramp_fraction, omega_scale);
  return solid < 0.0 ? loop.reversed() : loop;
}

GateProvider simulated_gate_provider(const SimulationSettings& settings) {
  const std::array<double, 3> constants{
      pin_holonomy_constant(GateKind::kU1, settings.coupling),
      pin_holonomy_constant(GateKind::kU2, settings.coupling),
      pin_holonomy_constant(GateKind::kU3, settings.coupling)};
  return [settings, constants](GateKind kind, double phase) -> Matrix {
    const GateSystem system(kind, settings.coupling);
    const auto loop = loop_for_phase(kind, phase, constants[static_cast<int>(kind)],
                                     settings.ramp_fraction, settings.omega_scale);
    if (!loop) return Matrix::Identity(system.tracked_dimension(), system.tracked_dimension());
    const double total_time = settings.gap_time / system.gap(settings.omega_scale);
    const int steps = steps_for(settings.gap_time, settings.steps_per_radian, 1000);
    return adiabatic_holonomy(system, *loop, total_time, steps).holonomy;
  };
}

}  // namespace holo

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

#include "holo/model.hpp"

#include <cmath>
#include <sstream>

#include <unsupported/Eigen/KroneckerProduct>

#include "holo/errors.hpp"

namespace holo {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

}  // namespace

void TwoIonControls::validate() const {
  if (!std::isfinite(eta) || !std::isfinite(delta) || !std::isfinite(omega1_mag) ||
      !std::isfinite(omegaA_mag) || !std::isfinite(phi1) || !std::isfinite(phiA)) {
    throw ValidationError("two-ion controls must be finite");
  }
  if (!(eta * eta < 0.1)) {
    std::ostringstream msg;
    msg << "Lamb-Dicke regime requires eta^2 < 0.1, got eta = " << eta;
    throw ValidationError(msg.str());
  }
  if (delta == 0.0) throw ValidationError("two-ion detuning delta must be nonzero");
  if (omega1_mag < 0.0 || omegaA_mag < 0.0) {
    throw ValidationError("Rabi magnitudes must be non-negative");
  }
}

void LoopPoint::validate() const {
  if (!std::isfinite(theta) || !std::isfinite(phi) || !std::isfinite(omega_scale)) {
    throw ValidationError("loop point must be finite");
  }
  if (theta < 0.0 || theta > kPi) {
    std::ostringstream msg;
    msg << "theta must lie in [0, pi], got " << theta;
    throw ValidationError(msg.str());
  }
  if (omega_scale <= 0.0) throw ValidationError("omega_scale must be positive");
}

OperatorMatrix build_single_ion_hamiltonian(const SingleIonControls& c) {
  if (!finite(c.omega0) || !finite(c.omega1) || !finite(c.omegaA)) {
    throw ValidationError("Rabi frequencies must be finite");
  }
  Matrix h = Matrix::Zero(4, 4);
  h(kLevelE, kLevel0) = c.omega0;
  h(kLevelE, kLevel1) = c.omega1;
  h(kLevelE, kLevelA) = c.omegaA;
  h(kLevel0, kLevelE) = std::conj(c.omega0);
  h(kLevel1, kLevelE) = std::conj(c.omega1);
  h(kLevelA, kLevelE) = std::conj(c.omegaA);
  return OperatorMatrix(std::move(h), true);
}

SingleIonControls u1_control_map(const LoopPoint& p) {
  p.validate();
  const double half = 0.5 * p.theta;
  return SingleIonControls{
      .omega0 = 0.0,
      .omega1 = -p.omega_scale * std::sin(half) * std::polar(1.0, p.phi),
      .omegaA = p.omega_scale * std::cos(half),
  };
}

SingleIonControls u2_control_map(const LoopPoint& p) {
  p.validate();
  return SingleIonControls{
      .omega0 = p.omega_scale * std::sin(p.theta) * std::cos(p.phi),
      .omega1 = p.omega_scale * std::sin(p.theta) * std::sin(p.phi),
      .omegaA = p.omega_scale * std::cos(p.theta),
  };
}

Matrix sigma_coupling(Level mu, double phase) {
  Matrix s = Matrix::Zero(4, 4);
  s(kLevelE, mu) = std::polar(1.0, phase);
  s(mu, kLevelE) = std::polar(1.0, -phase);
  return s;
}

OperatorMatrix build_two_ion_hamiltonian(const TwoIonControls& c) {
  c.validate();
  const double prefactor = c.eta * c.eta / c.delta;
  const Matrix s1 = sigma_coupling(kLevel1, c.phi1);
  const Matrix sa = sigma_coupling(kLevelA, c.phiA);
  Matrix h = prefactor * (-c.omega1_mag * c.omega1_mag * Matrix(Eigen::kroneckerProduct(s1, s1)) +
                          c.omegaA_mag * c.omegaA_mag * Matrix(Eigen::kroneckerProduct(sa, sa)));
  // The Kronecker products are hermitian only up to rounding; make it exact.
  Matrix sym = 0.5 * (h + h.adjoint());
  return OperatorMatrix(std::move(sym), true);
}

TwoIonControls u3_control_map(const LoopPoint& p, double eta, double delta) {
  p.validate();
  if (!(p.theta < kPi)) {
    throw ValidationError("u3_control_map: theta must be < pi (intensity ratio diverges)");
  }
  // |Omega1|^2 = Omega^2 t/(1+t), |OmegaA|^2 = Omega^2/(1+t), t = tan(theta/2).
  // Written with sin/cos so the ratio is exact near theta = 0.
  const double s = std::sin(0.5 * p.theta);
  const double c = std::cos(0.5 * p.theta);
  const double omega2 = p.omega_scale * p.omega_scale;
  TwoIonControls out{
      .eta = eta,
      .delta = delta,
      .omega1_mag = std::sqrt(omega2 * s / (s + c)),
      .omegaA_mag = std::sqrt(omega2 * c / (s + c)),
      .phi1 = 0.5 * p.phi,
      .phiA = 0.0,
  };
  out.validate();
  return out;
}

double two_ion_gap(double omega, double eta, double delta) {
  if (delta == 0.0) throw ValidationError("two-ion detuning delta must be nonzero");
  return eta * eta * omega * omega / std::abs(delta);
}

}  // namespace holo

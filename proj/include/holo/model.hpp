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

// Ion Hamiltonians and the control maps (theta, phi) -> Rabi frequencies.
//
// Single ion: basis |0>, |1>, |a>, |e>. Two ions: the 16 products, first ion
// most significant (|ab> has index 4*a + b). All frequencies in rad/s.

#pragma once

#include "holo/linalg.hpp"

namespace holo {

// Level indices within one ion.
enum Level : int { kLevel0 = 0, kLevel1 = 1, kLevelA = 2, kLevelE = 3 };

constexpr int two_ion_index(Level first, Level second) { return 4 * first + second; }

struct SingleIonControls {
  Complex omega0{};
  Complex omega1{};
  Complex omegaA{};
};

struct TwoIonControls {
  double eta = 0.0;         // Lamb-Dicke parameter
  double delta = 0.0;       // extra detuning, rad/s
  double omega1_mag = 0.0;  // |Omega_1|, rad/s
  double omegaA_mag = 0.0;  // |Omega_a|, rad/s
  double phi1 = 0.0;        // rad
  double phiA = 0.0;        // rad

  // Throws ValidationError unless eta^2 < 0.1, delta != 0 and all fields finite.
  void validate() const;
};

struct LoopPoint {
  double theta = 0.0;        // polar control angle, [0, pi]
  double phi = 0.0;          // azimuthal control angle
  double omega_scale = 1.0;  // overall Rabi magnitude, rad/s

  void validate() const;
};

// H = |e>(Omega0 <0| + Omega1 <1| + OmegaA <a|) + h.c.
OperatorMatrix build_single_ion_hamiltonian(const SingleIonControls& c);

// Abelian phase gate on |1>: Omega0 = 0, Omega1 = -Omega sin(theta/2) e^{i phi},
// OmegaA = Omega cos(theta/2).
SingleIonControls u1_control_map(const LoopPoint& p);

// Non-abelian rotation gate: (Omega0, Omega1, OmegaA) = Omega * unit vector
// at (theta, phi).
SingleIonControls u2_control_map(const LoopPoint& p);

// sigma_mu^phi = e^{i phi}|e><mu| + h.c. on one ion.
Matrix sigma_coupling(Level mu, double phase);

// H = (eta^2/delta) [ -|Omega1|^2 s1 (x) s1 + |OmegaA|^2 sa (x) sa ].
OperatorMatrix build_two_ion_hamiltonian(const TwoIonControls& c);

// Intensity ratio |Omega1|^2/|OmegaA|^2 = tan(theta/2) with the total
// intensity |Omega1|^2 + |OmegaA|^2 pinned to Omega^2, phi1 = phi/2 and
// phiA = 0. Rejects theta >= pi, where the ratio diverges.
TwoIonControls u3_control_map(const LoopPoint& p, double eta, double delta);

// Two-ion gap eta^2 Omega^2 / |delta|.
double two_ion_gap(double omega, double eta, double delta);

}  // namespace holo

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

// Experiment runner behind the `holo` command line tool.
//
// A run is described by a JSON document (see README.md for every key). Angles
// are in radians, Rabi frequencies and detunings in rad/s, rates in 1/s and
// durations in seconds. Durations can instead be given as the dimensionless
// product gap * T ("gap_time").

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "holo/evolve.hpp"
#include "holo/noise.hpp"
#include "json.hpp"

namespace holo {

enum class Experiment {
  kSimulateGate,
  kSweepAdiabaticity,
  kHolonomyCompare,
  kNoiseBudget,
  kCircuit,
  kNonabelianDemo,
};

std::string to_string(Experiment e);
Experiment parse_experiment(const std::string& name);

struct LoopConfig {
  std::string shape = "latitude";  // "latitude" or "lune"
  double theta0 = kPi / 2.0;       // latitude
  double ramp_fraction = 0.1;      // latitude
  double width = kPi;              // lune
  double theta_max = kPi;          // lune
  int orientation = 1;             // +1 counterclockwise, -1 clockwise
};

struct CircuitConfig {
  std::string target = "cnot";  // "cnot", "hadamard" or "haar"
  int count = 100;              // haar targets
  bool simulate = false;        // also compose from simulated holonomies
  double tolerance = 1e-9;
};

struct RunConfig {
  Experiment experiment = Experiment::kSimulateGate;
  GateKind gate = GateKind::kU1;
  LoopConfig loop;
  double omega_scale = 2.0 * kPi * 1e6;
  TwoIonCoupling coupling{0.1, 2.0 * kPi * 1e5};
  double gap_time = 2000.0;          // used when duration <= 0
  double duration = 0.0;             // s
  std::vector<double> gap_time_list; // sweep; defaults to 13 points over [200, 20000]
  std::vector<double> duration_list; // sweep, s; wins over gap_time_list
  double steps_per_radian = 12.0;
  int min_steps = 1000;
  int oracle_steps = 20000;
  int average_samples = 1;      // sweep: leakage averaged over this many runs per point
  double average_window = 0.0;  // sweep, gap*T units; 0 = one fringe period of the loop
  double phase1 = kPi / 2.0;  // nonabelian demo, U1 angle
  double phase2 = kPi / 2.0;  // nonabelian demo, U2 angle
  bool simulate = true;       // nonabelian demo with simulated holonomies
  CircuitConfig circuit;
  NoiseBudget noise{.omega = 2.0 * kPi * 1e6,
                    .eta = 0.1,
                    .delta = 2.0 * kPi * 1e5,
                    .gamma_s = 2.0 * kPi * 1e7,
                    .gamma_h = 100.0,
                    .t_gate = 1e-4,
                    .kind = BudgetKind::kSingleBit};
  BudgetThresholds thresholds{};
  std::uint64_t seed = 20260101;
  int threads = 0;  // 0 = all available processors
  std::string output_dir = ".";
  std::string output_prefix;  // defaults to the experiment name
  bool plot = true;

  // Every field is checked against the owning module's preconditions.
  void validate() const;
};

// Missing keys take the defaults above; unknown keys and bad values throw
// ValidationError naming the field.
RunConfig parse_config(const nlohmann::json& doc);
nlohmann::json to_json(const RunConfig& config);

// FNV-1a 64 of the canonical resolved config, hex encoded.
std::string config_hash(const RunConfig& config);

ParameterLoop build_loop(const RunConfig& config);

struct RunOutcome {
  std::vector<std::string> files;
  nlohmann::json summary;
  std::vector<std::string> warnings;
};

// Executes the experiment and writes <prefix>_results.{csv,json},
// <prefix>_metadata.json and, for sweeps, <prefix>_plot.svg. Throws
// ValidationError or NumericalError.
RunOutcome run(const RunConfig& config);

}  // namespace holo

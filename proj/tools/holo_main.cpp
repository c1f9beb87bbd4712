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

// holo <experiment> [--config run.json] [overrides...]
//
// Exit codes: 0 success, 2 validation error, 3 numerical failure.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "holo/errors.hpp"
#include "holo/runner.hpp"

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;

template <typename T>
void set_if(nlohmann::json& doc, const std::string& key, const std::optional<T>& v) {
  if (v) doc[key] = *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Holonomic trapped-ion gate simulator"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string config_path;
  bool validate_only = false;
  std::optional<std::string> gate, shape, output_dir, prefix, target;
  std::optional<double> theta0, ramp, width, theta_max, omega, gap_time, duration, steps_per_rad;
  std::optional<double> phase1, phase2, eta, delta;
  std::optional<int> orientation, oracle_steps, threads, count, average_samples;
  std::optional<double> average_window;
  std::optional<std::uint64_t> seed;
  bool no_plot = false, simulate = false, no_simulate = false;

  app.add_option("--config", config_path, "JSON run configuration")->check(CLI::ExistingFile);
  app.add_flag("--validate-only", validate_only, "Check the configuration and exit");
  app.add_option("--gate", gate, "U1, U2 or U3");
  app.add_option("--shape", shape, "Loop shape: latitude or lune");
  app.add_option("--theta0", theta0, "Latitude loop polar angle (rad)");
  app.add_option("--ramp-fraction", ramp, "Latitude loop ramp fraction");
  app.add_option("--width", width, "Lune width (rad)");
  app.add_option("--theta-max", theta_max, "Lune polar extent (rad)");
  app.add_option("--orientation", orientation, "+1 counterclockwise, -1 clockwise");
  app.add_option("--omega-scale", omega, "Rabi magnitude (rad/s)");
  app.add_option("--eta", eta, "Lamb-Dicke parameter");
  app.add_option("--delta", delta, "Two-ion detuning (rad/s)");
  app.add_option("--gap-time", gap_time, "Adiabaticity gap * T");
  app.add_option("--duration", duration, "Loop duration T (s), overrides --gap-time");
  app.add_option("--steps-per-radian", steps_per_rad, "Propagation steps per unit gap * T");
  app.add_option("--oracle-steps", oracle_steps, "Wilson-line steps");
  app.add_option("--average-samples", average_samples, "Sweep: leakage runs averaged per point");
  app.add_option("--average-window", average_window, "Sweep: averaging window in gap * T units");
  app.add_option("--phase1", phase1, "U1 angle for nonabelian_demo (rad)");
  app.add_option("--phase2", phase2, "U2 angle for nonabelian_demo (rad)");
  app.add_option("--target", target, "Circuit target: cnot, hadamard or haar");
  app.add_option("--count", count, "Number of Haar-random targets");
  app.add_flag("--simulate", simulate, "Use simulated holonomies where supported");
  app.add_flag("--no-simulate", no_simulate, "Analytic gates only");
  app.add_option("--seed", seed, "Random seed");
  app.add_option("--threads", threads, "Sweep workers (0 = all processors)");
  app.add_option("--output-dir", output_dir, "Directory for result files");
  app.add_option("--prefix", prefix, "Result file prefix");
  app.add_flag("--no-plot", no_plot, "Skip the SVG plot");

  for (const char* name : {"simulate_gate", "sweep_adiabaticity", "holonomy_compare", "noise_budget",
                           "circuit", "nonabelian_demo"}) {
    app.add_subcommand(name, std::string("Run the ") + name + " experiment");
  }

  CLI11_PARSE(app, argc, argv);
  const std::string experiment = app.get_subcommands().front()->get_name();

  try {
    nlohmann::json doc = nlohmann::json::object();
    if (!config_path.empty()) {
      std::ifstream in(config_path);
      try {
        doc = nlohmann::json::parse(in);
      } catch (const nlohmann::json::parse_error& e) {
        throw holo::ValidationError(std::string("config: ") + e.what());
      }
    }
    doc["experiment"] = experiment;
    set_if(doc, "gate", gate);
    nlohmann::json& loop = doc["loop"];
    if (loop.is_null()) loop = nlohmann::json::object();
    set_if(loop, "shape", shape);
    set_if(loop, "theta0", theta0);
    set_if(loop, "ramp_fraction", ramp);
    set_if(loop, "width", width);
    set_if(loop, "theta_max", theta_max);
    set_if(loop, "orientation", orientation);
    set_if(doc, "omega_scale", omega);
    if (eta || delta) {
      nlohmann::json& c = doc["coupling"];
      if (c.is_null()) c = nlohmann::json::object();
      set_if(c, "eta", eta);
      set_if(c, "delta", delta);
    }
    set_if(doc, "gap_time", gap_time);
    set_if(doc, "duration", duration);
    set_if(doc, "steps_per_radian", steps_per_rad);
    set_if(doc, "oracle_steps", oracle_steps);
    set_if(doc, "average_samples", average_samples);
    set_if(doc, "average_window", average_window);
    set_if(doc, "phase1", phase1);
    set_if(doc, "phase2", phase2);
    if (target || count || simulate || no_simulate) {
      nlohmann::json& c = doc["circuit"];
      if (c.is_null()) c = nlohmann::json::object();
      set_if(c, "target", target);
      set_if(c, "count", count);
      if (simulate) c["simulate"] = true;
      if (no_simulate) c["simulate"] = false;
    }
    if (simulate) doc["simulate"] = true;
    if (no_simulate) doc["simulate"] = false;
    set_if(doc, "seed", seed);
    set_if(doc, "threads", threads);
    if (output_dir || prefix || no_plot) {
      nlohmann::json& o = doc["output"];
      if (o.is_null()) o = nlohmann::json::object();
      set_if(o, "dir", output_dir);
      set_if(o, "prefix", prefix);
      if (no_plot) o["plot"] = false;
    }

    const holo::RunConfig config = holo::parse_config(doc);
    if (validate_only) {
      std::cout << "config ok (hash " << holo::config_hash(config) << ")\n";
      return 0;
    }
    const holo::RunOutcome outcome = holo::run(config);
    for (const auto& w : outcome.warnings) std::cerr << "warning: " << w << '\n';
    for (const auto& f : outcome.files) std::cout << "wrote " << f << '\n';
    std::cout << outcome.summary.dump(2) << '\n';
    return 0;
  } catch (const holo::ValidationError& e) {
    std::cerr << "validation error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const holo::NumericalError& e) {
    std::cerr << "numerical failure at s = " << e.where() << ": " << e.what() << '\n';
    return kExitNumerical;
  }
}

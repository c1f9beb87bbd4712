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

#include "holo/runner.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "holo/errors.hpp"
#include "holo/parallel.hpp"
#include "holo/svg_plot.hpp"

namespace holo {

namespace {

using nlohmann::json;

// --- parsing ---------------------------------------------------------------

void reject_unknown(const json& obj, const std::set<std::string>& known, const std::string& path) {
  for (const auto& [key, value] : obj.items()) {
    if (!known.count(key)) throw ValidationError(path + key + ": unknown key");
  }
}

const json* find(const json& obj, const std::string& key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double read_number(const json& obj, const std::string& key, double fallback, const std::string& path) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_number()) throw ValidationError(path + key + ": expected a number");
  const double x = v->get<double>();
  if (!std::isfinite(x)) throw ValidationError(path + key + ": must be finite");
  return x;
}

int read_int(const json& obj, const std::string& key, int fallback, const std::string& path) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_number_integer()) throw ValidationError(path + key + ": expected an integer");
  return v->get<int>();
}

bool read_bool(const json& obj, const std::string& key, bool fallback, const std::string& path) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_boolean()) throw ValidationError(path + key + ": expected true or false");
  return v->get<bool>();
}

std::string read_string(const json& obj, const std::string& key, const std::string& fallback,
                        const std::string& path) {
  const json* v = find(obj, key);
  if (!v) return fallback;
  if (!v->is_string()) throw ValidationError(path + key + ": expected a string");
  return v->get<std::string>();
}

std::vector<double> read_list(const json& obj, const std::string& key, const std::string& path) {
  const json* v = find(obj, key);
  if (!v) return {};
  if (!v->is_array()) throw ValidationError(path + key + ": expected an array of numbers");
  std::vector<double> out;
  for (const auto& x : *v) {
    if (!x.is_number()) throw ValidationError(path + key + ": expected an array of numbers");
    out.push_back(x.get<double>());
  }
  return out;
}

const json& read_object(const json& obj, const std::string& key, const std::string& path) {
  static const json empty = json::object();
  const json* v = find(obj, key);
  if (!v) return empty;
  if (!v->is_object()) throw ValidationError(path + key + ": expected an object");
  return *v;
}

template <typename Parse>
auto parse_field(const std::string& field, Parse&& parse) {
  try {
    return parse();
  } catch (const ValidationError& e) {
    throw ValidationError(field + ": " + e.what());
  }
}

std::vector<double> default_gap_times() {
  std::vector<double> out;
  for (int i = 0; i <= 12; ++i) out.push_back(200.0 * std::pow(10.0, i / 6.0));
  return out;
}

// --- output helpers ----------------------------------------------------------

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

json matrix_json(const Matrix& m) {
  json rows = json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back({m(r, c).real(), m(r, c).imag()});
    rows.push_back(row);
  }
  return rows;
}

json circuit_json(const Circuit& circuit) {
  json out = json::array();
  for (const auto& op : circuit) {
    out.push_back({{"kind", to_string(op.kind)}, {"phase", op.phase}, {"qubits", op.qubits}});
  }
  return out;
}

std::string write_file(const RunConfig& config, const std::string& suffix, const std::string& body) {
  std::filesystem::create_directories(config.output_dir);
  const std::string prefix =
      config.output_prefix.empty() ? to_string(config.experiment) : config.output_prefix;
  const std::filesystem::path path = std::filesystem::path(config.output_dir) / (prefix + suffix);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw ValidationError("output: cannot write " + path.string());
  out << body;
  return path.string();
}

double run_duration(const RunConfig& config, const GateSystem& system) {
  if (config.duration > 0.0) return config.duration;
  return config.gap_time / system.gap(config.omega_scale);
}

int run_steps(const RunConfig& config, const GateSystem& system, double duration) {
  return steps_for(system.gap(config.omega_scale) * duration, config.steps_per_radian,
                   config.min_steps);
}

int thread_count(const RunConfig& config) {
  return config.threads > 0 ? config.threads : default_thread_count();
}

SimulationSettings simulation_settings(const RunConfig& config) {
  return SimulationSettings{
      .omega_scale = config.omega_scale,
      .gap_time = config.gap_time,
      .steps_per_radian = config.steps_per_radian,
      .ramp_fraction = config.loop.ramp_fraction,
      .coupling = config.coupling,
  };
}

// --- experiments -------------------------------------------------------------

struct Produced {
  std::string results_suffix;
  std::string results_body;
  json summary;
  std::vector<std::pair<std::string, std::string>> extra_files;
};

Produced simulate_gate(const RunConfig& config, const std::string& hash,
                       std::vector<std::string>& warnings) {
  const GateSystem system(config.gate, config.coupling);
  const ParameterLoop loop = build_loop(config);
  const double duration = run_duration(config, system);
  const int steps = run_steps(config, system, duration);
  const HolonomyResult run = adiabatic_holonomy(system, loop, duration, steps, &warnings);
  const HolonomyResult oracle = wilson_line_holonomy(system, loop, config.oracle_steps);
  const double solid = solid_angle(loop, std::max(config.oracle_steps, 100));
  const double c = pin_holonomy_constant(config.gate, config.coupling);
  const double fid_oracle = gate_fidelity(run.holonomy, oracle.holonomy);
  const double fid_analytic =
      gate_fidelity(run.holonomy, analytic_gate_matrix(config.gate, c * solid));

  std::ostringstream csv;
  csv << "gate,solid_angle,extracted_phase,oracle_phase,leakage,fidelity_to_oracle,"
         "fidelity_to_analytic,gap_time,total_time,steps,config_hash\n";
  csv << to_string(config.gate) << ',' << num(solid) << ',' << num(run.gate_phase) << ','
      << num(oracle.gate_phase) << ',' << num(run.leakage) << ',' << num(fid_oracle) << ','
      << num(fid_analytic) << ',' << num(system.gap(config.omega_scale) * duration) << ','
      << num(duration) << ',' << steps << ',' << hash << '\n';

  Produced out;
  out.results_suffix = "_results.csv";
  out.results_body = csv.str();
  out.summary = {{"solid_angle", solid},        {"extracted_phase", run.gate_phase},
                 {"oracle_phase", oracle.gate_phase}, {"leakage", run.leakage},
                 {"fidelity_to_oracle", fid_oracle},  {"fidelity_to_analytic", fid_analytic}};
  return out;
}

double average_window(const RunConfig& config) {
  if (config.average_window > 0.0) return config.average_window;
  return config.loop.shape == "latitude" ? latitude_fringe_period(config.loop.ramp_fraction)
                                         : 2.0 * kPi;
}

Produced sweep(const RunConfig& config, const std::string& hash) {
  const GateSystem system(config.gate, config.coupling);
  const ParameterLoop loop = build_loop(config);
  std::vector<double> times = config.duration_list;
  if (times.empty()) {
    const std::vector<double> gap_times =
        config.gap_time_list.empty() ? default_gap_times() : config.gap_time_list;
    for (double g : gap_times) times.push_back(g / system.gap(config.omega_scale));
  }
  const SweepOptions options{.steps_per_radian = config.steps_per_radian,
                             .min_steps = config.min_steps,
                             .oracle_steps = config.oracle_steps,
                             .threads = thread_count(config),
                             .average_samples = config.average_samples,
                             .average_window = average_window(config)};
  const std::vector<SweepRow> rows = adiabatic_convergence_sweep(system, loop, times, options);

  std::ostringstream csv;
  csv << "T,gap_time,steps,leakage,distance,fidelity,phase,oracle_phase,asymptotic,config_hash\n";
  std::vector<std::pair<double, double>> table;
  PlotSeries leak{"leakage", {}}, dist{"distance to oracle", {}};
  for (const auto& r : rows) {
    csv << num(r.total_time) << ',' << num(r.gap_time) << ',' << r.steps << ',' << num(r.leakage)
        << ',' << num(r.distance) << ',' << num(r.fidelity) << ',' << num(r.phase) << ','
        << num(r.oracle_phase) << ',' << (r.asymptotic ? 1 : 0) << ',' << hash << '\n';
    if (r.asymptotic) table.emplace_back(r.total_time, r.leakage);
    leak.points.emplace_back(r.gap_time, r.leakage);
    dist.points.emplace_back(r.gap_time, r.distance);
  }

  Produced out;
  out.results_suffix = "_results.csv";
  out.results_body = csv.str();
  json fit_json;
  try {
    const ScalingFit fit = fit_scaling_exponent(table);
    fit_json = {{"exponent", fit.exponent},
                {"log_prefactor", fit.log_prefactor},
                {"r_squared", fit.r_squared},
                {"warnings", fit.warnings}};
  } catch (const ValidationError& e) {
    fit_json = {{"error", e.what()}};
  }
  out.summary = {{"rows", rows.size()}, {"fit", fit_json}};
  if (config.plot) {
    out.extra_files.emplace_back(
        "_plot.svg", render_loglog_svg(to_string(config.gate) + " adiabatic convergence",
                                       "gap * T", "leakage / distance", {leak, dist}));
  }
  return out;
}

Produced holonomy_compare(const RunConfig& config, std::vector<std::string>& warnings) {
  const GateSystem system(config.gate, config.coupling);
  const ParameterLoop loop = build_loop(config);
  const double duration = run_duration(config, system);
  const int steps = run_steps(config, system, duration);
  const HolonomyResult run = adiabatic_holonomy(system, loop, duration, steps, &warnings);
  const HolonomyResult oracle = wilson_line_holonomy(system, loop, config.oracle_steps);
  const double solid = solid_angle(loop, std::max(config.oracle_steps, 100));
  const double c = pin_holonomy_constant(config.gate, config.coupling);
  const Matrix analytic = analytic_gate_matrix(config.gate, c * solid);

  json report = {
      {"gate", to_string(config.gate)},
      {"basis", system.tracked_labels()},
      {"solid_angle", solid},
      {"holonomy_constant", c},
      {"adiabatic",
       {{"holonomy", matrix_json(run.holonomy)},
        {"gate_phase", run.gate_phase},
        {"phase_diagnostics", run.phase_diagnostics},
        {"leakage", run.leakage},
        {"total_time", duration},
        {"steps", steps}}},
      {"oracle",
       {{"holonomy", matrix_json(oracle.holonomy)},
        {"gate_phase", oracle.gate_phase},
        {"steps", config.oracle_steps}}},
      {"fidelity", gate_fidelity(run.holonomy, oracle.holonomy)},
      {"distance", phase_aligned_distance(run.holonomy, oracle.holonomy)},
      {"oracle_vs_analytic_fidelity", gate_fidelity(oracle.holonomy, analytic)},
  };
  Produced out;
  out.results_suffix = "_results.json";
  out.summary = {{"fidelity", report["fidelity"]}, {"distance", report["distance"]}};
  out.results_body = report.dump(2) + "\n";
  return out;
}

Produced noise_budget(const RunConfig& config) {
  Produced out;
  const json report = budget_report(config.noise, config.thresholds);
  out.results_suffix = "_results.json";
  out.results_body = report.dump(2) + "\n";
  out.summary = {{"pass", report["pass"]}};
  return out;
}

Produced circuit(const RunConfig& config) {
  const CircuitConfig& cc = config.circuit;
  json report = {{"target", cc.target}, {"tolerance", cc.tolerance}};
  json summary;
  std::optional<GateProvider> simulated;
  if (cc.simulate) simulated = simulated_gate_provider(simulation_settings(config));

  if (cc.target == "cnot") {
    const Circuit c = controlled_not_construction();
    const double f = gate_fidelity(compose_circuit(c, 2), cnot_matrix());
    report["circuit"] = circuit_json(c);
    report["fidelity"] = f;
    summary["fidelity"] = f;
    if (simulated) {
      const double fs = gate_fidelity(compose_circuit(c, 2, *simulated), cnot_matrix());
      report["simulated_fidelity"] = fs;
      summary["simulated_fidelity"] = fs;
    }
  } else if (cc.target == "hadamard") {
    const Circuit c = synthesize_single_qubit(hadamard(), cc.tolerance);
    const double f = gate_fidelity(compose_circuit(c, 1), hadamard());
    report["circuit"] = circuit_json(c);
    report["fidelity"] = f;
    summary["fidelity"] = f;
    if (simulated) {
      const double fs = gate_fidelity(compose_circuit(c, 1, *simulated), hadamard());
      report["simulated_fidelity"] = fs;
      summary["simulated_fidelity"] = fs;
    }
  } else {
    std::mt19937_64 rng(config.seed);
    json targets = json::array();
    double worst = 1.0;
    for (int i = 0; i < cc.count; ++i) {
      const Matrix target = haar_random_unitary(2, rng);
      const Circuit c = synthesize_single_qubit(target, cc.tolerance);
      const double f = gate_fidelity(compose_circuit(c, 1), target);
      worst = std::min(worst, f);
      json entry = {{"target", matrix_json(target)}, {"circuit", circuit_json(c)}, {"fidelity", f}};
      if (simulated) entry["simulated_fidelity"] = gate_fidelity(compose_circuit(c, 1, *simulated), target);
      targets.push_back(entry);
    }
    report["targets"] = targets;
    report["min_fidelity"] = worst;
    summary["min_fidelity"] = worst;
  }
  Produced out;
  out.results_suffix = "_results.json";
  out.results_body = report.dump(2) + "\n";
  out.summary = summary;
  return out;
}

Produced nonabelian_demo(const RunConfig& config) {
  const Matrix u1 = analytic_gate_matrix(GateKind::kU1, config.phase1);
  const Matrix u2 = analytic_gate_matrix(GateKind::kU2, config.phase2);
  const Matrix ab = u1 * u2;
  const Matrix ba = u2 * u1;
  json report = {
      {"phase1", config.phase1},
      {"phase2", config.phase2},
      {"analytic",
       {{"u1_then_u2", matrix_json(u2 * u1)},
        {"u2_then_u1", matrix_json(u1 * u2)},
        {"commutator_norm", noncommutativity_witness(config.phase1, config.phase2)},
        {"order_fidelity", gate_fidelity(ab, ba)}}},
  };
  json summary = {{"commutator_norm", report["analytic"]["commutator_norm"]}};
  if (config.simulate) {
    const GateProvider provider = simulated_gate_provider(simulation_settings(config));
    const Matrix s1 = provider(GateKind::kU1, config.phase1);
    const Matrix s2 = provider(GateKind::kU2, config.phase2);
    const double f = gate_fidelity(s1 * s2, s2 * s1);
    report["simulated"] = {
        {"u1", matrix_json(s1)},
        {"u2", matrix_json(s2)},
        {"u1_then_u2", matrix_json(s2 * s1)},
        {"u2_then_u1", matrix_json(s1 * s2)},
        {"commutator_norm", (s1 * s2 - s2 * s1).norm()},
        {"order_fidelity", f},
        {"order_mismatch", 1.0 - f},
        {"u1_fidelity_to_analytic", gate_fidelity(s1, u1)},
        {"u2_fidelity_to_analytic", gate_fidelity(s2, u2)},
    };
    summary["simulated_order_mismatch"] = 1.0 - f;
  }
  Produced out;
  out.results_suffix = "_results.json";
  out.results_body = report.dump(2) + "\n";
  out.summary = summary;
  return out;
}

}  // namespace

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::kSimulateGate: return "simulate_gate";
    case Experiment::kSweepAdiabaticity: return "sweep_adiabaticity";
    case Experiment::kHolonomyCompare: return "holonomy_compare";
    case Experiment::kNoiseBudget: return "noise_budget";
    case Experiment::kCircuit: return "circuit";
    case Experiment::kNonabelianDemo: return "nonabelian_demo";
  }
  return "?";
}

Experiment parse_experiment(const std::string& name) {
  for (Experiment e : {Experiment::kSimulateGate, Experiment::kSweepAdiabaticity,
                       Experiment::kHolonomyCompare, Experiment::kNoiseBudget, Experiment::kCircuit,
                       Experiment::kNonabelianDemo}) {
    if (to_string(e) == name) return e;
  }
  throw ValidationError("unknown experiment '" + name + "'");
}

void RunConfig::validate() const {
  const auto fail = [](const std::string& field, const std::string& why) {
    throw ValidationError(field + ": " + why);
  };
  if (!(omega_scale > 0.0)) fail("omega_scale", "must be positive");
  // Metadata always reports the U3 constant, so the coupling must be usable.
  parse_field("coupling", [&] {
    TwoIonControls{coupling.eta, coupling.delta, 0.0, 0.0, 0.0, 0.0}.validate();
    return 0;
  });
  if (!(gap_time > 0.0)) fail("gap_time", "must be positive");
  if (duration < 0.0) fail("duration", "must be non-negative");
  if (!(steps_per_radian > 0.0)) fail("steps_per_radian", "must be positive");
  if (min_steps < 2) fail("min_steps", "must be at least 2");
  if (oracle_steps < 100) fail("oracle_steps", "must be at least 100");
  if (average_samples < 1) fail("average_samples", "must be at least 1");
  if (!(average_window >= 0.0) || !std::isfinite(average_window)) {
    fail("average_window", "must be finite and non-negative");
  }
  if (loop.orientation != 1 && loop.orientation != -1) fail("loop.orientation", "must be +1 or -1");
  parse_field("loop", [&] { return build_loop(*this); });
  if (gate == GateKind::kU3 && loop.shape == "lune" && !(loop.theta_max < kPi)) {
    fail("loop.theta_max", "U3 loops must stay below theta = pi");
  }
  if (experiment == Experiment::kSweepAdiabaticity) {
    const std::vector<double>& list = duration_list.empty() ? gap_time_list : duration_list;
    const std::string key = duration_list.empty() ? "gap_time_list" : "duration_list";
    if (!list.empty()) {
      if (list.size() < 4) fail(key, "needs at least 4 entries");
      for (std::size_t i = 0; i < list.size(); ++i) {
        if (!(list[i] > 0.0) || (i && !(list[i] > list[i - 1]))) {
          fail(key, "entries must be positive and ascending");
        }
      }
      if (list.back() < 10.0 * list.front()) fail(key, "must span at least one decade");
    }
  }
  if (experiment == Experiment::kNoiseBudget) parse_field("noise", [&] {
      noise.validate();
      return 0;
    });
  if (circuit.target != "cnot" && circuit.target != "hadamard" && circuit.target != "haar") {
    fail("circuit.target", "must be cnot, hadamard or haar");
  }
  if (circuit.count < 1) fail("circuit.count", "must be positive");
  if (!(circuit.tolerance > 0.0 && circuit.tolerance < 1.0)) fail("circuit.tolerance", "must lie in (0, 1)");
  if (threads < 0) fail("threads", "must be non-negative");
  if (!std::isfinite(phase1)) fail("phase1", "must be finite");
  if (!std::isfinite(phase2)) fail("phase2", "must be finite");
}

RunConfig parse_config(const json& doc) {
  if (!doc.is_object()) throw ValidationError("config: expected a JSON object");
  reject_unknown(doc,
                 {"experiment", "gate", "loop", "omega_scale", "coupling", "gap_time", "duration",
                  "gap_time_list", "duration_list", "steps_per_radian", "min_steps", "oracle_steps",
                  "average_samples", "average_window",
                  "phase1", "phase2", "simulate", "circuit", "noise", "thresholds", "seed",
                  "threads", "output"},
                 "");
  RunConfig c;
  c.experiment = parse_field("experiment", [&] {
    return parse_experiment(read_string(doc, "experiment", to_string(c.experiment), ""));
  });
  c.gate = parse_field("gate", [&] { return parse_gate_kind(read_string(doc, "gate", "U1", "")); });

  const json& loop = read_object(doc, "loop", "");
  reject_unknown(loop, {"shape", "theta0", "ramp_fraction", "width", "theta_max", "orientation"}, "loop.");
  c.loop.shape = read_string(loop, "shape", c.loop.shape, "loop.");
  c.loop.theta0 = read_number(loop, "theta0", c.loop.theta0, "loop.");
  c.loop.ramp_fraction = read_number(loop, "ramp_fraction", c.loop.ramp_fraction, "loop.");
  c.loop.width = read_number(loop, "width", c.loop.width, "loop.");
  c.loop.theta_max = read_number(loop, "theta_max", c.loop.theta_max, "loop.");
  c.loop.orientation = read_int(loop, "orientation", c.loop.orientation, "loop.");

  c.omega_scale = read_number(doc, "omega_scale", c.omega_scale, "");
  const json& coupling = read_object(doc, "coupling", "");
  reject_unknown(coupling, {"eta", "delta"}, "coupling.");
  c.coupling.eta = read_number(coupling, "eta", c.coupling.eta, "coupling.");
  c.coupling.delta = read_number(coupling, "delta", c.coupling.delta, "coupling.");

  c.gap_time = read_number(doc, "gap_time", c.gap_time, "");
  c.duration = read_number(doc, "duration", c.duration, "");
  c.gap_time_list = read_list(doc, "gap_time_list", "");
  c.duration_list = read_list(doc, "duration_list", "");
  c.steps_per_radian = read_number(doc, "steps_per_radian", c.steps_per_radian, "");
  c.min_steps = read_int(doc, "min_steps", c.min_steps, "");
  c.oracle_steps = read_int(doc, "oracle_steps", c.oracle_steps, "");
  c.average_samples = read_int(doc, "average_samples", c.average_samples, "");
  c.average_window = read_number(doc, "average_window", c.average_window, "");
  c.phase1 = read_number(doc, "phase1", c.phase1, "");
  c.phase2 = read_number(doc, "phase2", c.phase2, "");
  c.simulate = read_bool(doc, "simulate", c.simulate, "");

  const json& circ = read_object(doc, "circuit", "");
  reject_unknown(circ, {"target", "count", "simulate", "tolerance"}, "circuit.");
  c.circuit.target = read_string(circ, "target", c.circuit.target, "circuit.");
  c.circuit.count = read_int(circ, "count", c.circuit.count, "circuit.");
  c.circuit.simulate = read_bool(circ, "simulate", c.circuit.simulate, "circuit.");
  c.circuit.tolerance = read_number(circ, "tolerance", c.circuit.tolerance, "circuit.");

  const json& noise = read_object(doc, "noise", "");
  reject_unknown(noise, {"kind", "omega", "eta", "delta", "gamma_s", "gamma_h", "t_gate"}, "noise.");
  c.noise.kind = parse_field("noise.kind", [&] {
    return parse_budget_kind(read_string(noise, "kind", to_string(c.noise.kind), "noise."));
  });
  c.noise.omega = read_number(noise, "omega", c.noise.omega, "noise.");
  c.noise.eta = read_number(noise, "eta", c.noise.eta, "noise.");
  c.noise.delta = read_number(noise, "delta", c.noise.delta, "noise.");
  c.noise.gamma_s = read_number(noise, "gamma_s", c.noise.gamma_s, "noise.");
  c.noise.gamma_h = read_number(noise, "gamma_h", c.noise.gamma_h, "noise.");
  c.noise.t_gate = read_number(noise, "t_gate", c.noise.t_gate, "noise.");

  const json& thr = read_object(doc, "thresholds", "");
  reject_unknown(thr, {"leakage", "spontaneous_emission", "heating_ratio"}, "thresholds.");
  c.thresholds.leakage = read_number(thr, "leakage", c.thresholds.leakage, "thresholds.");
  c.thresholds.spontaneous_emission =
      read_number(thr, "spontaneous_emission", c.thresholds.spontaneous_emission, "thresholds.");
  c.thresholds.heating_ratio = read_number(thr, "heating_ratio", c.thresholds.heating_ratio, "thresholds.");

  if (const json* seed = find(doc, "seed")) {
    if (!seed->is_number_unsigned() && !(seed->is_number_integer() && seed->get<long long>() >= 0)) {
      throw ValidationError("seed: expected a non-negative integer");
    }
    c.seed = seed->get<std::uint64_t>();
  }
  c.threads = read_int(doc, "threads", c.threads, "");

  const json& output = read_object(doc, "output", "");
  reject_unknown(output, {"dir", "prefix", "plot"}, "output.");
  c.output_dir = read_string(output, "dir", c.output_dir, "output.");
  c.output_prefix = read_string(output, "prefix", c.output_prefix, "output.");
  c.plot = read_bool(output, "plot", c.plot, "output.");

  c.validate();
  return c;
}

json to_json(const RunConfig& c) {
  return {
      {"experiment", to_string(c.experiment)},
      {"gate", to_string(c.gate)},
      {"loop",
       {{"shape", c.loop.shape},
        {"theta0", c.loop.theta0},
        {"ramp_fraction", c.loop.ramp_fraction},
        {"width", c.loop.width},
        {"theta_max", c.loop.theta_max},
        {"orientation", c.loop.orientation}}},
      {"omega_scale", c.omega_scale},
      {"coupling", {{"eta", c.coupling.eta}, {"delta", c.coupling.delta}}},
      {"gap_time", c.gap_time},
      {"duration", c.duration},
      {"gap_time_list", c.gap_time_list},
      {"duration_list", c.duration_list},
      {"steps_per_radian", c.steps_per_radian},
      {"min_steps", c.min_steps},
      {"oracle_steps", c.oracle_steps},
      {"average_samples", c.average_samples},
      {"average_window", c.average_window},
      {"phase1", c.phase1},
      {"phase2", c.phase2},
      {"simulate", c.simulate},
      {"circuit",
       {{"target", c.circuit.target},
        {"count", c.circuit.count},
        {"simulate", c.circuit.simulate},
        {"tolerance", c.circuit.tolerance}}},
      {"noise",
       {{"kind", to_string(c.noise.kind)},
        {"omega", c.noise.omega},
        {"eta", c.noise.eta},
        {"delta", c.noise.delta},
        {"gamma_s", c.noise.gamma_s},
        {"gamma_h", c.noise.gamma_h},
        {"t_gate", c.noise.t_gate}}},
      {"thresholds",
       {{"leakage", c.thresholds.leakage},
        {"spontaneous_emission", c.thresholds.spontaneous_emission},
        {"heating_ratio", c.thresholds.heating_ratio}}},
      {"seed", c.seed},
      {"threads", c.threads},
      {"output", {{"dir", c.output_dir}, {"prefix", c.output_prefix}, {"plot", c.plot}}},
  };
}

std::string config_hash(const RunConfig& config) {
  json canonical = to_json(config);
  // Where results are written and how many workers compute them does not
  // change what is computed.
  canonical.erase("output");
  canonical.erase("threads");
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : canonical.dump()) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

ParameterLoop build_loop(const RunConfig& config) {
  const LoopConfig& l = config.loop;
  ParameterLoop loop = [&] {
    if (l.shape == "latitude") return latitude_loop(l.theta0, l.ramp_fraction, config.omega_scale);
    if (l.shape == "lune") return lune_loop(l.width, l.theta_max, config.omega_scale);
    throw ValidationError("shape: must be latitude or lune");
  }();
  return l.orientation < 0 ? loop.reversed() : loop;
}

RunOutcome run(const RunConfig& config) {
  config.validate();
  const std::string hash = config_hash(config);
  RunOutcome outcome;
  Produced produced;
  switch (config.experiment) {
    case Experiment::kSimulateGate: produced = simulate_gate(config, hash, outcome.warnings); break;
    case Experiment::kSweepAdiabaticity: produced = sweep(config, hash); break;
    case Experiment::kHolonomyCompare: produced = holonomy_compare(config, outcome.warnings); break;
    case Experiment::kNoiseBudget: produced = noise_budget(config); break;
    case Experiment::kCircuit: produced = circuit(config); break;
    case Experiment::kNonabelianDemo: produced = nonabelian_demo(config); break;
  }
  if (produced.results_suffix == "_results.json") {
    // JSON reports carry the hash inline.
    json body = json::parse(produced.results_body);
    body["config_hash"] = hash;
    produced.results_body = body.dump(2) + "\n";
  }

  json constants;
  for (GateKind k : {GateKind::kU1, GateKind::kU2, GateKind::kU3}) {
    constants[to_string(k)] = pin_holonomy_constant(k, config.coupling);
  }
  const json metadata = {
      {"config", to_json(config)},
      {"config_hash", hash},
      {"holonomy_constants", constants},
      {"summary", produced.summary},
      {"warnings", outcome.warnings},
      {"units",
       {{"angles", "rad"},
        {"frequencies", "rad/s"},
        {"rates", "1/s"},
        {"durations", "s"}}},
  };
  outcome.files.push_back(write_file(config, produced.results_suffix, produced.results_body));
  outcome.files.push_back(write_file(config, "_metadata.json", metadata.dump(2) + "\n"));
  for (const auto& [suffix, body] : produced.extra_files) {
    outcome.files.push_back(write_file(config, suffix, body));
  }
  outcome.summary = produced.summary;
  return outcome;
}

}  // namespace holo

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

#include "holo/noise.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

std::string to_string(BudgetKind kind) {
  return kind == BudgetKind::kSingleBit ? "single_bit" : "two_bit";
}

BudgetKind parse_budget_kind(const std::string& name) {
  if (name == "single_bit") return BudgetKind::kSingleBit;
  if (name == "two_bit") return BudgetKind::kTwoBit;
  throw ValidationError("unknown budget kind '" + name + "' (expected single_bit or two_bit)");
}

void NoiseBudget::validate() const {
  for (double v : {omega, eta, delta, gamma_s, gamma_h, t_gate}) {
    if (!std::isfinite(v)) throw ValidationError("noise budget inputs must be finite");
  }
  if (omega < 0.0 || gamma_s < 0.0 || gamma_h < 0.0 || eta < 0.0) {
    throw ValidationError("noise budget rates must be non-negative");
  }
  if (!(t_gate > 0.0)) throw ValidationError("t_gate must be positive");
  if (kind == BudgetKind::kTwoBit && delta == 0.0) {
    throw ValidationError("two-bit budget needs delta != 0");
  }
}

double energy_gap(const NoiseBudget& b) {
  b.validate();
  if (b.kind == BudgetKind::kSingleBit) return b.omega;
  return b.eta * b.eta * b.omega * b.omega / std::abs(b.delta);
}

double leakage_estimate(const NoiseBudget& b) {
  const double gap = energy_gap(b);
  if (!(gap > 0.0)) throw ValidationError("leakage_estimate: energy gap is zero");
  const double x = gap * b.t_gate;
  return 1.0 / (x * x);
}

double spontaneous_emission_budget(const NoiseBudget& b) {
  const double gap = energy_gap(b);
  if (!(gap > 0.0)) throw ValidationError("spontaneous_emission_budget: energy gap is zero");
  return b.gamma_s / (gap * gap * b.t_gate);
}

HeatingBudget heating_budget(const NoiseBudget& b) {
  b.validate();
  if (b.kind != BudgetKind::kTwoBit) {
    throw ValidationError("heating_budget applies to the two-bit gate only");
  }
  const double ratio = b.eta * b.omega / b.delta;
  HeatingBudget out;
  out.effective_rate = b.gamma_h * ratio * ratio;
  // effective rate / (eta^2 Omega^2 / |delta|) reduces to gamma_h / |delta|.
  out.condition_ratio = b.gamma_h / std::abs(b.delta);
  return out;
}

ScalingFit fit_scaling_exponent(const std::vector<std::pair<double, double>>& table) {
  ScalingFit fit;
  std::vector<double> xs, ys;
  for (const auto& [t, leak] : table) {
    if (!(t > 0.0) || !(leak > 0.0) || !std::isfinite(leak)) {
      std::ostringstream msg;
      msg << "excluded point T = " << t << ", leakage = " << leak;
      fit.warnings.push_back(msg.str());
      continue;
    }
    xs.push_back(std::log(t));
    ys.push_back(std::log(leak));
  }
  if (xs.size() < 4) throw ValidationError("fit_scaling_exponent needs at least 4 usable points");
  const auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  if (*hi - *lo < std::log(10.0) - 1e-12) {
    throw ValidationError("fit_scaling_exponent needs T spanning at least one decade");
  }
  const double n = static_cast<double>(xs.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    mx += xs[i];
    my += ys[i];
  }
  mx /= n;
  my /= n;
  double sxx = 0.0, sxy = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    sxx += (xs[i] - mx) * (xs[i] - mx);
    sxy += (xs[i] - mx) * (ys[i] - my);
    syy += (ys[i] - my) * (ys[i] - my);
  }
  fit.exponent = sxy / sxx;
  fit.log_prefactor = my - fit.exponent * mx;
  fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  return fit;
}

nlohmann::json budget_report(const NoiseBudget& b, const BudgetThresholds& thresholds) {
  b.validate();
  const double gap = energy_gap(b);
  nlohmann::json report;
  report["inputs"] = {
      {"kind", to_string(b.kind)}, {"omega", b.omega},     {"eta", b.eta},
      {"delta", b.delta},          {"gamma_s", b.gamma_s}, {"gamma_h", b.gamma_h},
      {"t_gate", b.t_gate},
  };
  report["thresholds"] = {
      {"leakage", thresholds.leakage},
      {"spontaneous_emission", thresholds.spontaneous_emission},
      {"heating_ratio", thresholds.heating_ratio},
  };
  nlohmann::json derived;
  derived["energy_gap"] = gap;
  derived["gate_feasible"] = gap > 0.0;
  bool pass = gap > 0.0;
  if (gap > 0.0) {
    const double leak = leakage_estimate(b);
    const double spont = spontaneous_emission_budget(b);
    derived["leakage_estimate"] = leak;
    derived["spontaneous_emission_budget"] = spont;
    derived["leakage_pass"] = leak < thresholds.leakage;
    derived["spontaneous_emission_pass"] = spont < thresholds.spontaneous_emission;
    pass = pass && leak < thresholds.leakage && spont < thresholds.spontaneous_emission;
  }
  if (b.kind == BudgetKind::kTwoBit) {
    const HeatingBudget heat = heating_budget(b);
    derived["heating_effective_rate"] = heat.effective_rate;
    derived["heating_condition_ratio"] = heat.condition_ratio;
    derived["heating_pass"] = heat.condition_ratio < thresholds.heating_ratio;
    pass = pass && heat.condition_ratio < thresholds.heating_ratio;
  }
  report["derived"] = derived;
  report["pass"] = pass;
  report["notes"] = {
      "scaling estimators use unit coefficients",
      "heating condition evaluated as gamma_h << |delta| (effective heating rate << two-bit gap)",
  };
  return report;
}

}  // namespace holo

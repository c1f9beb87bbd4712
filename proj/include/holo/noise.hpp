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

// Closed-form error budget for the holonomic gates.
//
// These are order-of-magnitude estimators with unit coefficients, not bounds.
// Frequencies and rates in rad/s or 1/s, times in seconds.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace holo {

enum class BudgetKind { kSingleBit, kTwoBit };

std::string to_string(BudgetKind kind);
BudgetKind parse_budget_kind(const std::string& name);

struct NoiseBudget {
  double omega = 0.0;    // |Omega|, rad/s
  double eta = 0.0;      // Lamb-Dicke parameter (two-bit only)
  double delta = 0.0;    // rad/s (two-bit only)
  double gamma_s = 0.0;  // spontaneous emission rate, 1/s
  double gamma_h = 0.0;  // heating rate, 1/s
  double t_gate = 0.0;   // s
  BudgetKind kind = BudgetKind::kSingleBit;

  void validate() const;
};

// Delta_1 = |Omega| (single bit), Delta_2 = eta^2 |Omega|^2 / |delta| (two bit).
double energy_gap(const NoiseBudget& b);

// 1 / (Delta t)^2. Rejects a zero gap.
double leakage_estimate(const NoiseBudget& b);

// gamma_s / (Delta^2 t).
double spontaneous_emission_budget(const NoiseBudget& b);

struct HeatingBudget {
  double effective_rate = 0.0;   // gamma_h eta^2 |Omega|^2 / delta^2, 1/s
  double condition_ratio = 0.0;  // effective rate / Delta_2 = gamma_h / |delta|
};

// Two-bit only.
HeatingBudget heating_budget(const NoiseBudget& b);

struct ScalingFit {
  double exponent = 0.0;
  double log_prefactor = 0.0;
  double r_squared = 0.0;
  std::vector<std::string> warnings;  // excluded points
};

// Least-squares slope of log(leakage) against log(T). Non-positive leakage
// entries are dropped with a warning; fewer than 4 usable points or a span
// under one decade is rejected.
ScalingFit fit_scaling_exponent(const std::vector<std::pair<double, double>>& table);

struct BudgetThresholds {
  double leakage = 1e-3;
  double spontaneous_emission = 1e-2;
  double heating_ratio = 1e-2;
};

// Inputs, derived quantities and pass/fail flags as one JSON object.
nlohmann::json budget_report(const NoiseBudget& b, const BudgetThresholds& thresholds = {});

}  // namespace holo

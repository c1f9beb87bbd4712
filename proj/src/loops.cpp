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

#include "holo/loops.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "holo/errors.hpp"

namespace holo {

namespace {

constexpr double kClosureTolerance = 1e-9;

double ease(Easing e, double u) {
  u = std::clamp(u, 0.0, 1.0);
  if (e == Easing::kSmoothstep) return u * u * (3.0 - 2.0 * u);
  return u;
}

Eigen::Vector3d unit_vector(const SpherePoint& p) {
  return {std::sin(p.theta) * std::cos(p.phi), std::sin(p.theta) * std::sin(p.phi),
          std::cos(p.theta)};
}

}  // namespace

ParameterLoop::ParameterLoop(std::vector<LoopSegment> segments, double omega_scale)
    : segments_(std::move(segments)), omega_scale_(omega_scale) {
  if (segments_.empty()) throw ValidationError("loop needs at least one segment");
  if (!std::isfinite(omega_scale_) || omega_scale_ <= 0.0) {
    throw ValidationError("loop omega_scale must be positive");
  }
  double expected = 0.0;
  for (const auto& seg : segments_) {
    if (std::abs(seg.s_begin - expected) > 1e-12 || !(seg.s_end > seg.s_begin)) {
      throw ValidationError("loop segments must tile [0, 1] in order");
    }
    for (const auto& p : {seg.from, seg.to}) {
      if (!std::isfinite(p.theta) || !std::isfinite(p.phi) || p.theta < 0.0 || p.theta > kPi) {
        throw ValidationError("loop waypoints need finite theta in [0, pi]");
      }
    }
    expected = seg.s_end;
  }
  if (std::abs(expected - 1.0) > 1e-12) throw ValidationError("loop segments must end at s = 1");
}

double ParameterLoop::warped(double s) const {
  if (warp_ == 0.0) return s;
  return s + warp_ * std::sin(2.0 * kPi * s) / (2.0 * kPi);
}

SpherePoint ParameterLoop::sample(double s) const {
  s = warped(std::clamp(s, 0.0, 1.0));
  auto it = std::upper_bound(segments_.begin(), segments_.end(), s,
                             [](double v, const LoopSegment& seg) { return v < seg.s_end; });
  if (it == segments_.end()) it = std::prev(segments_.end());
  const LoopSegment& seg = *it;
  const double u = ease(seg.easing, (s - seg.s_begin) / (seg.s_end - seg.s_begin));
  return {seg.from.theta + u * (seg.to.theta - seg.from.theta),
          seg.from.phi + u * (seg.to.phi - seg.from.phi)};
}

LoopPoint ParameterLoop::at(double s) const {
  const SpherePoint p = sample(s);
  return {p.theta, p.phi, omega_scale_};
}

ParameterLoop ParameterLoop::reversed() const {
  std::vector<LoopSegment> out;
  out.reserve(segments_.size());
  for (auto it = segments_.rbegin(); it != segments_.rend(); ++it) {
    out.push_back({1.0 - it->s_end, 1.0 - it->s_begin, it->to, it->from, it->easing});
  }
  // Smoothstep is symmetric under u -> 1 - u, so easing carries over.
  ParameterLoop loop(std::move(out), omega_scale_);
  loop.warp_ = warp_;
  return loop;
}

ParameterLoop ParameterLoop::reparameterized(double a) const {
  if (!std::isfinite(a) || std::abs(a) >= 1.0) {
    throw ValidationError("reparameterization strength must satisfy |a| < 1");
  }
  ParameterLoop loop = *this;
  loop.warp_ = a;
  return loop;
}

ParameterLoop ParameterLoop::with_omega_scale(double omega_scale) const {
  ParameterLoop loop(segments_, omega_scale);
  loop.warp_ = warp_;
  return loop;
}

double ParameterLoop::closure_error() const {
  return (unit_vector(sample(0.0)) - unit_vector(sample(1.0))).norm();
}

ParameterLoop latitude_loop(double theta0, double ramp_fraction, double omega_scale) {
  if (!(theta0 > 0.0 && theta0 < kPi)) {
    throw ValidationError("latitude_loop: theta0 must lie in (0, pi)");
  }
  if (!(ramp_fraction > 0.0 && ramp_fraction < 0.5)) {
    throw ValidationError("latitude_loop: ramp_fraction must lie in (0, 0.5)");
  }
  const double r = ramp_fraction;
  return ParameterLoop(
      {
          {0.0, r, {0.0, 0.0}, {theta0, 0.0}, Easing::kSmoothstep},
          {r, 1.0 - r, {theta0, 0.0}, {theta0, 2.0 * kPi}, Easing::kLinear},
          {1.0 - r, 1.0, {theta0, 2.0 * kPi}, {0.0, 2.0 * kPi}, Easing::kSmoothstep},
      },
      omega_scale);
}

ParameterLoop waypoint_loop(const std::vector<SpherePoint>& waypoints, double omega_scale) {
  if (waypoints.size() < 2) throw ValidationError("waypoint_loop needs at least two points");
  if (waypoints.front().theta != 0.0 || waypoints.back().theta != 0.0) {
    throw ValidationError("waypoint_loop must start and end at theta = 0");
  }
  const double legs = static_cast<double>(waypoints.size() - 1);
  std::vector<LoopSegment> segments;
  for (std::size_t i = 0; i + 1 < waypoints.size(); ++i) {
    const double s0 = static_cast<double>(i) / legs;
    const double s1 = i + 2 == waypoints.size() ? 1.0 : static_cast<double>(i + 1) / legs;
    segments.push_back({s0, s1, waypoints[i], waypoints[i + 1], Easing::kSmoothstep});
  }
  return ParameterLoop(std::move(segments), omega_scale);
}

ParameterLoop lune_loop(double width, double theta_max, double omega_scale) {
  if (!(theta_max > 0.0 && theta_max <= kPi)) {
    throw ValidationError("lune_loop: theta_max must lie in (0, pi]");
  }
  if (!std::isfinite(width) || width == 0.0) {
    throw ValidationError("lune_loop: width must be finite and nonzero");
  }
  return waypoint_loop({{0.0, 0.0}, {theta_max, 0.0}, {theta_max, width}, {0.0, width}},
                       omega_scale);
}

double solid_angle(const ParameterLoop& loop, int n) {
  if (n < 100) throw ValidationError("solid_angle needs n >= 100");
  const double gap = loop.closure_error();
  if (gap > kClosureTolerance) {
    std::ostringstream msg;
    msg << "loop is not closed: endpoint mismatch " << gap;
    throw ValidationError(msg.str());
  }
  double total = 0.0;
  SpherePoint prev = loop.sample(0.0);
  for (int k = 0; k < n; ++k) {
    const SpherePoint next = loop.sample(static_cast<double>(k + 1) / n);
    const SpherePoint mid = loop.sample((k + 0.5) / n);
    total += (1.0 - std::cos(mid.theta)) * (next.phi - prev.phi);
    prev = next;
  }
  return total;
}

std::vector<LoopPoint> discretize(const ParameterLoop& loop, int n) {
  if (n < 2) throw ValidationError("discretize needs n >= 2");
  std::vector<LoopPoint> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) out.push_back(loop.at(static_cast<double>(k) / n));
  return out;
}

double cap_solid_angle(double theta0) { return 2.0 * kPi * (1.0 - std::cos(theta0)); }

}  // namespace holo

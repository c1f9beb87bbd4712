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

// Closed control paths on the (theta, phi) sphere, anchored at theta = 0.
//
// A loop is parameterized by a dimensionless s in [0, 1]; the physical
// duration is only applied at propagation time, so one geometric loop serves
// every adiabaticity sweep.

#pragma once

#include <vector>

#include "holo/model.hpp"

namespace holo {

struct SpherePoint {
  double theta = 0.0;
  double phi = 0.0;
};

enum class Easing { kLinear, kSmoothstep };

// Straight line in (theta, phi) coordinates over [s_begin, s_end].
struct LoopSegment {
  double s_begin = 0.0;
  double s_end = 1.0;
  SpherePoint from;
  SpherePoint to;
  Easing easing = Easing::kLinear;
};

class ParameterLoop {
 public:
  ParameterLoop(std::vector<LoopSegment> segments, double omega_scale);

  SpherePoint sample(double s) const;
  LoopPoint at(double s) const;

  const std::vector<LoopSegment>& segments() const { return segments_; }
  double omega_scale() const { return omega_scale_; }
  double warp() const { return warp_; }

  // Same geometric path traversed backwards.
  ParameterLoop reversed() const;
  // Same geometric path at a different speed: s -> s + a sin(2 pi s)/(2 pi),
  // |a| < 1 keeps the map monotone.
  ParameterLoop reparameterized(double a) const;
  ParameterLoop with_omega_scale(double omega_scale) const;

  // Distance between the start and end points on the unit sphere.
  double closure_error() const;

 private:
  double warped(double s) const;

  std::vector<LoopSegment> segments_;
  double omega_scale_;
  double warp_ = 0.0;
};

// Ramp theta 0 -> theta0 at phi = 0 over [0, r] (smoothstep), sweep phi
// 0 -> 2 pi linearly over [r, 1 - r], ramp back to the pole over [1 - r, 1].
ParameterLoop latitude_loop(double theta0, double ramp_fraction, double omega_scale = 1.0);

// Piecewise loop through the given waypoints, equal s per leg, smoothstep
// easing on every leg. The first and last waypoints must sit on the pole.
ParameterLoop waypoint_loop(const std::vector<SpherePoint>& waypoints,
                            double omega_scale = 1.0);

// Pole -> down the meridian phi = 0 to theta_max -> along the latitude to
// phi = width -> back up to the pole. With theta_max = pi this is the
// spherical lune of area 2 * width; in general the area is
// width * (1 - cos(theta_max)).
ParameterLoop lune_loop(double width, double theta_max = kPi, double omega_scale = 1.0);

// Signed enclosed solid angle, oint (1 - cos theta) dphi, counterclockwise
// (increasing phi) positive. Midpoint rule, O(1/n^2) for smooth legs.
double solid_angle(const ParameterLoop& loop, int n);

// n + 1 samples at s = k/n.
std::vector<LoopPoint> discretize(const ParameterLoop& loop, int n);

// Spherical cap area 2 pi (1 - cos theta0).
double cap_solid_angle(double theta0);

}  // namespace holo

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


#include <cmath>

#include "doctest.h"
#include "holo/errors.hpp"
#include "holo/loops.hpp"

using namespace holo;

namespace {

// Oracle: area of the region bounded by a meridian-latitude-meridian lune,
// integrated directly as width * int_0^theta_max sin(theta) dtheta by
// Simpson's rule.
double lune_area_oracle(double width, double theta_max) {
  const int n = 2000;
  const double h = theta_max / n;
  double sum = std::sin(0.0) + std::sin(theta_max);
  for (int i = 1; i < n; ++i) sum += (i % 2 ? 4.0 : 2.0) * std::sin(i * h);
  return width * sum * h / 3.0;
}

}  // namespace

TEST_CASE("latitude loop encloses a spherical cap") {
  for (double theta0 : {kPi / 6.0, kPi / 4.0, kPi / 3.0, kPi / 2.0, 2.0 * kPi / 3.0, 5.0 * kPi / 6.0}) {
    CAPTURE(theta0);
    const ParameterLoop loop = latitude_loop(theta0, 0.1);
    CHECK(loop.closure_error() < 1e-15);
    CHECK(std::abs(solid_angle(loop, 4000) - 2.0 * kPi * (1.0 - std::cos(theta0))) < 1e-5);
    CHECK(std::abs(solid_angle(loop.reversed(), 4000) + cap_solid_angle(theta0)) < 1e-5);
  }
}

TEST_CASE("latitude loop samples") {
  const ParameterLoop loop = latitude_loop(1.0, 0.1, 3.0);
  CHECK(loop.sample(0.0).theta == 0.0);
  CHECK(loop.sample(1.0).theta == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(loop.sample(0.5).theta == doctest::Approx(1.0));
  CHECK(loop.sample(0.5).phi == doctest::Approx(kPi));
  CHECK(loop.at(0.3).omega_scale == 3.0);
  CHECK(loop.with_omega_scale(5.0).at(0.3).omega_scale == 5.0);
  // Reversal retraces the path.
  const ParameterLoop rev = loop.reversed();
  for (double s : {0.0, 0.05, 0.2, 0.5, 0.77, 1.0}) {
    CHECK(rev.sample(s).theta == doctest::Approx(loop.sample(1.0 - s).theta));
    CHECK(rev.sample(s).phi == doctest::Approx(loop.sample(1.0 - s).phi));
  }
}

TEST_CASE("lune solid angle") {
  CHECK(std::abs(solid_angle(lune_loop(1.0), 4000) - 2.0) < 1e-5);
  CHECK(std::abs(solid_angle(lune_loop(kPi / 2.0), 4000) - kPi) < 1e-5);
  for (double theta_max : {0.5, 1.5, 2.5}) {
    const double w = 0.8;
    CHECK(std::abs(solid_angle(lune_loop(w, theta_max), 4000) - lune_area_oracle(w, theta_max)) < 1e-6);
  }
  CHECK(solid_angle(lune_loop(-1.0), 4000) == doctest::Approx(-2.0).epsilon(1e-6));
}

TEST_CASE("figure-eight encloses no net solid angle") {
  const ParameterLoop eight = waypoint_loop(
      {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}, {0.0, 1.0}, {0.0, 0.0}, {1.0, 0.0}, {1.0, -1.0}, {0.0, -1.0}});
  CHECK(std::abs(solid_angle(eight, 8000)) < 1e-9);
}

TEST_CASE("reparameterization changes speed but not geometry") {
  const ParameterLoop loop = latitude_loop(1.2, 0.15);
  for (double a : {-0.7, 0.3, 0.9}) {
    const ParameterLoop warped = loop.reparameterized(a);
    CHECK(std::abs(solid_angle(warped, 4000) - solid_angle(loop, 4000)) < 1e-5);
    for (double s : {0.1, 0.25, 0.6, 0.93}) {
      const double mapped = s + a * std::sin(2.0 * kPi * s) / (2.0 * kPi);
      CHECK(warped.sample(s).theta == doctest::Approx(loop.sample(mapped).theta));
      CHECK(warped.sample(s).phi == doctest::Approx(loop.sample(mapped).phi));
    }
    // Reversal of a warped loop is still the same curve backwards.
    CHECK(std::abs(solid_angle(warped.reversed(), 4000) + solid_angle(loop, 4000)) < 1e-5);
    for (double s : {0.1, 0.4, 0.8}) {
      CHECK(warped.reversed().sample(s).phi == doctest::Approx(warped.sample(1.0 - s).phi));
    }
  }
  CHECK_THROWS_AS(loop.reparameterized(1.0), ValidationError);
}

TEST_CASE("discretize") {
  const std::vector<LoopPoint> pts = discretize(latitude_loop(0.5, 0.1, 2.0), 10);
  REQUIRE(pts.size() == 11);
  CHECK(pts.front().theta == 0.0);
  CHECK(pts[5].theta == doctest::Approx(0.5));
  CHECK(pts[5].omega_scale == 2.0);
  CHECK_THROWS_AS(discretize(latitude_loop(0.5, 0.1), 1), ValidationError);
}

TEST_CASE("loop validation") {
  CHECK_THROWS_AS(latitude_loop(0.0, 0.1), ValidationError);
  CHECK_THROWS_AS(latitude_loop(kPi, 0.1), ValidationError);
  CHECK_THROWS_AS(latitude_loop(1.0, 0.5), ValidationError);
  CHECK_THROWS_AS(latitude_loop(1.0, 0.1, 0.0), ValidationError);
  CHECK_THROWS_AS(waypoint_loop({{0.0, 0.0}, {1.0, 0.0}}), ValidationError);
  CHECK_THROWS_AS(waypoint_loop({{0.0, 0.0}, {4.0, 0.0}, {0.0, 0.0}}), ValidationError);
  CHECK_THROWS_AS(lune_loop(0.0), ValidationError);
  CHECK_THROWS_AS(lune_loop(1.0, 3.5), ValidationError);
  CHECK_THROWS_AS(solid_angle(latitude_loop(1.0, 0.1), 50), ValidationError);
  // An open path has no enclosed area.
  const ParameterLoop open({LoopSegment{0.0, 1.0, {0.0, 0.0}, {1.0, 0.0}, Easing::kLinear}}, 1.0);
  CHECK(open.closure_error() > 0.5);
  CHECK_THROWS_AS(solid_angle(open, 200), ValidationError);
}

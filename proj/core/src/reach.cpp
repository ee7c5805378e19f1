// Copyright 2026 The viscid Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "viscid/reach.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace viscid {
namespace {

void require_time(double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("reach: time must be >= 0");
}

}  // namespace

ReachBall reach_ball_position(double t, const ModelParams& params) {
  require_time(t);
  const double decay = -std::expm1(-t);
  const double radius = t < 1e-3
      ? t * t * (0.5 - t * (1.0 / 6.0 - t * (1.0 / 24.0 - t / 120.0)))
      : t - decay;
  return ReachBall{params.initial_velocity() * decay, radius};
}

ReachBall reach_ball_velocity(double t, const ModelParams& params) {
  require_time(t);
  return ReachBall{params.initial_velocity() * std::exp(-t), -std::expm1(-t)};
}

ReachBall reach_ball(Problem problem, double t, const ModelParams& params) {
  return problem == Problem::Position ? reach_ball_position(t, params)
                                      : reach_ball_velocity(t, params);
}

double distance_to(const ReachBall& ball, const Vec& h) {
  return std::max(0.0, norm(h - ball.center) - ball.radius);
}

double dist_position(double t, const Vec& h, const ModelParams& params) {
  return distance_to(reach_ball_position(t, params), h);
}

double dist_velocity(double t, const Vec& h, const ModelParams& params) {
  return distance_to(reach_ball_velocity(t, params), h);
}

double reach_distance(Problem problem, double t, const Vec& h, const ModelParams& params) {
  return distance_to(reach_ball(problem, t, params), h);
}

}  // namespace viscid

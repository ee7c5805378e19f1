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

#ifndef VISCID_REACH_HPP_
#define VISCID_REACH_HPP_

// The position and velocity projections of the reachable set are balls:
//
//   R_r(t): center v0 (1 - e^{-t}) e_1, radius t - 1 + e^{-t}
//   R_v(t): center v0 e^{-t} e_1,       radius 1 - e^{-t}
//
// so the distance from a point to either one is max(0, |h - c| - radius).

#include "viscid/dynamics.hpp"
#include "viscid/vec.hpp"

namespace viscid {

struct ReachBall {
  Vec center;
  double radius = 0.0;
};

ReachBall reach_ball_position(double t, const ModelParams& params);
ReachBall reach_ball_velocity(double t, const ModelParams& params);
ReachBall reach_ball(Problem problem, double t, const ModelParams& params);

// Exact zero inside the ball.
double distance_to(const ReachBall& ball, const Vec& h);

double dist_position(double t, const Vec& h, const ModelParams& params);
double dist_velocity(double t, const Vec& h, const ModelParams& params);
double reach_distance(Problem problem, double t, const Vec& h, const ModelParams& params);

}  // namespace viscid

#endif  // VISCID_REACH_HPP_

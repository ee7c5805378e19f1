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

#ifndef VISCID_DYNAMICS_HPP_
#define VISCID_DYNAMICS_HPP_

// Model of a material point in a viscous medium driven by a force of bounded
// magnitude:
//
//   r' = v,   v' = u - v,   |u| <= 1,
//
// in units where both the drag coefficient and the force bound equal one. A
// physical model with drag k and force bound F (per unit mass) reduces to
// this form with time s = k t and lengths scaled by k^2 / F; velocities scale
// by k / F. Scale inputs that way before handing them to this library.

#include <cstddef>
#include <string_view>

#include "viscid/vec.hpp"

namespace viscid {

// Which part of the state has to meet the target.
enum class Problem { Position, Velocity };

std::string_view to_string(Problem p) noexcept;
Problem parse_problem(std::string_view text);

// Bound on |dh/dt| for the intercepted component: |v| <= 1 in position
// space and |u - v| <= 2 in velocity space.
double default_vmax(Problem p) noexcept;

inline constexpr double kControlTolerance = 1e-9;

struct State {
  Vec r;
  Vec v;
};

struct ModelParams {
  std::size_t n = 2;
  // Initial speed; the initial velocity is v0 * e_1.
  double v0 = 0.0;
  // Capture radius.
  double ell = 0.0;
  // Lipschitz constant of the target trajectory.
  double lip = 0.0;
  double vmax = 1.0;

  Vec initial_velocity() const;
  State initial_state() const;
};

// Throws ValidationError naming the first offending field.
void validate(const ModelParams& params);

// Exact solution of the dynamics over [0, dt] under the constant control u.
State propagate_const(const State& state, const Vec& u, double dt);

// Proper rotation taking a world-frame initial velocity onto the positive
// first axis, as the model assumes. Acts in the plane spanned by the
// velocity direction and e_1 and leaves the orthogonal complement alone.
class FrameAlignment {
 public:
  explicit FrameAlignment(const Vec& world_velocity);

  double speed() const noexcept { return speed_; }
  Vec to_body(const Vec& world) const;
  Vec to_world(const Vec& body) const;

 private:
  Vec rotate(const Vec& x, double sign) const;

  double speed_ = 0.0;
  Vec e1_;
  Vec w_;  // unit vector orthogonal to e1 in the rotation plane
  double cos_ = 1.0;
  double sin_ = 0.0;
  bool identity_ = true;
};

}  // namespace viscid

#endif  // VISCID_DYNAMICS_HPP_

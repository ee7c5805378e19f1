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

#include "viscid/dynamics.hpp"

#include <cmath>
#include <string>

#include "viscid/errors.hpp"

namespace viscid {

std::string_view to_string(Problem p) noexcept {
  return p == Problem::Position ? "position" : "velocity";
}

Problem parse_problem(std::string_view text) {
  if (text == "position") return Problem::Position;
  if (text == "velocity") return Problem::Velocity;
  throw ValidationError("problem", "expected 'position' or 'velocity', got '" +
                                       std::string(text) + "'");
}

double default_vmax(Problem p) noexcept {
  return p == Problem::Position ? 1.0 : 2.0;
}

Vec ModelParams::initial_velocity() const { return Vec::unit(n, 0) * v0; }

State ModelParams::initial_state() const {
  return State{Vec(n), initial_velocity()};
}

void validate(const ModelParams& params) {
  if (params.n < 1) throw ValidationError("n", "dimension must be >= 1");
  if (!(params.v0 >= 0.0 && params.v0 < 1.0))
    throw ValidationError("v0", "initial speed must lie in [0, 1)");
  if (!(params.ell >= 0.0) || !std::isfinite(params.ell))
    throw ValidationError("ell", "capture radius must be a finite value >= 0");
  if (!(params.lip >= 0.0) || !std::isfinite(params.lip))
    throw ValidationError("lip", "Lipschitz constant must be a finite value >= 0");
  if (!(params.vmax > 0.0) || !std::isfinite(params.vmax))
    throw ValidationError("vmax", "speed bound must be a finite value > 0");
}

State propagate_const(const State& state, const Vec& u, double dt) {
  if (state.r.size() != state.v.size())
    throw DimensionMismatch(state.r.size(), state.v.size());
  if (!(dt >= 0.0)) throw std::invalid_argument("propagate_const: dt must be >= 0");
  if (norm(u) > 1.0 + kControlTolerance)
    throw std::invalid_argument("propagate_const: control norm exceeds 1");
  // decay = 1 - e^{-dt}; drift = dt - 1 + e^{-dt}
  const double decay = -std::expm1(-dt);
  const double drift = dt < 1e-3
      ? dt * dt * (0.5 - dt * (1.0 / 6.0 - dt * (1.0 / 24.0 - dt / 120.0)))
      : dt - decay;
  State out;
  out.v = state.v * (1.0 - decay) + u * decay;
  out.r = state.r + state.v * decay + u * drift;
  return out;
}

FrameAlignment::FrameAlignment(const Vec& world_velocity)
    : speed_(norm(world_velocity)), e1_(Vec::unit(world_velocity.size(), 0)) {
  if (speed_ == 0.0) return;
  const Vec dir = world_velocity / speed_;
  // Rotation by angle phi from dir towards e1.
  cos_ = dir[0];
  Vec perp = dir - e1_ * cos_;
  const double perp_len = norm(perp);
  if (perp_len == 0.0) {
    if (cos_ > 0.0) return;
    // dir = -e1: rotate by pi in the (e1, e2) plane, or reflect when n = 1.
    if (dir.size() == 1) {
      identity_ = false;
      sin_ = 0.0;
      cos_ = -1.0;
      w_ = Vec(1);
      return;
    }
    w_ = Vec::unit(dir.size(), 1);
    sin_ = 0.0;
    cos_ = -1.0;
    identity_ = false;
    return;
  }
  w_ = perp / perp_len;
  sin_ = perp_len;
  identity_ = false;
}

// In the orthonormal basis (e1, w) the velocity direction is (cos, sin);
// to_body rotates by -phi, to_world by +phi.
Vec FrameAlignment::rotate(const Vec& x, double sign) const {
  if (identity_) return x;
  if (x.size() != e1_.size()) throw DimensionMismatch(x.size(), e1_.size());
  if (x.size() == 1) return x * cos_;
  const double a = inner(x, e1_);
  const double b = inner(x, w_);
  const double s = sign * sin_;
  const double a2 = cos_ * a - s * b;
  const double b2 = s * a + cos_ * b;
  return x + e1_ * (a2 - a) + w_ * (b2 - b);
}

Vec FrameAlignment::to_body(const Vec& world) const { return rotate(world, -1.0); }
Vec FrameAlignment::to_world(const Vec& body) const { return rotate(body, 1.0); }

}  // namespace viscid

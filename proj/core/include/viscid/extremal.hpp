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

#ifndef VISCID_EXTREMAL_HPP_
#define VISCID_EXTREMAL_HPP_

// Extremal controls and trajectories of the viscous point model.
//
// The adjoint system lambda' = 0, eta' = eta - lambda with terminal value
// p_T = (lambda_T, eta_T) at time T has the solution
//
//   lambda(t) = lambda_T,   eta(t) = lambda_T + (eta_T - lambda_T) e^{t - T},
//
// and the extremal control is u_E(t) = eta(t) / |eta(t)| almost everywhere.
// The endpoints s_E(T; T, p_T) over all p_T != 0 make up the boundary of the
// reachable set R(T). Every function here is invariant under positive
// scaling of p_T, so terminal costates may be passed unnormalized.

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "viscid/dynamics.hpp"
#include "viscid/vec.hpp"

namespace viscid {

struct AdjointTerminal {
  Vec lam;
  Vec eta;

  std::size_t dimension() const noexcept { return lam.size(); }
  // Stacks (lam, eta) into R^{2n} and back.
  Vec stacked() const;
  static AdjointTerminal from_stacked(const Vec& p);
};

// Which closed form describes the extremal trajectory for a given p_T.
enum class CaseTag {
  General,            // lambda_T, eta_T not collinear
  OppositeCollinear,  // eta_T = -c lambda_T, c > 0; one switch possible
  SameCollinear,      // eta_T = c lambda_T, c >= 0; constant control
  ZeroLambda,         // lambda_T = 0; constant control along eta_T
};

std::string_view to_string(CaseTag tag) noexcept;

// lambda_T and eta_T count as collinear when |lambda ^ eta| <= this times
// |lambda| |eta| (sine of the angle between them).
inline constexpr double kCollinearTolerance = 1e-9;
// lambda_T counts as zero when |lambda_T| <= this times |p_T|.
inline constexpr double kZeroLambdaTolerance = 1e-12;

struct SwitchInfo {
  bool exists = false;
  double theta = 0.0;  // meaningful only when exists
};

class SingularInstantError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

Vec adjoint_eta(double t, double T, const AdjointTerminal& p);

// The unique instant in (0, T] where eta vanishes, if any.
SwitchInfo switching_time(double T, const AdjointTerminal& p);

// Throws std::invalid_argument if both halves of p are zero.
CaseTag classify(const AdjointTerminal& p);

// u_E(t) = eta(t)/|eta(t)|. Throws SingularInstantError at the switching
// instant, where the control is undefined.
Vec extremal_control(double t, double T, const AdjointTerminal& p);

// (r_E(t), v_E(t)) in closed form for 0 <= t <= T.
State extremal_state(double t, double T, const AdjointTerminal& p,
                     const ModelParams& params);

// Same, but evaluates the closed form of `forced` regardless of what
// classify() would pick. The General form needs lambda_T and eta_T not to be
// exactly collinear; the collinear forms use only the direction of lambda_T
// (and ZeroLambda only that of eta_T).
State extremal_state(double t, double T, const AdjointTerminal& p,
                     const ModelParams& params, CaseTag forced);

// s_E(T; T, p) for every direction p in R^{2n}. Directions need not be
// normalized. `threads` = 0 picks a default; the result does not depend on
// the thread count.
std::vector<State> boundary_sample(double T, const ModelParams& params,
                                   std::span<const Vec> dirs,
                                   unsigned threads = 0);

// Coordinates of the state vector s = (r^1..r^n, v^1..v^n) addressed by a
// label such as "r1v2" (1-based axes). Returned indices are 0-based into s.
std::vector<std::size_t> parse_subspace(std::string_view label, std::size_t n);
std::string subspace_label(std::span<const std::size_t> coords, std::size_t n);

// Boundary of the projection of R(T) onto the given coordinates, sampled by
// support points: each costate is supported on `coords` only, so its
// extremal endpoint projects onto the projection's boundary.
//   1 coordinate:   the two interval endpoints;
//   2 coordinates:  m equally spaced angles, points ordered by angle;
//   3 coordinates:  m points of a Fibonacci sphere lattice;
//   more:           m Halton points pushed through the normal quantile and
//                   normalized (deterministic, no RNG state).
// Each returned point has coords.size() components.
std::vector<Vec> projection_boundary(double T, const ModelParams& params,
                                     std::span<const std::size_t> coords,
                                     std::size_t m, unsigned threads = 0);

}  // namespace viscid

#endif  // VISCID_EXTREMAL_HPP_

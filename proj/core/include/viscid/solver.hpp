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

#ifndef VISCID_SOLVER_HPP_
#define VISCID_SOLVER_HPP_

// Minimum-time interception by fixed-point iteration on universal lower
// estimators. With rho(t, h) the distance from h to the relevant projection
// of the reachable set, the iteration
//
//   t_0 = 0,   t_i = E(t_{i-1}, h_T(t_{i-1})),
//
// increases monotonically towards the first time rho(t, h_T(t)) = ell for
// every target that is v-Lipschitz, provided E never jumps past that time.
// It stops at the first t_k with rho(t_k, h_T(t_k)) < ell (1 + eps).

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "viscid/dynamics.hpp"
#include "viscid/targets.hpp"
#include "viscid/vec.hpp"

namespace viscid {

enum class EstimatorKind { Simple, Best };

std::string_view to_string(EstimatorKind kind) noexcept;
EstimatorKind parse_estimator(std::string_view text);

// t + (rho - ell) / (vmax + v) while rho > ell, else t.
double tau_simple(double t, const Vec& h, const ModelParams& params, Problem problem);

// Smallest theta >= t with rho_r(theta, h) = v (theta - t) + ell, in closed
// form through W_0. Needs v0 = 0 (throws std::invalid_argument otherwise).
double best_estimate_position(double t, const Vec& h, const ModelParams& params);

// Velocity counterpart; std::nullopt when a resting target (v = 0) can never
// be reached because |h| >= 1 + ell. Needs v0 = 0.
std::optional<double> best_estimate_velocity(double t, const Vec& h, const ModelParams& params);

// Dispatches on estimator and problem; std::nullopt means unreachable.
std::optional<double> lower_estimate(EstimatorKind kind, Problem problem, double t,
                                     const Vec& h, const ModelParams& params);

enum class IterationStatus { Converged, MaxIterations, Unreachable };

std::string_view to_string(IterationStatus status) noexcept;

struct IterationStep {
  std::size_t index = 0;
  double t = 0.0;
  double dist = 0.0;
  double step = 0.0;  // t_i - t_{i-1}; zero for the first row
};

struct IterationTrace {
  std::vector<IterationStep> steps;
  IterationStatus status = IterationStatus::MaxIterations;
  double t_final = 0.0;
  std::size_t iterations = 0;  // k, the index of the last step
};

struct InterceptSolution {
  double t_star = 0.0;
  // Constant optimal control direction (meaningful when converged).
  Vec control_dir;
  // The target sat exactly on the ball center; any direction works and e_1
  // was chosen.
  bool degenerate_control = false;
  IterationTrace trace;
};

struct SolveOptions {
  double eps = 1e-3;
  std::size_t max_iter = 1'000'000;
  // Warm start; the estimators are valid lower bounds from any t below the
  // optimum.
  double t_start = 0.0;
};

// Checks the model parameters, target dimension, eps > 0 and the v0 = 0
// requirement of the Best estimator, throwing ValidationError. Lipschitz
// sampling of the target is left to validate(Scenario).
InterceptSolution solve_intercept(const Scenario& scenario, EstimatorKind estimator,
                                  const SolveOptions& options = {});

class NoBracketError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Root of g(t) = rho(t, h_T(t)) - ell near t0 by safeguarded Newton with a
// central-difference slope, falling back to bisection whenever an iterate
// leaves the current bracket. Searches up to 1 + t0 time units away from t0
// for a sign change and throws NoBracketError if there is none.
double newton_polish(double t0, const Scenario& scenario, double tol = 1e-10);

struct VerifyReport {
  State terminal;
  Vec target;
  double miss = 0.0;
  double threshold = 0.0;
  bool pass = false;
};

// Forward simulation of the constant control over [0, t_star]; pass when the
// intercepted component ends within ell (1 + eps) of h_T(t_star).
VerifyReport verify_solution(const InterceptSolution& solution, const Scenario& scenario,
                             double eps);

struct PathSample {
  double t = 0.0;
  State state;
  Vec target;
};

// States along the constant-control path every `dt` up to t_star (the last
// sample is always at t_star).
std::vector<PathSample> simulate_path(const InterceptSolution& solution,
                                      const Scenario& scenario, double dt);

}  // namespace viscid

#endif  // VISCID_SOLVER_HPP_

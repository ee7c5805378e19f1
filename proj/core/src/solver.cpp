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

#include "viscid/solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "viscid/errors.hpp"
#include "viscid/lambert.hpp"
#include "viscid/reach.hpp"

namespace viscid {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

void require_rest_start(const ModelParams& params) {
  if (params.v0 != 0.0)
    throw std::invalid_argument("best estimator requires a rocket starting at rest (v0 = 0)");
}

double gap(const Scenario& s, double t) {
  return reach_distance(s.problem, t, s.trajectory(t), s.params) - s.params.ell;
}

}  // namespace

std::string_view to_string(EstimatorKind kind) noexcept {
  return kind == EstimatorKind::Simple ? "simple" : "best";
}

EstimatorKind parse_estimator(std::string_view text) {
  if (text == "simple") return EstimatorKind::Simple;
  if (text == "best") return EstimatorKind::Best;
  throw ValidationError("estimator", "expected 'simple' or 'best', got '" + std::string(text) + "'");
}

std::string_view to_string(IterationStatus status) noexcept {
  switch (status) {
    case IterationStatus::Converged: return "converged";
    case IterationStatus::MaxIterations: return "max-iterations";
    case IterationStatus::Unreachable: return "unreachable";
  }
  return "unknown";
}

double tau_simple(double t, const Vec& h, const ModelParams& params, Problem problem) {
  const double rho = reach_distance(problem, t, h, params);
  if (rho <= params.ell) return t;
  return t + (rho - params.ell) / (params.vmax + params.lip);
}

double best_estimate_position(double t, const Vec& h, const ModelParams& params) {
  require_rest_start(params);
  if (dist_position(t, h, params) <= params.ell) return t;
  const double v = params.lip;
  // theta = a + W_0(-e^{-a} / (1 + v)),  a = (1 + v t - ell + |h|) / (1 + v)
  const double a = (1.0 + v * t - params.ell + norm(h)) / (1.0 + v);
  double w = 0.0;
  try {
    w = lambert_w(Branch::Principal, -std::exp(-a) / (1.0 + v));
  } catch (const LambertDomainError&) {
    throw std::logic_error("best_estimate_position: Lambert argument left its domain");
  }
  return std::max(t, a + w);
}

std::optional<double> best_estimate_velocity(double t, const Vec& h, const ModelParams& params) {
  require_rest_start(params);
  if (dist_velocity(t, h, params) <= params.ell) return t;
  const double v = params.lip;
  const double hn = norm(h);
  if (v == 0.0) {
    if (1.0 + params.ell <= hn) return std::nullopt;
    return std::max(t, -std::log1p(params.ell - hn));
  }
  // theta = t - c + W_0(e^L) with c = (1 + ell - |h|)/v, L = c - t - ln v.
  // Since w + ln w = L this equals -ln(v w), which avoids the cancellation
  // between -c and W_0 when v is small.
  const double c = (1.0 + params.ell - hn) / v;
  const double log_arg = c - t - std::log(v);
  double theta = 0.0;
  if (log_arg < -700.0) {
    theta = t - c;
  } else {
    const double w = lambert_w0_exp(log_arg);
    theta = -std::log(v) - std::log(w);
  }
  return std::max(t, theta);
}

std::optional<double> lower_estimate(EstimatorKind kind, Problem problem, double t,
                                     const Vec& h, const ModelParams& params) {
  if (kind == EstimatorKind::Simple) return tau_simple(t, h, params, problem);
  if (problem == Problem::Position) return best_estimate_position(t, h, params);
  return best_estimate_velocity(t, h, params);
}

InterceptSolution solve_intercept(const Scenario& scenario, EstimatorKind estimator,
                                  const SolveOptions& options) {
  const ModelParams& params = scenario.params;
  validate(params);
  if (scenario.trajectory.dimension() != params.n)
    throw ValidationError("n", "target dimension does not match n");
  if (!(options.eps > 0.0)) throw ValidationError("eps", "relative tolerance must be > 0");
  if (!(options.t_start >= 0.0)) throw ValidationError("t_start", "warm start must be >= 0");
  if (estimator == EstimatorKind::Best && params.v0 != 0.0)
    throw ValidationError("estimator", "the best estimator needs v0 = 0");

  const double capture = params.ell * (1.0 + options.eps);
  InterceptSolution sol;
  IterationTrace& trace = sol.trace;
  double t = options.t_start;
  double prev = t;
  for (std::size_t i = 0;; ++i) {
    const Vec h = scenario.trajectory(t);
    const double d = reach_distance(scenario.problem, t, h, params);
    trace.steps.push_back(IterationStep{i, t, d, i == 0 ? 0.0 : t - prev});
    trace.iterations = i;
    trace.t_final = t;
    if (d < capture || (params.ell == 0.0 && d == 0.0)) {
      trace.status = IterationStatus::Converged;
      break;
    }
    if (i >= options.max_iter) {
      trace.status = IterationStatus::MaxIterations;
      break;
    }
    const auto next = lower_estimate(estimator, scenario.problem, t, h, params);
    if (!next) {
      trace.status = IterationStatus::Unreachable;
      break;
    }
    if (!(*next > t)) {
      // The step fell below the resolution of t; further iterations would
      // repeat the same value.
      trace.status = IterationStatus::MaxIterations;
      break;
    }
    prev = t;
    t = *next;
  }

  sol.t_star = trace.t_final;
  const Vec h = scenario.trajectory(sol.t_star);
  const Vec offset = h - reach_ball(scenario.problem, sol.t_star, params).center;
  const double len = norm(offset);
  if (len > 0.0) {
    sol.control_dir = offset / len;
  } else {
    sol.control_dir = Vec::unit(params.n, 0);
    sol.degenerate_control = true;
  }
  return sol;
}

double newton_polish(double t0, const Scenario& scenario, double tol) {
  if (!(t0 >= 0.0)) throw std::invalid_argument("newton_polish: t0 must be >= 0");
  const double g0 = gap(scenario, t0);
  if (std::abs(g0) <= tol) return t0;

  // |dg/dt| <= vmax + v, so a step of |g| / (vmax + v) cannot cross a root.
  const double rate = scenario.params.vmax + scenario.params.lip;
  const double window = 1.0 + t0;
  double lo = t0, hi = t0, glo = g0, ghi = g0;
  bool found = false;
  double step = std::max(std::abs(g0) / rate, 1e-12 * std::max(1.0, t0));
  for (int k = 0; k < 200 && !found; ++k) {
    if (g0 > 0.0) {
      const double cand = lo + step;
      if (cand > t0 + window) break;
      const double gc = gap(scenario, cand);
      if (gc <= 0.0) {
        hi = cand;
        ghi = gc;
        found = true;
      } else {
        lo = cand;
        glo = gc;
        step = std::max(step * 2.0, gc / rate);
      }
    } else {
      const double cand = std::max(0.0, hi - step);
      if (cand < t0 - window) break;
      const double gc = gap(scenario, cand);
      if (gc > 0.0) {
        lo = cand;
        glo = gc;
        found = true;
      } else {
        hi = cand;
        ghi = gc;
        if (cand == 0.0) break;
        step *= 2.0;
      }
    }
  }
  if (!found)
    throw NoBracketError("newton_polish: no sign change of rho - ell near t0; "
                         "run more fixed-point steps first");
  if (std::abs(glo) <= tol) return lo;
  if (std::abs(ghi) <= tol) return hi;

  double t = lo + glo * (hi - lo) / (glo - ghi);
  for (int it = 0; it < 200; ++it) {
    const double gt = gap(scenario, t);
    if (std::abs(gt) <= tol) return t;
    if (gt > 0.0) {
      lo = t;
      glo = gt;
    } else {
      hi = t;
      ghi = gt;
    }
    if (hi - lo <= 4.0 * kEps * std::max(1.0, hi)) return std::abs(glo) < std::abs(ghi) ? lo : hi;
    const double delta = 1e-7 * std::max(1.0, t);
    const double left = std::max(0.0, t - delta);
    const double slope = (gap(scenario, t + delta) - gap(scenario, left)) / (t + delta - left);
    double next = slope != 0.0 ? t - gt / slope : lo;
    if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    t = next;
  }
  return t;
}

VerifyReport verify_solution(const InterceptSolution& solution, const Scenario& scenario,
                             double eps) {
  VerifyReport report;
  report.terminal =
      propagate_const(scenario.params.initial_state(), solution.control_dir, solution.t_star);
  report.target = scenario.trajectory(solution.t_star);
  const Vec& reached =
      scenario.problem == Problem::Position ? report.terminal.r : report.terminal.v;
  report.miss = norm(reached - report.target);
  report.threshold = scenario.params.ell * (1.0 + eps);
  report.pass = report.miss <= report.threshold;
  return report;
}

std::vector<PathSample> simulate_path(const InterceptSolution& solution,
                                      const Scenario& scenario, double dt) {
  if (!(dt > 0.0)) throw std::invalid_argument("simulate_path: dt must be > 0");
  const State start = scenario.params.initial_state();
  std::vector<PathSample> out;
  for (std::size_t i = 0;; ++i) {
    const double t = std::min(solution.t_star, dt * static_cast<double>(i));
    out.push_back(PathSample{t, propagate_const(start, solution.control_dir, t),
                             scenario.trajectory(t)});
    if (t >= solution.t_star) break;
  }
  return out;
}

}  // namespace viscid

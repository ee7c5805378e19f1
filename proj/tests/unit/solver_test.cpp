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


#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "viscid/errors.hpp"
#include "viscid/reach.hpp"
#include "viscid/solver.hpp"

namespace viscid {
namespace {

ModelParams make_params(double v0, double ell, double lip, Problem problem) {
  ModelParams p;
  p.v0 = v0;
  p.ell = ell;
  p.lip = lip;
  p.vmax = default_vmax(problem);
  return p;
}

Scenario lissajous_scenario(double v0, double lip = 0.5) {
  return Scenario{Problem::Position, make_params(v0, 0.1, lip, Problem::Position),
                  lissajous_target()};
}

Scenario rotating_scenario() {
  return Scenario{Problem::Velocity, make_params(0.5, 0.1, 0.8, Problem::Velocity),
                  rotating_velocity_target()};
}

double dense_root(const Scenario& s, double t_final) {
  const auto root = oracle::dense_first_root(
      [&](double t) {
        return oracle::capture_gap(s.problem, t, s.trajectory(t), s.params.v0, s.params.ell);
      },
      1.5 * t_final + 1e-3);
  EXPECT_TRUE(root.has_value());
  return root.value_or(NAN);
}

TEST(EstimatorTest, SimpleExamples) {
  const ModelParams pp = make_params(0.5, 0.1, 0.5, Problem::Position);
  EXPECT_NEAR(tau_simple(0.0, Vec{1.0, 0.0}, pp, Problem::Position), 0.6, 1e-15);
  const ModelParams vp = make_params(0.0, 0.1, 0.0, Problem::Velocity);
  EXPECT_NEAR(tau_simple(0.0, Vec{0.6, 0.0}, vp, Problem::Velocity), 0.25, 1e-15);
  EXPECT_EQ(tau_simple(0.7, Vec{0.05, 0.0}, vp, Problem::Velocity), 0.7);
}

TEST(EstimatorTest, BestPositionExample) {
  const ModelParams p = make_params(0.0, 0.1, 0.5, Problem::Position);
  const auto root = oracle::bisect(
      [](double th) { return 2.0 - (th - 1 + std::exp(-th)) - 0.5 * th - 0.1; }, 0.0, 10.0);
  ASSERT_TRUE(root.has_value());
  const double got = best_estimate_position(0.0, Vec{2.0, 0.0}, p);
  EXPECT_NEAR(got, *root, 1e-12);
  EXPECT_NEAR(got, 1.826, 1e-3);
  const ModelParams still = make_params(0.0, 0.3, 0.0, Problem::Position);
  EXPECT_EQ(best_estimate_position(0.0, Vec{0.3, 0.0}, still), 0.0);
  EXPECT_THROW(best_estimate_position(0.0, Vec{2.0, 0.0}, make_params(0.5, 0.1, 0.5,
                                                                        Problem::Position)),
               std::invalid_argument);
}

TEST(EstimatorTest, BestVelocityExamples) {
  const ModelParams rest = make_params(0.0, 0.1, 0.0, Problem::Velocity);
  const auto a = best_estimate_velocity(0.0, Vec{0.6, 0.0}, rest);
  ASSERT_TRUE(a.has_value());
  const auto root_a =
      oracle::bisect([](double th) { return 1 - std::exp(-th) - 0.5; }, 0.0, 10.0);
  EXPECT_NEAR(*a, *root_a, 1e-14);
  EXPECT_NEAR(*a, 0.6931, 1e-4);
  EXPECT_FALSE(best_estimate_velocity(0.0, Vec{1.2, 0.0}, rest).has_value());
  EXPECT_FALSE(best_estimate_velocity(0.0, Vec{0.0, 1.1}, rest).has_value());

  const ModelParams moving = make_params(0.0, 0.1, 0.8, Problem::Velocity);
  const auto b = best_estimate_velocity(0.0, Vec{0.6, 0.0}, moving);
  ASSERT_TRUE(b.has_value());
  const auto root_b = oracle::bisect(
      [](double th) { return 0.6 - (1 - std::exp(-th)) - 0.8 * th - 0.1; }, 0.0, 10.0);
  EXPECT_NEAR(*b, *root_b, 1e-14);
}

TEST(EstimatorTest, BestDominatesSimpleAndSolvesTangency) {
  std::mt19937_64 rng(31);
  std::uniform_real_distribution<double> ut(0.0, 5.0), uh(0.0, 6.0), ul(0.0, 0.5), uv(0.0, 1.5);
  int checked = 0;
  for (int k = 0; k < 2000; ++k) {
    const double t = ut(rng), ell = ul(rng), v = uv(rng);
    for (Problem pr : {Problem::Position, Problem::Velocity}) {
      const ModelParams p = make_params(0.0, ell, v, pr);
      const double hn = pr == Problem::Position ? uh(rng) : uh(rng) / 3.0;
      const Vec h{hn * 0.6, -hn * 0.8};
      const double rho = reach_distance(pr, t, h, p);
      if (rho <= ell) continue;
      const auto best = lower_estimate(EstimatorKind::Best, pr, t, h, p);
      if (!best) continue;
      ++checked;
      EXPECT_GE(*best, tau_simple(t, h, p, pr));
      const double lhs = reach_distance(pr, *best, h, p);
      EXPECT_NEAR(lhs, v * (*best - t) + ell, 1e-9 * std::max(1.0, lhs));
    }
  }
  EXPECT_GT(checked, 1000);
}

TEST(EstimatorTest, Parsing) {
  EXPECT_EQ(parse_estimator("simple"), EstimatorKind::Simple);
  EXPECT_EQ(parse_estimator("best"), EstimatorKind::Best);
  EXPECT_THROW(parse_estimator("fast"), ValidationError);
  EXPECT_EQ(to_string(IterationStatus::Unreachable), "unreachable");
}

TEST(SolveInterceptTest, TrivialCapture) {
  const Scenario s{Problem::Position, make_params(0.0, 0.2, 0.0, Problem::Position),
                   constant_target(Vec{0.1, 0.1})};
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple);
  EXPECT_EQ(sol.trace.status, IterationStatus::Converged);
  EXPECT_EQ(sol.trace.iterations, 0u);
  EXPECT_EQ(sol.trace.steps.size(), 1u);
  EXPECT_EQ(sol.t_star, 0.0);
  const Scenario origin{Problem::Position, make_params(0.0, 0.0, 0.0, Problem::Position),
                        constant_target(Vec{0.0, 0.0})};
  const InterceptSolution exact = solve_intercept(origin, EstimatorKind::Best);
  EXPECT_EQ(exact.trace.status, IterationStatus::Converged);
  EXPECT_TRUE(exact.degenerate_control);
  EXPECT_EQ(exact.control_dir, (Vec{1.0, 0.0}));
}

TEST(SolveInterceptTest, LissajousSimple) {
  const Scenario s = lissajous_scenario(0.5);
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple);
  ASSERT_EQ(sol.trace.status, IterationStatus::Converged);
  ASSERT_GE(sol.trace.steps.size(), 2u);
  EXPECT_NEAR(sol.trace.steps[1].t, 0.6, 1e-15);
  for (std::size_t i = 1; i < sol.trace.steps.size(); ++i) {
    EXPECT_GT(sol.trace.steps[i].t, sol.trace.steps[i - 1].t);
    EXPECT_NEAR(sol.trace.steps[i].step, sol.trace.steps[i].t - sol.trace.steps[i - 1].t, 0.0);
  }
  const double root = dense_root(s, sol.t_star);
  EXPECT_LE(sol.t_star, root + 1e-4);
  EXPECT_LT(sol.trace.steps.back().dist, 0.1 * (1 + 1e-3));
  EXPECT_NEAR(norm(sol.control_dir), 1.0, 1e-15);
}

TEST(SolveInterceptTest, IteratesStayBelowFirstRoot) {
  for (const Scenario& s : {lissajous_scenario(0.5, kLissajousLip), lissajous_scenario(0.0, kLissajousLip),
                            rotating_scenario()}) {
    for (EstimatorKind kind : {EstimatorKind::Simple, EstimatorKind::Best}) {
      if (kind == EstimatorKind::Best && s.params.v0 != 0.0) continue;
      const InterceptSolution sol = solve_intercept(s, kind);
      ASSERT_EQ(sol.trace.status, IterationStatus::Converged);
      const double root = dense_root(s, sol.t_star);
      for (const auto& step : sol.trace.steps) EXPECT_LE(step.t, root + 1e-4);
    }
  }
}

TEST(SolveInterceptTest, RotatingVelocityVerifies) {
  const Scenario s = rotating_scenario();
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple);
  ASSERT_EQ(sol.trace.status, IterationStatus::Converged);
  EXPECT_TRUE(verify_solution(sol, s, 1e-3).pass);
  EXPECT_NEAR(newton_polish(sol.t_star, s), dense_root(s, sol.t_star), 1e-8);
}

TEST(SolveInterceptTest, BestNeverTrailsSimple) {
  const Scenario s = lissajous_scenario(0.0);
  const InterceptSolution simple = solve_intercept(s, EstimatorKind::Simple);
  const InterceptSolution best = solve_intercept(s, EstimatorKind::Best);
  ASSERT_EQ(simple.trace.status, IterationStatus::Converged);
  ASSERT_EQ(best.trace.status, IterationStatus::Converged);
  EXPECT_LE(best.trace.iterations, simple.trace.iterations);
  const std::size_t common = std::min(simple.trace.steps.size(), best.trace.steps.size());
  for (std::size_t i = 0; i < common; ++i)
    EXPECT_GE(best.trace.steps[i].t, simple.trace.steps[i].t);
}

TEST(SolveInterceptTest, StatusOutcomes) {
  const Scenario far{Problem::Velocity, make_params(0.0, 0.1, 0.0, Problem::Velocity),
                     constant_target(Vec{1.2, 0.0})};
  EXPECT_EQ(solve_intercept(far, EstimatorKind::Best).trace.status, IterationStatus::Unreachable);
  SolveOptions few;
  few.max_iter = 3;
  const InterceptSolution capped = solve_intercept(far, EstimatorKind::Simple, few);
  EXPECT_EQ(capped.trace.status, IterationStatus::MaxIterations);
  EXPECT_EQ(capped.trace.iterations, 3u);
  EXPECT_EQ(capped.trace.steps.size(), 4u);
}

TEST(SolveInterceptTest, RejectsInvalidInput) {
  EXPECT_THROW(solve_intercept(lissajous_scenario(0.5), EstimatorKind::Best), ValidationError);
  SolveOptions bad;
  bad.eps = 0.0;
  EXPECT_THROW(solve_intercept(lissajous_scenario(0.0), EstimatorKind::Simple, bad),
               ValidationError);
  Scenario wrong_dim = lissajous_scenario(0.0);
  wrong_dim.params.n = 3;
  EXPECT_THROW(solve_intercept(wrong_dim, EstimatorKind::Simple), ValidationError);
}

TEST(SolveInterceptTest, StationaryTargetMatchesAnalyticRoot) {
  std::mt19937_64 rng(37);
  std::uniform_real_distribution<double> uv(0.0, 0.9), uh(-4.0, 4.0), ul(0.0, 0.3);
  for (int k = 0; k < 40; ++k) {
    const Vec h{uh(rng), uh(rng)};
    const Scenario s{Problem::Position, make_params(uv(rng), ul(rng), 0.0, Problem::Position),
                     constant_target(h)};
    const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple);
    ASSERT_EQ(sol.trace.status, IterationStatus::Converged);
    if (oracle::capture_gap(s.problem, 0.0, h, s.params.v0, s.params.ell) <= 0.0) continue;
    const double v0 = s.params.v0, ell = s.params.ell;
    const auto root = oracle::bisect(
        [&](double t) {
          return norm(h - Vec{v0 * (1 - std::exp(-t)), 0.0}) - (t - 1 + std::exp(-t)) - ell;
        },
        0.0, sol.t_star + 1.0);
    ASSERT_TRUE(root.has_value());
    EXPECT_NEAR(newton_polish(sol.t_star, s), *root, 1e-6);
  }
}

TEST(SolveInterceptTest, BestReachesStationaryRootInOneStep) {
  const Scenario s{Problem::Position, make_params(0.0, 0.1, 0.0, Problem::Position),
                   constant_target(Vec{1.5, -0.5})};
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Best);
  ASSERT_EQ(sol.trace.status, IterationStatus::Converged);
  EXPECT_EQ(sol.trace.iterations, 1u);
  const double hn = norm(Vec{1.5, -0.5});
  const auto root =
      oracle::bisect([&](double t) { return hn - (t - 1 + std::exp(-t)) - 0.1; }, 0.0, 10.0);
  EXPECT_NEAR(sol.t_star, *root, 1e-12);
}

TEST(NewtonPolishTest, ReturnsEarlyWhenAlreadySolved) {
  const Scenario s = lissajous_scenario(0.5);
  const double t = newton_polish(1.0, s);
  EXPECT_EQ(newton_polish(t, s), t);
}

TEST(NewtonPolishTest, PolishesCoarseIterate) {
  const Scenario s = lissajous_scenario(0.5);
  SolveOptions coarse;
  coarse.eps = 0.5;
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple, coarse);
  ASSERT_EQ(sol.trace.status, IterationStatus::Converged);
  const double t = newton_polish(sol.t_star, s);
  EXPECT_LE(std::abs(reach_distance(s.problem, t, s.trajectory(t), s.params) - s.params.ell),
            1e-10);
  EXPECT_NEAR(t, dense_root(s, t), 1e-8);
}

TEST(NewtonPolishTest, LinearTargetMatchesClosedForm) {
  const Trajectory line(TrajectoryKind::PiecewiseLinear, 2, 0.3,
                        [](double t) { return Vec{2.0 - 0.3 * t, 0.0}; });
  const Scenario s{Problem::Position, make_params(0.0, 0.1, 0.3, Problem::Position), line};
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple);
  const double expected = best_estimate_position(0.0, Vec{2.0, 0.0}, s.params);
  EXPECT_NEAR(newton_polish(sol.t_star, s), expected, 1e-9);
  // The best estimator is exact for a target closing in at its full speed.
  EXPECT_EQ(solve_intercept(s, EstimatorKind::Best).trace.iterations, 1u);
}

TEST(NewtonPolishTest, NoBracket) {
  const Scenario far{Problem::Velocity, make_params(0.0, 0.1, 0.0, Problem::Velocity),
                     constant_target(Vec{1.5, 0.0})};
  EXPECT_THROW(newton_polish(0.5, far), NoBracketError);
}

TEST(VerifyTest, ConvergedSolutionPasses) {
  const Scenario s = lissajous_scenario(0.5);
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple);
  const VerifyReport ok = verify_solution(sol, s, 1e-3);
  EXPECT_TRUE(ok.pass);
  EXPECT_LE(ok.miss, 0.1 * (1 + 1e-3));

  InterceptSolution rotated = sol;
  const double c = std::cos(0.2), sn = std::sin(0.2);
  rotated.control_dir = Vec{c * sol.control_dir[0] - sn * sol.control_dir[1],
                            sn * sol.control_dir[0] + c * sol.control_dir[1]};
  EXPECT_GT(verify_solution(rotated, s, 1e-3).miss, ok.miss);
}

TEST(VerifyTest, TrivialCapturePassesWithInitialDistance) {
  const Scenario s{Problem::Velocity, make_params(0.3, 0.2, 0.0, Problem::Velocity),
                   constant_target(Vec{0.4, 0.1})};
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple);
  ASSERT_EQ(sol.t_star, 0.0);
  const VerifyReport rep = verify_solution(sol, s, 1e-3);
  EXPECT_TRUE(rep.pass);
  EXPECT_NEAR(rep.miss, norm(Vec{0.1, 0.1}), 1e-15);
}

TEST(SimulatePathTest, EndsAtInterceptTime) {
  const Scenario s = rotating_scenario();
  const InterceptSolution sol = solve_intercept(s, EstimatorKind::Simple);
  const auto path = simulate_path(sol, s, 0.05);
  ASSERT_GE(path.size(), 2u);
  EXPECT_EQ(path.front().t, 0.0);
  EXPECT_EQ(path.back().t, sol.t_star);
  EXPECT_EQ(path.front().state.v, s.params.initial_velocity());
  EXPECT_THROW(simulate_path(sol, s, 0.0), std::invalid_argument);
}

}  // namespace
}  // namespace viscid

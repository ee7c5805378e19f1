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

#ifndef VISCID_TARGETS_HPP_
#define VISCID_TARGETS_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <memory>
#include <numbers>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "viscid/dynamics.hpp"
#include "viscid/vec.hpp"

namespace viscid {

enum class TrajectoryKind { Lissajous, RotatingVelocity, ConstantPoint, PiecewiseLinear, Sampled };

std::string_view to_string(TrajectoryKind kind) noexcept;

// A target path h_T : [0, inf) -> R^n together with its declared Lipschitz
// constant. Immutable; copies share the underlying evaluator.
class Trajectory {
 public:
  using Eval = std::function<Vec(double)>;

  Trajectory(TrajectoryKind kind, std::size_t dimension, double lip, Eval eval);

  Vec operator()(double t) const { return (*eval_)(t); }

  TrajectoryKind kind() const noexcept { return kind_; }
  std::size_t dimension() const noexcept { return dimension_; }
  double lip() const noexcept { return lip_; }

  // Composes with a distance-preserving map (e.g. a frame rotation), which
  // keeps the Lipschitz constant.
  Trajectory mapped(std::function<Vec(const Vec&)> isometry) const;

 private:
  TrajectoryKind kind_;
  std::size_t dimension_;
  double lip_;
  std::shared_ptr<const Eval> eval_;
};

// h(t) = [1 + sin(3t)/6, (sqrt2/4) sin(sqrt2 t)]. Its velocity
// [cos(3t)/2, cos(sqrt2 t)/2] has norm sqrt2/2 at t = 0, so that is the
// Euclidean Lipschitz constant (each component alone is 1/2-Lipschitz).
Vec lissajous(double t);
inline constexpr double kLissajousLip = std::numbers::sqrt2 / 2.0;
Trajectory lissajous_target();

// h(t) = -(8/15) [sin(3t/2), cos(3t/2)], a velocity rotating at speed 4/5.
Vec rotating_velocity(double t);
inline constexpr double kRotatingVelocityLip = 0.8;
Trajectory rotating_velocity_target();

Trajectory constant_target(Vec h);

struct SampleRow {
  double t = 0.0;
  Vec h;
};

// Linear interpolation between knots, holding the last value afterwards.
// Knot times must start at 0 and increase strictly; every segment slope must
// be at most `lip` (1e-9 relative slack). Violations throw ValidationError.
Trajectory piecewise_linear_target(std::span<const SampleRow> knots, double lip);

// Same interpolant for data read from a file; tagged as Sampled.
Trajectory load_sampled(std::span<const SampleRow> rows, double lip);

// CSV with header "t,h1,...,hn", '.' decimal separator, rows sorted by t.
std::vector<SampleRow> parse_sampled_csv(std::istream& in);
Trajectory read_sampled_csv(const std::filesystem::path& path, double lip);

// Largest |h(t2) - h(t1)| / |t2 - t1| seen over `pairs` random pairs and a
// uniform grid of `grid` steps on [0, horizon]. Deterministic for a seed.
double max_observed_speed(const Trajectory& traj, double horizon, std::size_t pairs,
                          std::size_t grid, std::uint64_t seed = 0x5eedULL);

struct Scenario {
  Problem problem = Problem::Position;
  ModelParams params;
  Trajectory trajectory;
};

struct ValidationOptions {
  // When false the declared constant is trusted as given: params.lip may be
  // below trajectory.lip and no sampling is done. Convergence to the true
  // minimum time is then no longer guaranteed.
  bool check_lipschitz = true;
  double horizon = 50.0;
  std::size_t pairs = 10000;
  std::size_t grid = 20000;
};

// Throws ValidationError naming the offending field.
void validate(const Scenario& scenario, const ValidationOptions& options = {});

}  // namespace viscid

#endif  // VISCID_TARGETS_HPP_

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

#include "viscid/targets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <random>
#include <sstream>

#include "viscid/errors.hpp"

namespace viscid {
namespace {

constexpr double kLipSlack = 1e-9;

std::string fmt(double x) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

void check_knots(std::span<const SampleRow> knots, double lip) {
  if (knots.empty()) throw ValidationError("target", "trajectory needs at least one sample");
  if (!(lip >= 0.0)) throw ValidationError("lip", "Lipschitz constant must be >= 0");
  if (knots.front().t != 0.0) throw ValidationError("target", "first sample must be at t = 0");
  const std::size_t n = knots.front().h.size();
  if (n == 0) throw ValidationError("target", "samples must have at least one component");
  for (std::size_t i = 0; i < knots.size(); ++i) {
    if (knots[i].h.size() != n)
      throw ValidationError("target", "sample " + std::to_string(i) + " has dimension " +
                                          std::to_string(knots[i].h.size()) + ", expected " +
                                          std::to_string(n));
    if (i == 0) continue;
    const double dt = knots[i].t - knots[i - 1].t;
    if (!(dt > 0.0))
      throw ValidationError("target", "sample times must increase strictly (row " +
                                          std::to_string(i) + ")");
    const double slope = norm(knots[i].h - knots[i - 1].h) / dt;
    if (slope > lip * (1.0 + kLipSlack))
      throw ValidationError("lip", "segment " + std::to_string(i) + " moves at speed " +
                                       fmt(slope) + " > declared " + fmt(lip));
  }
}

Trajectory::Eval interpolant(std::span<const SampleRow> knots) {
  auto times = std::make_shared<std::vector<double>>();
  auto points = std::make_shared<std::vector<Vec>>();
  for (const SampleRow& k : knots) {
    times->push_back(k.t);
    points->push_back(k.h);
  }
  return [times, points](double t) -> Vec {
    const auto& ts = *times;
    const auto& ps = *points;
    if (t <= ts.front()) return ps.front();
    if (t >= ts.back()) return ps.back();
    const auto hi = static_cast<std::size_t>(std::upper_bound(ts.begin(), ts.end(), t) - ts.begin());
    const std::size_t lo = hi - 1;
    const double a = (t - ts[lo]) / (ts[hi] - ts[lo]);
    return ps[lo] * (1.0 - a) + ps[hi] * a;
  };
}

double parse_number(std::string_view field, std::size_t line) {
  // Trim surrounding blanks.
  while (!field.empty() && (field.front() == ' ' || field.front() == '\t')) field.remove_prefix(1);
  while (!field.empty() && (field.back() == ' ' || field.back() == '\t' || field.back() == '\r'))
    field.remove_suffix(1);
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
    throw ValidationError("target", "line " + std::to_string(line) + ": cannot parse '" +
                                        std::string(field) + "' as a number");
  return value;
}

std::vector<std::string_view> split(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    out.push_back(line.substr(start, comma - start));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

}  // namespace

std::string_view to_string(TrajectoryKind kind) noexcept {
  switch (kind) {
    case TrajectoryKind::Lissajous: return "lissajous";
    case TrajectoryKind::RotatingVelocity: return "rotating-velocity";
    case TrajectoryKind::ConstantPoint: return "constant";
    case TrajectoryKind::PiecewiseLinear: return "piecewise-linear";
    case TrajectoryKind::Sampled: return "sampled";
  }
  return "unknown";
}

Trajectory::Trajectory(TrajectoryKind kind, std::size_t dimension, double lip, Eval eval)
    : kind_(kind), dimension_(dimension), lip_(lip),
      eval_(std::make_shared<const Eval>(std::move(eval))) {}

Trajectory Trajectory::mapped(std::function<Vec(const Vec&)> isometry) const {
  auto inner_eval = eval_;
  return Trajectory(kind_, dimension_, lip_,
                    [inner_eval, isometry = std::move(isometry)](double t) {
                      return isometry((*inner_eval)(t));
                    });
}

Vec lissajous(double t) {
  return Vec{1.0 + std::sin(3.0 * t) / 6.0,
             std::numbers::sqrt2 / 4.0 * std::sin(std::numbers::sqrt2 * t)};
}

Trajectory lissajous_target() {
  return Trajectory(TrajectoryKind::Lissajous, 2, kLissajousLip, lissajous);
}

Vec rotating_velocity(double t) {
  constexpr double a = 8.0 / 15.0;
  return Vec{-a * std::sin(1.5 * t), -a * std::cos(1.5 * t)};
}

Trajectory rotating_velocity_target() {
  return Trajectory(TrajectoryKind::RotatingVelocity, 2, kRotatingVelocityLip, rotating_velocity);
}

Trajectory constant_target(Vec h) {
  if (h.empty()) throw ValidationError("target", "constant target needs at least one component");
  const std::size_t n = h.size();
  return Trajectory(TrajectoryKind::ConstantPoint, n, 0.0, [h = std::move(h)](double) { return h; });
}

Trajectory piecewise_linear_target(std::span<const SampleRow> knots, double lip) {
  check_knots(knots, lip);
  return Trajectory(TrajectoryKind::PiecewiseLinear, knots.front().h.size(), lip, interpolant(knots));
}

Trajectory load_sampled(std::span<const SampleRow> rows, double lip) {
  check_knots(rows, lip);
  return Trajectory(TrajectoryKind::Sampled, rows.front().h.size(), lip, interpolant(rows));
}

std::vector<SampleRow> parse_sampled_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw ValidationError("target", "empty trajectory file");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  // Strip a UTF-8 byte order mark.
  if (line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
  const auto header = split(line);
  if (header.size() < 2 || header[0] != "t")
    throw ValidationError("target", "header must be 't,h1,...,hn'");
  for (std::size_t i = 1; i < header.size(); ++i) {
    if (header[i] != "h" + std::to_string(i))
      throw ValidationError("target", "header column " + std::to_string(i + 1) + " must be 'h" +
                                          std::to_string(i) + "'");
  }
  const std::size_t n = header.size() - 1;
  std::vector<SampleRow> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line);
    if (fields.size() != n + 1)
      throw ValidationError("target", "line " + std::to_string(line_no) + " has " +
                                          std::to_string(fields.size()) + " fields, expected " +
                                          std::to_string(n + 1));
    SampleRow row;
    row.t = parse_number(fields[0], line_no);
    row.h = Vec(n);
    for (std::size_t i = 0; i < n; ++i) row.h[i] = parse_number(fields[i + 1], line_no);
    rows.push_back(std::move(row));
  }
  return rows;
}

Trajectory read_sampled_csv(const std::filesystem::path& path, double lip) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open trajectory file '" + path.string() + "'");
  const auto rows = parse_sampled_csv(in);
  return load_sampled(rows, lip);
}

double max_observed_speed(const Trajectory& traj, double horizon, std::size_t pairs,
                          std::size_t grid, std::uint64_t seed) {
  double worst = 0.0;
  auto probe = [&](double a, double b) {
    if (a == b) return;
    worst = std::max(worst, norm(traj(b) - traj(a)) / std::abs(b - a));
  };
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> when(0.0, horizon);
  for (std::size_t i = 0; i < pairs; ++i) probe(when(rng), when(rng));
  if (grid > 0) {
    const double dt = horizon / static_cast<double>(grid);
    Vec prev = traj(0.0);
    for (std::size_t i = 1; i <= grid; ++i) {
      Vec cur = traj(dt * static_cast<double>(i));
      worst = std::max(worst, norm(cur - prev) / dt);
      prev = std::move(cur);
    }
  }
  return worst;
}

void validate(const Scenario& scenario, const ValidationOptions& options) {
  validate(scenario.params);
  const Trajectory& traj = scenario.trajectory;
  if (traj.dimension() != scenario.params.n)
    throw ValidationError("n", "target has dimension " + std::to_string(traj.dimension()) +
                                   " but n = " + std::to_string(scenario.params.n));
  if (!options.check_lipschitz) return;
  if (scenario.params.lip < traj.lip())
    throw ValidationError("lip", "scenario Lipschitz constant " + fmt(scenario.params.lip) +
                                     " is below the target's declared " + fmt(traj.lip()));
  const double seen = max_observed_speed(traj, options.horizon, options.pairs, options.grid);
  if (seen > scenario.params.lip * (1.0 + kLipSlack) + 1e-15)
    throw ValidationError("lip", "target moves at speed " + fmt(seen) + " > declared " +
                                     fmt(scenario.params.lip));
}

}  // namespace viscid

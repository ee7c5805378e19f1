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


#include "viscid/cli/config.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <string>

#include "viscid/cli/output.hpp"
#include "viscid/errors.hpp"

namespace viscid::cli {
namespace {

double parse_real(std::string_view text, std::string_view field) {
  double value = 0.0;
  const char* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end || text.empty())
    throw ValidationError(std::string(field), "cannot parse '" + std::string(text) + "' as a number");
  return value;
}

template <typename T>
T get_as(const Json& value, std::string_view key, const char* expected) {
  try {
    return value.get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError(std::string(key), std::string("expected ") + expected);
  }
}

Trajectory make_target(const ScenarioConfig& config) {
  const std::string& spec = config.target;
  if (spec == "lissajous") return lissajous_target();
  if (spec == "rotating-velocity") return rotating_velocity_target();
  if (spec.rfind("constant:", 0) == 0) {
    const auto values = parse_reals(std::string_view(spec).substr(9), "target");
    if (values.empty()) throw ValidationError("target", "constant target needs coordinates");
    return constant_target(Vec(values));
  }
  if (spec.rfind("file:", 0) == 0) {
    if (!config.lip)
      throw ValidationError("lip", "file targets need an explicit Lipschitz constant (--lip)");
    return read_sampled_csv(std::filesystem::path(spec.substr(5)), *config.lip);
  }
  throw ValidationError("target", "unknown target '" + spec +
                                      "'; expected lissajous, rotating-velocity, "
                                      "constant:<x1,...> or file:<path>");
}

}  // namespace

std::vector<double> parse_reals(std::string_view text, std::string_view field) {
  std::vector<double> out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = text.find(',', start);
    const std::string_view item =
        text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    out.push_back(parse_real(item, field));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

ScenarioConfig scenario_from_json(const Json& doc) {
  if (!doc.is_object()) throw ValidationError("scenario", "scenario must be a JSON object");
  ScenarioConfig c;
  for (const auto& [key, value] : doc.items()) {
    if (key == "problem") {
      c.problem = parse_problem(get_as<std::string>(value, key, "a string"));
    } else if (key == "n") {
      c.n = get_as<std::size_t>(value, key, "a positive integer");
    } else if (key == "v0") {
      c.v0 = get_as<double>(value, key, "a number");
    } else if (key == "v0_vec") {
      c.v0_vec = get_as<std::vector<double>>(value, key, "an array of numbers");
    } else if (key == "ell") {
      c.ell = get_as<double>(value, key, "a number");
    } else if (key == "lip") {
      c.lip = get_as<double>(value, key, "a number");
    } else if (key == "vmax") {
      c.vmax = get_as<double>(value, key, "a number");
    } else if (key == "eps") {
      c.eps = get_as<double>(value, key, "a number");
    } else if (key == "estimator") {
      c.estimator = parse_estimator(get_as<std::string>(value, key, "a string"));
    } else if (key == "max_iter") {
      c.max_iter = get_as<std::size_t>(value, key, "a non-negative integer");
    } else if (key == "target") {
      c.target = get_as<std::string>(value, key, "a string");
    } else if (key == "unchecked_lip") {
      c.unchecked_lip = get_as<bool>(value, key, "true or false");
    } else {
      throw ValidationError("scenario", "unknown key '" + key + "'");
    }
  }
  return c;
}

Json scenario_to_json(const ScenarioConfig& c) {
  Json j;
  j["problem"] = std::string(to_string(c.problem));
  if (c.n) j["n"] = *c.n;
  if (c.v0) j["v0"] = *c.v0;
  if (c.v0_vec) j["v0_vec"] = *c.v0_vec;
  j["ell"] = c.ell;
  if (c.lip) j["lip"] = *c.lip;
  if (c.vmax) j["vmax"] = *c.vmax;
  j["eps"] = c.eps;
  j["estimator"] = std::string(to_string(c.estimator));
  j["max_iter"] = c.max_iter;
  j["target"] = c.target;
  j["unchecked_lip"] = c.unchecked_lip;
  return j;
}

BuiltScenario build_scenario(const ScenarioConfig& config) {
  BuiltScenario built{Scenario{config.problem, ModelParams{}, make_target(config)}, {}, {}};
  const Trajectory& world = built.scenario.trajectory;
  ModelParams& p = built.scenario.params;

  p.n = config.n.value_or(world.dimension());
  if (p.n != world.dimension())
    throw ValidationError("n", "n = " + std::to_string(p.n) + " but the target has dimension " +
                                   std::to_string(world.dimension()));
  if (config.v0_vec) {
    if (config.v0) throw ValidationError("v0_vec", "give either v0 or v0_vec, not both");
    if (config.v0_vec->size() != p.n)
      throw ValidationError("v0_vec", "initial velocity must have n components");
    const Vec v0w(*config.v0_vec);
    if (!(norm(v0w) < 1.0)) throw ValidationError("v0_vec", "initial speed must be below 1");
    built.frame.emplace(v0w);
    p.v0 = built.frame->speed();
  } else {
    p.v0 = config.v0.value_or(0.0);
  }
  p.ell = config.ell;
  p.lip = config.lip.value_or(world.lip());
  p.vmax = default_vmax(config.problem);
  if (config.vmax) {
    if (*config.vmax < p.vmax)
      built.warnings.push_back("vmax " + format_number(*config.vmax) +
                               " is below the bound " + format_number(p.vmax) +
                               " for this problem; the estimators may overshoot the minimum time");
    p.vmax = *config.vmax;
  }
  validate(p);
  if (!(config.eps > 0.0)) throw ValidationError("eps", "relative tolerance must be > 0");
  if (config.estimator == EstimatorKind::Best && p.v0 != 0.0)
    throw ValidationError("estimator",
                          "the best estimator is only defined for a rocket starting at rest "
                          "(v0 = 0)");

  if (built.frame) {
    const FrameAlignment frame = *built.frame;
    built.scenario.trajectory =
        world.mapped([frame](const Vec& x) { return frame.to_body(x); });
  }
  ValidationOptions opts;
  opts.check_lipschitz = !config.unchecked_lip;
  validate(built.scenario, opts);
  if (config.unchecked_lip) {
    std::string msg = "Lipschitz check disabled";
    if (p.lip < world.lip())
      msg += ": lip " + format_number(p.lip) + " is below the target's declared " +
             format_number(world.lip());
    built.warnings.push_back(msg + "; convergence to the minimum time is not guaranteed");
  }
  return built;
}

unsigned threads_from_env() {
  const char* raw = std::getenv("VISCID_THREADS");
  if (raw == nullptr || *raw == '\0') return 0;
  const std::string_view text(raw);
  unsigned value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("VISCID_THREADS", "expected a non-negative integer, got '" +
                                                std::string(text) + "'");
  return value;
}

}  // namespace viscid::cli

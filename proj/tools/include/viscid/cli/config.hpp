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


#ifndef VISCID_CLI_CONFIG_HPP_
#define VISCID_CLI_CONFIG_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "viscid/dynamics.hpp"
#include "viscid/solver.hpp"
#include "viscid/targets.hpp"

namespace viscid::cli {

using Json = nlohmann::ordered_json;

// Scenario fields as given by the user, before defaults are resolved. Each
// field can come from a scenario file or a flag; flags win.
struct ScenarioConfig {
  Problem problem = Problem::Position;
  std::optional<std::size_t> n;
  std::optional<double> v0;
  // Initial velocity in a world frame; the scenario is solved in the frame
  // where it points along e_1 and results are rotated back.
  std::optional<std::vector<double>> v0_vec;
  double ell = 0.1;
  std::optional<double> lip;
  std::optional<double> vmax;
  double eps = 1e-3;
  EstimatorKind estimator = EstimatorKind::Simple;
  std::size_t max_iter = 1'000'000;
  // lissajous | rotating-velocity | constant:<x1,...> | file:<path>
  std::string target = "lissajous";
  bool unchecked_lip = false;
};

struct BuiltScenario {
  Scenario scenario;  // body frame
  std::optional<FrameAlignment> frame;
  std::vector<std::string> warnings;

  Vec to_world(const Vec& body) const { return frame ? frame->to_world(body) : body; }
  Vec to_body(const Vec& world) const { return frame ? frame->to_body(world) : world; }
};

ScenarioConfig scenario_from_json(const Json& doc);
Json scenario_to_json(const ScenarioConfig& config);

// Resolves defaults, loads the target and validates everything; throws
// ValidationError naming the offending field, IoError for unreadable files.
BuiltScenario build_scenario(const ScenarioConfig& config);

// Comma-separated reals, e.g. "0.5,1,1.5".
std::vector<double> parse_reals(std::string_view text, std::string_view field);

// Worker count for boundary sampling from VISCID_THREADS (0 = hardware).
unsigned threads_from_env();

}  // namespace viscid::cli

#endif  // VISCID_CLI_CONFIG_HPP_

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


#ifndef VISCID_CLI_COMMANDS_HPP_
#define VISCID_CLI_COMMANDS_HPP_

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "viscid/cli/config.hpp"
#include "viscid/cli/output.hpp"

namespace viscid::cli {

struct ReachOptions {
  std::vector<double> times;
  std::vector<std::string> subspaces;
  std::size_t samples = 256;
  unsigned threads = 0;
};

struct InterceptOptions {
  double dt = 0.05;  // path sampling step
  bool polish = false;
};

struct VerifyOptions {
  std::optional<double> ell;
  std::optional<double> eps;
};

// Each command resolves the scenario itself and appends any warnings to
// `warnings`; the caller decides where they go.
Report reach_boundary(const ScenarioConfig& config, const ReachOptions& options,
                      std::vector<std::string>& warnings);
Report intercept(const ScenarioConfig& config, const InterceptOptions& options,
                 std::vector<std::string>& warnings);
Report compare_estimators(const ScenarioConfig& config, std::vector<std::string>& warnings);
// `solution` is the JSON document written by intercept.
Report verify(const Json& solution, const VerifyOptions& options,
              std::vector<std::string>& warnings);

}  // namespace viscid::cli

#endif  // VISCID_CLI_COMMANDS_HPP_

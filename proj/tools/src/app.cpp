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


#include "viscid/cli/app.hpp"

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "viscid/cli/commands.hpp"
#include "viscid/errors.hpp"

namespace viscid::cli {
namespace {

// Raw flag values; only the ones given on the command line override the
// scenario file.
struct ScenarioFlags {
  std::string scenario_file;
  std::string problem;
  std::size_t n = 0;
  double v0 = 0.0;
  std::string v0_vec;
  double ell = 0.0;
  double lip = 0.0;
  double vmax = 0.0;
  double eps = 0.0;
  std::string estimator;
  std::size_t max_iter = 0;
  std::string target;
  bool unchecked_lip = false;
  std::map<std::string, CLI::Option*> opts;

  bool given(const std::string& name) const { return opts.at(name)->count() > 0; }
};

struct OutputFlags {
  std::string out;
  std::string format = "json";
};

Json read_json_file(const std::string& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ValidationError(field, "'" + path + "' is not valid JSON: " + e.what());
  }
}

void add_scenario_flags(CLI::App* cmd, ScenarioFlags& f) {
  auto& o = f.opts;
  o["scenario"] = cmd->add_option("--scenario", f.scenario_file,
                                  "JSON scenario file; flags override its fields");
  o["problem"] = cmd->add_option("--problem", f.problem, "position | velocity (default position)");
  o["n"] = cmd->add_option("--n", f.n, "Dimension (default: the target's)");
  o["v0"] = cmd->add_option("--v0", f.v0, "Initial speed along e1, 0 <= v0 < 1 (default 0)");
  o["v0_vec"] = cmd->add_option("--v0-vec", f.v0_vec,
                                "World-frame initial velocity, e.g. 0.3,0.2; results are "
                                "reported in the same frame");
  o["ell"] = cmd->add_option("--ell", f.ell, "Capture radius (default 0.1)");
  o["lip"] = cmd->add_option("--lip", f.lip,
                             "Lipschitz constant of the target (default: the target's)");
  o["vmax"] = cmd->add_option("--vmax", f.vmax,
                              "Speed bound in the estimators (default 1 position, 2 velocity)");
  o["unchecked_lip"] = cmd->add_flag("--unchecked-lip", f.unchecked_lip,
                                     "Trust --lip without sampling the target");
  o["eps"] = cmd->add_option("--eps", f.eps, "Relative stopping tolerance (default 1e-3)");
  o["estimator"] = cmd->add_option("--estimator", f.estimator, "simple | best (default simple)");
  o["max_iter"] = cmd->add_option("--max-iter", f.max_iter, "Iteration cap (default 1000000)");
  o["target"] = cmd->add_option("--target", f.target,
                                "lissajous | rotating-velocity | constant:<x1,...> | "
                                "file:<path> (default lissajous)");
}

void add_output_flags(CLI::App* cmd, OutputFlags& f) {
  cmd->add_option("--out", f.out,
                  "Output base path; writes <base>.json or <base>.<table>.csv (default stdout)");
  cmd->add_option("--format", f.format, "json | csv (default json)");
}

ScenarioConfig resolve(const ScenarioFlags& f) {
  ScenarioConfig c;
  if (f.given("scenario")) c = scenario_from_json(read_json_file(f.scenario_file, "scenario"));
  if (f.given("problem")) c.problem = parse_problem(f.problem);
  if (f.given("n")) c.n = f.n;
  if (f.given("v0")) c.v0 = f.v0;
  if (f.given("v0_vec")) {
    c.v0_vec = parse_reals(f.v0_vec, "v0_vec");
    if (!f.given("v0")) c.v0.reset();
  }
  if (f.given("v0") && !f.given("v0_vec")) c.v0_vec.reset();
  if (f.given("ell")) c.ell = f.ell;
  if (f.given("lip")) c.lip = f.lip;
  if (f.given("vmax")) c.vmax = f.vmax;
  if (f.given("unchecked_lip")) c.unchecked_lip = f.unchecked_lip;
  if (f.given("eps")) c.eps = f.eps;
  if (f.given("estimator")) c.estimator = parse_estimator(f.estimator);
  if (f.given("max_iter")) c.max_iter = f.max_iter;
  if (f.given("target")) c.target = f.target;
  return c;
}

void finish(const Report& report, const OutputFlags& f, std::ostream& out, std::ostream& err) {
  const Format format = parse_format(f.format);
  std::optional<std::filesystem::path> path;
  if (!f.out.empty()) path = f.out;
  for (const auto& written : emit(report, format, path, out))
    err << "wrote " << written.string() << '\n';
}

std::vector<std::string> split_labels(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) throw ValidationError("subspaces", "empty subspace label");
    out.push_back(item);
  }
  return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Reachable sets and minimum-time interception for the isotropic rocket"};
  app.name(args.empty() ? "viscid" : args.front());
  app.require_subcommand(1);

  ScenarioFlags reach_sf, icpt_sf, cmp_sf;
  OutputFlags reach_of, icpt_of, cmp_of, ver_of;

  auto* reach = app.add_subcommand("reach-boundary", "Sample boundaries of reachable-set projections");
  add_scenario_flags(reach, reach_sf);
  add_output_flags(reach, reach_of);
  std::string times = "0.5,1,1.5,2";
  std::string subspaces = "r1r2,r1v1,v1v2,r1v2";
  std::size_t samples = 256;
  reach->add_option("--times", times, "Comma-separated times (default 0.5,1,1.5,2)");
  reach->add_option("--subspaces", subspaces,
                    "Comma-separated coordinate labels (default r1r2,r1v1,v1v2,r1v2)");
  reach->add_option("--samples", samples, "Boundary points per time and subspace (default 256)");

  auto* icpt = app.add_subcommand("intercept", "Solve a minimum-time interception");
  add_scenario_flags(icpt, icpt_sf);
  add_output_flags(icpt, icpt_of);
  InterceptOptions icpt_opts;
  icpt->add_option("--dt", icpt_opts.dt, "Sampling step of the reported path (default 0.05)");
  icpt->add_flag("--polish", icpt_opts.polish, "Refine the capture time by Newton iteration");

  auto* cmp = app.add_subcommand("compare-estimators",
                                 "Run the simple and best estimators side by side (v0 = 0)");
  add_scenario_flags(cmp, cmp_sf);
  add_output_flags(cmp, cmp_of);

  auto* ver = app.add_subcommand("verify", "Re-simulate a saved intercept result");
  add_output_flags(ver, ver_of);
  std::string solution_file;
  VerifyOptions ver_opts;
  double ver_ell = 0.0;
  double ver_eps = 0.0;
  ver->add_option("--solution", solution_file, "JSON written by intercept")->required();
  auto* ver_ell_opt = ver->add_option("--ell", ver_ell, "Override the capture radius");
  auto* ver_eps_opt = ver->add_option("--eps", ver_eps, "Override the relative tolerance");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? 0 : 2;
  }

  std::vector<std::string> warnings;
  const auto flush_warnings = [&] {
    for (const auto& w : warnings) err << "warning: " << w << '\n';
    warnings.clear();
  };
  try {
    Report report;
    const OutputFlags* of = nullptr;
    if (*reach) {
      ReachOptions opts;
      opts.times = parse_reals(times, "times");
      opts.subspaces = split_labels(subspaces);
      opts.samples = samples;
      opts.threads = threads_from_env();
      report = reach_boundary(resolve(reach_sf), opts, warnings);
      of = &reach_of;
    } else if (*icpt) {
      report = intercept(resolve(icpt_sf), icpt_opts, warnings);
      of = &icpt_of;
    } else if (*cmp) {
      report = compare_estimators(resolve(cmp_sf), warnings);
      of = &cmp_of;
    } else {
      if (ver_ell_opt->count()) ver_opts.ell = ver_ell;
      if (ver_eps_opt->count()) ver_opts.eps = ver_eps;
      report = verify(read_json_file(solution_file, "solution"), ver_opts, warnings);
      of = &ver_of;
    }
    flush_warnings();
    finish(report, *of, out, err);
    return 0;
  } catch (const ValidationError& e) {
    flush_warnings();
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    flush_warnings();
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    flush_warnings();
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace viscid::cli

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


#include "viscid/cli/commands.hpp"

#include <algorithm>
#include <cmath>

#include "viscid/errors.hpp"
#include "viscid/extremal.hpp"
#include "viscid/solver.hpp"

namespace viscid::cli {
namespace {

Json to_json(const Vec& x) { return x.empty() ? Json(nullptr) : Json(x.data()); }

void append(std::vector<double>& row, const Vec& x) { row.insert(row.end(), x.begin(), x.end()); }

void axis_columns(std::vector<std::string>& header, const char* prefix, std::size_t n) {
  for (std::size_t i = 1; i <= n; ++i) header.push_back(prefix + std::to_string(i));
}

BuiltScenario build_with_warnings(const ScenarioConfig& config,
                                  std::vector<std::string>& warnings) {
  BuiltScenario built = build_scenario(config);
  warnings.insert(warnings.end(), built.warnings.begin(), built.warnings.end());
  return built;
}

Json trace_json(const IterationTrace& trace) {
  Json steps = Json::array();
  for (const IterationStep& s : trace.steps)
    steps.push_back({{"i", s.index}, {"t", s.t}, {"dist", s.dist}, {"step", s.step}});
  return steps;
}

Table trace_table(const IterationTrace& trace) {
  Table table{"trace", {"i", "t", "dist", "step"}, {}};
  for (const IterationStep& s : trace.steps)
    table.rows.push_back({static_cast<double>(s.index), s.t, s.dist, s.step});
  return table;
}

// Initial state stacked as (r, v) and projected onto `coords`.
Vec initial_projection(const ModelParams& params, const std::vector<std::size_t>& coords) {
  const State s0 = params.initial_state();
  Vec out(coords.size());
  for (std::size_t j = 0; j < coords.size(); ++j) {
    const std::size_t c = coords[j];
    out[j] = c < params.n ? s0.r[c] : s0.v[c - params.n];
  }
  return out;
}

}  // namespace

Report reach_boundary(const ScenarioConfig& config, const ReachOptions& options,
                      std::vector<std::string>& warnings) {
  if (config.v0_vec)
    throw ValidationError("v0_vec",
                          "reach-boundary reports body-frame coordinates; give the speed with --v0");
  if (options.times.empty()) throw ValidationError("times", "at least one time is required");
  for (double t : options.times) {
    if (!(t >= 0.0) || !std::isfinite(t))
      throw ValidationError("times", "times must be finite and >= 0");
  }
  if (options.subspaces.empty())
    throw ValidationError("subspaces", "at least one subspace is required");
  if (options.samples < 3) throw ValidationError("samples", "need at least 3 samples");

  const BuiltScenario built = build_with_warnings(config, warnings);
  const ModelParams& params = built.scenario.params;

  Report report;
  report.doc["schema"] = "viscid/reach-boundary/1";
  report.doc["scenario"] = scenario_to_json(config);
  report.doc["samples"] = options.samples;
  report.doc["times"] = options.times;
  Json records = Json::array();

  for (const std::string& label : options.subspaces) {
    const std::vector<std::size_t> coords = parse_subspace(label, params.n);
    const std::string canonical = subspace_label(coords, params.n);
    Table table{"boundary-" + canonical, {"time", "index"}, {}};
    for (std::size_t c : coords) {
      const std::size_t one[] = {c};
      table.header.push_back(subspace_label(one, params.n));
    }
    for (double t : options.times) {
      const std::vector<Vec> points =
          t == 0.0 ? std::vector<Vec>{initial_projection(params, coords)}
                   : projection_boundary(t, params, coords, options.samples, options.threads);
      for (std::size_t i = 0; i < points.size(); ++i) {
        records.push_back(
            {{"time", t}, {"subspace", canonical}, {"index", i}, {"point", points[i].data()}});
        std::vector<double> row{t, static_cast<double>(i)};
        append(row, points[i]);
        table.rows.push_back(std::move(row));
      }
    }
    report.tables.push_back(std::move(table));
  }
  report.doc["records"] = std::move(records);
  return report;
}

Report intercept(const ScenarioConfig& config, const InterceptOptions& options,
                 std::vector<std::string>& warnings) {
  if (!(options.dt > 0.0) || !std::isfinite(options.dt))
    throw ValidationError("dt", "path sampling step must be > 0");
  const BuiltScenario built = build_with_warnings(config, warnings);
  const Scenario& scenario = built.scenario;
  const std::size_t n = scenario.params.n;

  SolveOptions solve;
  solve.eps = config.eps;
  solve.max_iter = config.max_iter;
  const InterceptSolution sol = solve_intercept(scenario, config.estimator, solve);
  const bool converged = sol.trace.status == IterationStatus::Converged;

  Report report;
  Json& doc = report.doc;
  doc["schema"] = "viscid/intercept/1";
  doc["scenario"] = scenario_to_json(config);
  doc["status"] = std::string(to_string(sol.trace.status));
  doc["iterations"] = sol.trace.iterations;
  doc["t_star"] = sol.t_star;

  std::optional<double> polished;
  if (options.polish && converged) {
    try {
      polished = newton_polish(sol.t_star, scenario);
    } catch (const NoBracketError& e) {
      warnings.push_back(std::string("polish skipped: ") + e.what());
    }
  }
  doc["t_polished"] = polished ? Json(*polished) : Json(nullptr);
  doc["control_dir"] = converged ? to_json(built.to_world(sol.control_dir)) : Json(nullptr);
  doc["degenerate_control"] = sol.degenerate_control;
  doc["trace"] = trace_json(sol.trace);
  report.tables.push_back(trace_table(sol.trace));

  Table summary{"solution", {"converged", "iterations", "t_star", "miss", "threshold", "pass"}, {}};
  axis_columns(summary.header, "u", n);
  std::vector<double> srow{converged ? 1.0 : 0.0, static_cast<double>(sol.trace.iterations),
                           sol.t_star};

  Table path{"path", {"t"}, {}};
  axis_columns(path.header, "r", n);
  axis_columns(path.header, "v", n);
  axis_columns(path.header, "h", n);
  Json path_json = Json::array();

  if (converged) {
    const VerifyReport check = verify_solution(sol, scenario, config.eps);
    doc["verification"] = {{"pass", check.pass},
                           {"miss", check.miss},
                           {"threshold", check.threshold},
                           {"r", built.to_world(check.terminal.r).data()},
                           {"v", built.to_world(check.terminal.v).data()},
                           {"target", built.to_world(check.target).data()}};
    srow.insert(srow.end(), {check.miss, check.threshold, check.pass ? 1.0 : 0.0});
    append(srow, built.to_world(sol.control_dir));

    for (const PathSample& s : simulate_path(sol, scenario, options.dt)) {
      const Vec r = built.to_world(s.state.r);
      const Vec v = built.to_world(s.state.v);
      const Vec h = built.to_world(s.target);
      path_json.push_back({{"t", s.t}, {"r", r.data()}, {"v", v.data()}, {"h", h.data()}});
      std::vector<double> row{s.t};
      append(row, r);
      append(row, v);
      append(row, h);
      path.rows.push_back(std::move(row));
    }
  } else {
    doc["verification"] = nullptr;
    srow.insert(srow.end(), 3 + n, std::nan(""));
  }
  doc["path"] = std::move(path_json);
  summary.rows.push_back(std::move(srow));
  report.tables.push_back(std::move(summary));
  report.tables.push_back(std::move(path));
  return report;
}

Report compare_estimators(const ScenarioConfig& config, std::vector<std::string>& warnings) {
  if (config.v0_vec || config.v0.value_or(0.0) != 0.0)
    throw ValidationError("v0",
                          "compare-estimators needs v0 = 0: the best estimators are derived "
                          "for a rocket starting at rest");
  ScenarioConfig simple_cfg = config;
  simple_cfg.estimator = EstimatorKind::Simple;
  const BuiltScenario built = build_with_warnings(simple_cfg, warnings);

  SolveOptions solve;
  solve.eps = config.eps;
  solve.max_iter = config.max_iter;
  const InterceptSolution simple = solve_intercept(built.scenario, EstimatorKind::Simple, solve);
  const InterceptSolution best = solve_intercept(built.scenario, EstimatorKind::Best, solve);

  Report report;
  Json& doc = report.doc;
  doc["schema"] = "viscid/compare/1";
  ScenarioConfig recorded = config;
  recorded.estimator = EstimatorKind::Simple;
  doc["scenario"] = scenario_to_json(recorded);
  const auto summary_json = [](const InterceptSolution& s) {
    return Json{{"status", std::string(to_string(s.trace.status))},
                {"iterations", s.trace.iterations},
                {"t_star", s.t_star}};
  };
  doc["simple"] = summary_json(simple);
  doc["best"] = summary_json(best);

  // Rows run to the longer trace; the side that has already stopped is left
  // empty (null in JSON, nan in CSV) together with the deltas.
  const auto& a = simple.trace.steps;
  const auto& b = best.trace.steps;
  const std::size_t rows = std::max(a.size(), b.size());
  const double none = std::nan("");
  const auto cell = [](double x) { return std::isnan(x) ? Json(nullptr) : Json(x); };
  Table table{"comparison",
              {"i", "t_simple", "t_best", "step_simple", "step_best", "t_delta", "step_delta"},
              {}};
  Json rows_json = Json::array();
  for (std::size_t i = 0; i < rows; ++i) {
    const double ts = i < a.size() ? a[i].t : none;
    const double tb = i < b.size() ? b[i].t : none;
    const double ss = i < a.size() ? a[i].step : none;
    const double sb = i < b.size() ? b[i].step : none;
    table.rows.push_back({static_cast<double>(i), ts, tb, ss, sb, tb - ts, sb - ss});
    rows_json.push_back({{"i", i},
                         {"t_simple", cell(ts)},
                         {"t_best", cell(tb)},
                         {"step_simple", cell(ss)},
                         {"step_best", cell(sb)},
                         {"t_delta", cell(tb - ts)},
                         {"step_delta", cell(sb - ss)}});
  }
  doc["rows"] = std::move(rows_json);
  report.tables.push_back(std::move(table));
  report.tables.push_back(Table{
      "summary",
      {"iterations_simple", "iterations_best", "t_star_simple", "t_star_best"},
      {{static_cast<double>(simple.trace.iterations), static_cast<double>(best.trace.iterations),
        simple.t_star, best.t_star}}});
  return report;
}

Report verify(const Json& solution, const VerifyOptions& options,
              std::vector<std::string>& warnings) {
  if (!solution.is_object() || solution.value("schema", "") != "viscid/intercept/1")
    throw ValidationError("solution", "not an intercept result (schema viscid/intercept/1)");
  if (!solution.contains("scenario"))
    throw ValidationError("solution", "missing scenario");
  ScenarioConfig config = scenario_from_json(solution.at("scenario"));
  if (options.ell) config.ell = *options.ell;
  if (options.eps) config.eps = *options.eps;
  const BuiltScenario built = build_with_warnings(config, warnings);

  const Json& t_star = solution.value("t_star", Json(nullptr));
  const Json& dir = solution.value("control_dir", Json(nullptr));
  if (!t_star.is_number()) throw ValidationError("solution", "t_star must be a number");
  if (!dir.is_array()) throw ValidationError("solution", "no converged control direction");
  std::vector<double> u;
  try {
    u = dir.get<std::vector<double>>();
  } catch (const nlohmann::json::exception&) {
    throw ValidationError("solution", "control_dir must be an array of numbers");
  }
  if (u.size() != built.scenario.params.n)
    throw ValidationError("solution", "control_dir must have n components");

  InterceptSolution sol;
  sol.t_star = t_star.get<double>();
  if (!(sol.t_star >= 0.0) || !std::isfinite(sol.t_star))
    throw ValidationError("solution", "t_star must be finite and >= 0");
  sol.control_dir = built.to_body(Vec(std::move(u)));
  const VerifyReport check = verify_solution(sol, built.scenario, config.eps);

  Report report;
  report.doc["schema"] = "viscid/verify/1";
  report.doc["scenario"] = scenario_to_json(config);
  report.doc["t_star"] = sol.t_star;
  report.doc["pass"] = check.pass;
  report.doc["miss"] = check.miss;
  report.doc["threshold"] = check.threshold;
  report.doc["r"] = built.to_world(check.terminal.r).data();
  report.doc["v"] = built.to_world(check.terminal.v).data();
  report.doc["target"] = built.to_world(check.target).data();
  report.tables.push_back(Table{"verify",
                                {"pass", "miss", "threshold", "t_star"},
                                {{check.pass ? 1.0 : 0.0, check.miss, check.threshold,
                                  sol.t_star}}});
  return report;
}

}  // namespace viscid::cli

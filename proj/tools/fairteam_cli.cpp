// fairteam: fairness-aware team assembly from the command line.
//
//   fairteam synth --pool pool.csv --projects projects.csv --pool-size 300 \
//       --skills 40 --num-projects 50 --attr-proportion 0.5 --seed 7
//   fairteam assemble --pool pool.csv --projects projects.csv --project p01 \
//       --method multi --config top-sum --team-size 4 --num-teams 500
//   fairteam bench --pool pool.csv --projects projects.csv --format table \
//       --team-size 4 --num-teams 500 --jobs 4 --out report.txt
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 no feasible project.

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fairteam/assembly.hpp"
#include "fairteam/bench.hpp"
#include "fairteam/data_io.hpp"
#include "fairteam/errors.hpp"
#include "fairteam/objectives.hpp"

namespace {

using namespace fairteam;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitInfeasible = 3;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string pool;
  std::string projects;
  std::optional<double> attr_proportion;
  std::uint64_t seed = 0;
  std::size_t team_size = 4;
  std::size_t num_teams = 500;
};

void AddCommon(CLI::App* cmd, CommonOptions& o) {
  cmd->add_option("--pool", o.pool, "Candidate pool file (.csv or .json)")
      ->required();
  cmd->add_option("--projects", o.projects, "Project file (.csv or .json)")
      ->required();
  cmd->add_option("--attr-proportion", o.attr_proportion,
                  "Reassign attributes: share of class 0, in (0,1)");
  cmd->add_option("--seed", o.seed, "Random seed");
  cmd->add_option("--team-size", o.team_size, "Team size M (>= 3)");
  cmd->add_option("--num-teams", o.num_teams, "Random teams N (>= 1)");
}

Method ParseMethodOrThrow(const std::string& token) {
  auto m = ParseMethod(token);
  if (!m) throw UsageError("unknown method '" + token + "'");
  return *m;
}

SelectionMode ParseModeOrThrow(const std::string& token) {
  auto m = ParseSelectionMode(token);
  if (!m) throw UsageError("unknown config '" + token + "'");
  return *m;
}

void WriteText(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError(path, 0, "cannot open file for writing");
  out << text;
}

int RunAssemble(const CommonOptions& o, const std::string& project_id,
                const std::string& method_token, const std::string& config_token) {
  const Method method = ParseMethodOrThrow(method_token);
  const SelectionMode mode = ParseModeOrThrow(config_token);
  const std::vector<Candidate> pool = load_pool(o.pool, o.attr_proportion, o.seed);
  const std::vector<Project> projects = load_projects(o.projects);

  const Project* project = &projects.front();
  if (!project_id.empty()) {
    project = nullptr;
    for (const Project& p : projects) {
      if (p.id() == project_id) project = &p;
    }
    if (project == nullptr) throw UsageError("no project with id '" + project_id + "'");
  }

  AssemblyOutcome outcome;
  if (method == Method::kIncremental) {
    outcome = assemble_incremental(pool, *project);
  } else if (method == Method::kFairAllocation) {
    outcome = assemble_fair_allocation(pool, *project);
  } else {
    AssemblyParams params{o.team_size, o.num_teams, o.seed, mode};
    outcome = assemble_multi_objective(pool, *project, params);
  }

  const Diagnostics& d = outcome.diagnostics;
  fmt::print("project: {}\n", project->id());
  fmt::print("method: {}", DisplayName(method));
  if (method == Method::kMultiObjective) fmt::print(" ({})", DisplayName(mode));
  fmt::print("\n");
  fmt::print("candidates: pool {} / matching {} / pareto {} ({:.1f}% reduction)\n",
             d.pool_size, d.filtered_candidates, d.pareto_candidates,
             100.0 * d.CandidateReduction());
  if (method == Method::kMultiObjective) {
    fmt::print("teams: sampled {} / covering {} / pareto {} ({:.1f}% reduction){}\n",
               d.sampled_teams, d.covering_teams, d.pareto_teams,
               100.0 * d.TeamReduction(),
               d.sampling_fallback ? " [fallback: fewer candidates than M]" : "");
  }
  if (!outcome.formed()) {
    fmt::print("no team formed: {}\n", ToString(outcome.failure));
    return kExitInfeasible;
  }
  fmt::print("team:\n");
  for (const Candidate* c : outcome.team->members()) {
    fmt::print("  {} class={} load={:.6f}\n", c->id(), ToString(c->attribute()),
               member_load(*c, *project));
  }
  const ObjectiveVector& v = *outcome.objectives;
  for (Objective obj : kAllObjectives) {
    fmt::print("{}: {:.6f}\n", ToString(obj), v[obj]);
  }
  return kExitOk;
}

int RunBench(const CommonOptions& o, const std::vector<std::string>& methods,
             const std::vector<std::string>& modes, const std::string& format_token,
             const std::string& out_path, const std::string& log_path,
             std::size_t jobs) {
  const auto format = ParseReportFormat(format_token);
  if (!format) throw UsageError("unknown format '" + format_token + "'");

  std::vector<MethodConfig> configs;
  std::vector<Method> selected_methods;
  for (const std::string& t : methods) selected_methods.push_back(ParseMethodOrThrow(t));
  std::vector<SelectionMode> selected_modes;
  for (const std::string& t : modes) selected_modes.push_back(ParseModeOrThrow(t));
  if (selected_modes.empty()) {
    selected_modes.assign(kAllSelectionModes.begin(), kAllSelectionModes.end());
  }
  for (const MethodConfig& c : AllMethodConfigs()) {
    const bool method_ok =
        selected_methods.empty() ||
        std::find(selected_methods.begin(), selected_methods.end(), c.method) !=
            selected_methods.end();
    const bool mode_ok =
        c.method != Method::kMultiObjective ||
        std::find(selected_modes.begin(), selected_modes.end(), c.selection) !=
            selected_modes.end();
    if (method_ok && mode_ok) configs.push_back(c);
  }

  const std::vector<Candidate> pool = load_pool(o.pool, o.attr_proportion, o.seed);
  const std::vector<Project> projects = load_projects(o.projects);
  BenchParams params{o.team_size, o.num_teams, o.seed, jobs};
  const RunReport report = run_benchmark(pool, projects, configs, params);

  const std::string text = emit_report(report, *format);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    WriteText(out_path, text);
  }
  std::string log = log_path;
  if (log.empty()) log = out_path.empty() ? "outcomes.csv" : out_path + ".outcomes.csv";
  WriteText(log, emit_log(report));

  const bool any_formed = std::any_of(report.rows.begin(), report.rows.end(),
                                      [](const ReportRow& r) { return r.formed > 0; });
  return any_formed ? kExitOk : kExitInfeasible;
}

int RunSynth(const std::string& pool_path, const std::string& projects_path,
             const SynthesisSpec& pool_spec, const ProjectSynthesisSpec& project_spec) {
  if (pool_path.empty() && projects_path.empty()) {
    throw UsageError("synth needs --pool and/or --projects output paths");
  }
  if (!pool_path.empty()) save_pool(pool_path, synthesize_pool(pool_spec));
  if (!projects_path.empty()) {
    save_projects(projects_path, synthesize_projects(project_spec));
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fairness-aware multi-objective team assembly"};
  app.require_subcommand(1);

  CommonOptions assemble_opts;
  std::string project_id;
  std::string method = "multi";
  std::string config = "top-sum";
  auto* assemble = app.add_subcommand("assemble", "Assemble a team for one project");
  AddCommon(assemble, assemble_opts);
  assemble->add_option("--project", project_id, "Project id (default: first)");
  assemble->add_option("--method", method, "multi | incremental | fair-alloc");
  assemble->add_option("--config", config,
                       "random | top-cost | top-workload | top-expertise | "
                       "top-representation | top-costdiff | top-sum");

  CommonOptions bench_opts;
  std::vector<std::string> bench_methods;
  std::vector<std::string> bench_modes;
  std::string format = "table";
  std::string out_path;
  std::string log_path;
  std::size_t jobs = 1;
  auto* bench = app.add_subcommand("bench", "Run every method over a project corpus");
  AddCommon(bench, bench_opts);
  bench->add_option("--method", bench_methods, "Methods to run (default: all)");
  bench->add_option("--config", bench_modes,
                    "Multi-objective configs to run (default: all)");
  bench->add_option("--format", format, "csv | table");
  bench->add_option("--out", out_path, "Report path (default: stdout)");
  bench->add_option("--log", log_path,
                    "Outcome log path (default: <out>.outcomes.csv or outcomes.csv)");
  bench->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);

  std::string synth_pool;
  std::string synth_projects;
  SynthesisSpec pool_spec;
  ProjectSynthesisSpec project_spec;
  std::uint64_t synth_seed = 42;
  std::size_t synth_skills = 175;
  auto* synth = app.add_subcommand("synth", "Generate a synthetic pool and projects");
  synth->add_option("--pool", synth_pool, "Pool output path");
  synth->add_option("--projects", synth_projects, "Project output path");
  synth->add_option("--pool-size", pool_spec.pool_size, "Number of candidates");
  synth->add_option("--skills", synth_skills, "Skill universe size");
  synth->add_option("--min-skills", pool_spec.min_skills, "Min skills per candidate");
  synth->add_option("--max-skills", pool_spec.max_skills, "Max skills per candidate");
  synth->add_option("--cost-lo", pool_spec.cost_lo, "Lowest declared cost");
  synth->add_option("--cost-hi", pool_spec.cost_hi, "Highest declared cost");
  synth->add_option("--attr-proportion", pool_spec.proportion, "Share of class 0");
  synth->add_option("--num-projects", project_spec.count, "Number of projects");
  synth->add_option("--min-req", project_spec.min_requirements,
                    "Min requirements per project");
  synth->add_option("--max-req", project_spec.max_requirements,
                    "Max requirements per project");
  synth->add_option("--seed", synth_seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*assemble) return RunAssemble(assemble_opts, project_id, method, config);
    if (*bench) {
      return RunBench(bench_opts, bench_methods, bench_modes, format, out_path,
                      log_path, jobs);
    }
    pool_spec.skill_universe = synth_skills;
    project_spec.skill_universe = synth_skills;
    pool_spec.seed = synth_seed;
    project_spec.seed = synth_seed;
    return RunSynth(synth_pool, synth_projects, pool_spec, project_spec);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InvalidInput& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
}

#include "fairteam/bench.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include <fmt/format.h>

#include "fairteam/errors.hpp"

namespace fairteam {
namespace {

constexpr std::array<std::string_view, kNumObjectives> kColumnTitles = {
    "Cost", "Workload", "Expertise", "Representation", "Cost Difference"};

std::vector<OutcomeRecord> RunProject(std::span<const Candidate> pool,
                                      const Project& project,
                                      std::span<const MethodConfig> configs,
                                      const BenchParams& params) {
  std::vector<OutcomeRecord> records;
  records.reserve(configs.size());
  for (const MethodConfig& config : configs) {
    AssemblyOutcome outcome;
    switch (config.method) {
      case Method::kIncremental:
        outcome = assemble_incremental(pool, project);
        break;
      case Method::kFairAllocation:
        outcome = assemble_fair_allocation(pool, project);
        break;
      case Method::kMultiObjective: {
        AssemblyParams ap;
        ap.team_size = params.team_size;
        ap.num_random_teams = params.num_random_teams;
        ap.seed = params.seed;
        ap.selection = config.selection;
        outcome = assemble_multi_objective(pool, project, ap);
        break;
      }
    }
    OutcomeRecord r;
    r.project_id = project.id();
    r.config = config;
    r.formed = outcome.formed();
    r.failure = outcome.failure;
    r.diagnostics = outcome.diagnostics;
    if (outcome.formed()) {
      r.objectives = *outcome.objectives;
      r.members = outcome.team->MemberIds();
    }
    records.push_back(std::move(r));
  }
  return records;
}

std::string CsvCell(const ReportRow& row, std::size_t k) {
  return row.formed == 0 ? "n/a" : FormatCell(row.objectives[k]);
}

// Reductions only exist for the two-round method.
std::string ReductionCell(const ReportRow& row, double value) {
  if (row.config.method != Method::kMultiObjective || row.formed == 0) return "-";
  return fmt::format("{:.3f}", value);
}

std::string EmitCsv(const RunReport& report) {
  std::string out =
      "method,config,cost,workload,expertise,representation,cost_difference,"
      "teams,projects,candidate_reduction,team_reduction\n";
  for (const ReportRow& row : report.rows) {
    const bool multi = row.config.method == Method::kMultiObjective;
    out += fmt::format("{},{}", DisplayName(row.config.method),
                       multi ? DisplayName(row.config.selection) : "");
    for (std::size_t k = 0; k < kNumObjectives; ++k) out += "," + CsvCell(row, k);
    out += fmt::format(",{},{},{},{}\n", row.formed, report.project_count,
                       ReductionCell(row, row.mean_candidate_reduction),
                       ReductionCell(row, row.mean_team_reduction));
  }
  return out;
}

std::string EmitTable(const RunReport& report) {
  // Best (lowest) mean per objective among rows that formed a team.
  std::array<std::optional<double>, kNumObjectives> best{};
  for (const ReportRow& row : report.rows) {
    if (row.formed == 0) continue;
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      const double m = row.objectives[k].mean;
      if (!best[k] || m < *best[k]) best[k] = m;
    }
  }

  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header = {"Algorithm"};
  for (std::string_view t : kColumnTitles) header.emplace_back(t);
  header.insert(header.end(), {"Teams", "Cand. red.", "Team red."});
  cells.push_back(header);
  for (const ReportRow& row : report.rows) {
    std::vector<std::string> line = {row.config.Label()};
    for (std::size_t k = 0; k < kNumObjectives; ++k) {
      std::string cell = CsvCell(row, k);
      if (row.formed > 0 && row.objectives[k].mean == *best[k]) cell += " *";
      line.push_back(std::move(cell));
    }
    line.push_back(fmt::format("{}/{}", row.formed, report.project_count));
    line.push_back(ReductionCell(row, row.mean_candidate_reduction));
    line.push_back(ReductionCell(row, row.mean_team_reduction));
    cells.push_back(std::move(line));
  }

  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      width[c] = std::max(width[c], line[c].size());
    }
  }
  std::string out;
  for (std::size_t r = 0; r < cells.size(); ++r) {
    std::string text;
    for (std::size_t c = 0; c < cells[r].size(); ++c) {
      if (c > 0) text += " | ";
      text += c == 0 ? fmt::format("{:<{}}", cells[r][c], width[c])
                     : fmt::format("{:>{}}", cells[r][c], width[c]);
    }
    out += text + "\n";
    if (r == 0) {
      std::string rule;
      for (std::size_t c = 0; c < width.size(); ++c) {
        if (c > 0) rule += "-+-";
        rule += std::string(width[c], '-');
      }
      out += rule + "\n";
    }
  }
  out += "* best mean in column\n";
  return out;
}

}  // namespace

std::string MethodConfig::Label() const {
  if (method != Method::kMultiObjective) return std::string(DisplayName(method));
  return fmt::format("Multi-Obj. {}", DisplayName(selection));
}

std::vector<MethodConfig> AllMethodConfigs() {
  std::vector<MethodConfig> configs = {{Method::kIncremental},
                                       {Method::kFairAllocation}};
  for (SelectionMode mode : kAllSelectionModes) {
    configs.push_back({Method::kMultiObjective, mode});
  }
  return configs;
}

std::vector<ReportRow> aggregate(std::span<const OutcomeRecord> log,
                                 std::span<const MethodConfig> configs) {
  std::vector<ReportRow> rows;
  for (const MethodConfig& config : configs) {
    ReportRow row;
    row.config = config;
    std::array<double, kNumObjectives> sum{};
    double cand_red = 0.0;
    double team_red = 0.0;
    for (const OutcomeRecord& r : log) {
      if (!r.formed || !(r.config == config)) continue;
      ++row.formed;
      const auto v = r.objectives.ToArray();
      for (std::size_t k = 0; k < kNumObjectives; ++k) sum[k] += v[k];
      cand_red += r.diagnostics.CandidateReduction();
      team_red += r.diagnostics.TeamReduction();
    }
    if (row.formed > 0) {
      const double n = static_cast<double>(row.formed);
      std::array<double, kNumObjectives> sq{};
      for (std::size_t k = 0; k < kNumObjectives; ++k) row.objectives[k].mean = sum[k] / n;
      for (const OutcomeRecord& r : log) {
        if (!r.formed || !(r.config == config)) continue;
        const auto v = r.objectives.ToArray();
        for (std::size_t k = 0; k < kNumObjectives; ++k) {
          const double d = v[k] - row.objectives[k].mean;
          sq[k] += d * d;
        }
      }
      for (std::size_t k = 0; k < kNumObjectives; ++k) {
        row.objectives[k].std = std::sqrt(sq[k] / n);
      }
      row.mean_candidate_reduction = cand_red / n;
      row.mean_team_reduction = team_red / n;
    }
    rows.push_back(row);
  }
  return rows;
}

RunReport run_benchmark(std::span<const Candidate> pool,
                        std::span<const Project> projects,
                        std::span<const MethodConfig> configs,
                        const BenchParams& params) {
  if (pool.empty()) throw InvalidInput("empty candidate pool");
  if (projects.empty()) throw InvalidInput("no projects to benchmark");
  if (configs.empty()) throw InvalidInput("no method configurations");
  const bool any_multi =
      std::any_of(configs.begin(), configs.end(), [](const MethodConfig& c) {
        return c.method == Method::kMultiObjective;
      });
  if (any_multi) {
    if (params.team_size < 3 || params.team_size >= pool.size()) {
      throw InvalidInput(fmt::format(
          "team size must satisfy 3 <= M < |pool| ({}), got {}", pool.size(),
          params.team_size));
    }
    if (params.num_random_teams < 1) {
      throw InvalidInput("number of random teams must be at least 1");
    }
  }

  std::vector<std::vector<OutcomeRecord>> per_project(projects.size());
  const std::size_t workers =
      std::clamp<std::size_t>(params.jobs, 1, projects.size());
  if (workers == 1) {
    for (std::size_t i = 0; i < projects.size(); ++i) {
      per_project[i] = RunProject(pool, projects[i], configs, params);
    }
  } else {
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mu;
    {
      std::vector<std::jthread> threads;
      threads.reserve(workers);
      for (std::size_t w = 0; w < workers; ++w) {
        threads.emplace_back([&] {
          for (std::size_t i = next++; i < projects.size(); i = next++) {
            try {
              per_project[i] = RunProject(pool, projects[i], configs, params);
            } catch (...) {
              std::lock_guard lock(error_mu);
              if (!error) error = std::current_exception();
            }
          }
        });
      }
    }
    if (error) std::rethrow_exception(error);
  }

  RunReport report;
  report.project_count = projects.size();
  for (auto& records : per_project) {
    for (auto& r : records) report.log.push_back(std::move(r));
  }
  report.rows = aggregate(report.log, configs);
  return report;
}

std::optional<ReportFormat> ParseReportFormat(std::string_view token) {
  if (token == "csv") return ReportFormat::kCsv;
  if (token == "table") return ReportFormat::kTable;
  return std::nullopt;
}

std::string FormatCell(const Stat& stat) {
  return fmt::format("{:.3f} ({:.3f})", stat.mean, stat.std);
}

std::string emit_report(const RunReport& report, ReportFormat format) {
  if (report.rows.empty()) throw InvalidInput("empty report");
  return format == ReportFormat::kCsv ? EmitCsv(report) : EmitTable(report);
}

std::string emit_log(const RunReport& report) {
  std::string out =
      "project,method,config,formed,failure,cost,workload,expertise,"
      "representation,cost_difference,members,pool,filtered,pareto_candidates,"
      "sampled_teams,covering_teams,pareto_teams,sampling_fallback\n";
  for (const OutcomeRecord& r : report.log) {
    const bool multi = r.config.method == Method::kMultiObjective;
    const Diagnostics& d = r.diagnostics;
    out += fmt::format(
        "{},{},{},{},{},{:.17g},{:.17g},{:.17g},{:.17g},{:.17g},{},{},{},{},{},{},{},{}\n",
        r.project_id, ToToken(r.config.method),
        multi ? ToToken(r.config.selection) : "", r.formed ? 1 : 0,
        ToString(r.failure), r.objectives.cost, r.objectives.workload,
        r.objectives.expertise, r.objectives.representation,
        r.objectives.cost_difference, fmt::join(r.members, ";"), d.pool_size,
        d.filtered_candidates, d.pareto_candidates, d.sampled_teams,
        d.covering_teams, d.pareto_teams, d.sampling_fallback ? 1 : 0);
  }
  return out;
}

}  // namespace fairteam

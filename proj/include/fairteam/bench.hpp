#ifndef FAIRTEAM_BENCH_HPP
#define FAIRTEAM_BENCH_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fairteam/assembly.hpp"
#include "fairteam/model.hpp"

namespace fairteam {

// One row of the report: a baseline, or the multi-objective method under one
// selection mode.
struct MethodConfig {
  Method method = Method::kMultiObjective;
  SelectionMode selection = SelectionMode::kTopSum;  // ignored by baselines

  std::string Label() const;
  friend bool operator==(const MethodConfig&, const MethodConfig&) = default;
};

// Incremental, Fair Allocation, then the seven multi-objective modes.
std::vector<MethodConfig> AllMethodConfigs();

struct BenchParams {
  std::size_t team_size = 4;
  std::size_t num_random_teams = 500;
  std::uint64_t seed = 0;
  std::size_t jobs = 1;  // worker threads; output does not depend on it
};

// One (project, config) outcome, for the raw log.
struct OutcomeRecord {
  std::string project_id;
  MethodConfig config;
  bool formed = false;
  FailureReason failure = FailureReason::kNone;
  ObjectiveVector objectives;  // zeros when not formed
  std::vector<std::string> members;
  Diagnostics diagnostics;
};

struct Stat {
  double mean = 0.0;
  double std = 0.0;  // population standard deviation
};

struct ReportRow {
  MethodConfig config;
  std::size_t formed = 0;
  std::array<Stat, kNumObjectives> objectives{};  // over formed teams only
  double mean_candidate_reduction = 0.0;          // over formed teams only
  double mean_team_reduction = 0.0;
};

struct RunReport {
  std::size_t project_count = 0;
  std::vector<ReportRow> rows;
  // Ordered by project (input order), then config (input order).
  std::vector<OutcomeRecord> log;
};

// Runs every config on every project. Infeasible projects become failures in
// the log; they never abort the run. Throws InvalidInput on bad params or an
// empty pool, project list or config list.
RunReport run_benchmark(std::span<const Candidate> pool,
                        std::span<const Project> projects,
                        std::span<const MethodConfig> configs,
                        const BenchParams& params);

// Recomputes the aggregate rows from an outcome log.
std::vector<ReportRow> aggregate(std::span<const OutcomeRecord> log,
                                 std::span<const MethodConfig> configs);

enum class ReportFormat { kCsv, kTable };
std::optional<ReportFormat> ParseReportFormat(std::string_view token);

// "23.311 (15.548)".
std::string FormatCell(const Stat& stat);

// Throws InvalidInput on a report without rows. The table marks the best
// mean of each objective column with '*'.
std::string emit_report(const RunReport& report, ReportFormat format);

// Per-project outcome log as CSV.
std::string emit_log(const RunReport& report);

}  // namespace fairteam

#endif  // FAIRTEAM_BENCH_HPP

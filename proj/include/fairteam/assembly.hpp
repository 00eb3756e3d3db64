#ifndef FAIRTEAM_ASSEMBLY_HPP
#define FAIRTEAM_ASSEMBLY_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fairteam/model.hpp"
#include "fairteam/pareto.hpp"
#include "fairteam/random.hpp"

namespace fairteam {

enum class Method { kMultiObjective, kIncremental, kFairAllocation };

// How the multi-objective assembler picks one team from the team-level front.
enum class SelectionMode {
  kRandom,
  kTopCost,
  kTopWorkload,
  kTopExpertise,
  kTopRepresentation,
  kTopCostDifference,
  kTopSum,
};

inline constexpr std::array<SelectionMode, 7> kAllSelectionModes = {
    SelectionMode::kRandom,           SelectionMode::kTopCost,
    SelectionMode::kTopWorkload,      SelectionMode::kTopExpertise,
    SelectionMode::kTopRepresentation, SelectionMode::kTopCostDifference,
    SelectionMode::kTopSum};

// CLI tokens: "multi", "incremental", "fair-alloc".
std::string_view ToToken(Method method);
std::optional<Method> ParseMethod(std::string_view token);
// Display names: "Multi-Objective", "Incremental", "Fair Allocation".
std::string_view DisplayName(Method method);

// CLI tokens: "random", "top-cost", ..., "top-costdiff", "top-sum".
std::string_view ToToken(SelectionMode mode);
std::optional<SelectionMode> ParseSelectionMode(std::string_view token);
// Display names: "Random", "Top-Cost", ..., "Top-Sum".
std::string_view DisplayName(SelectionMode mode);

// The objective a Top-X mode minimizes; nullopt for Random and TopSum.
std::optional<Objective> TargetObjective(SelectionMode mode);

struct AssemblyParams {
  std::size_t team_size = 4;           // M, at least 3
  std::size_t num_random_teams = 500;  // N, at least 1
  std::uint64_t seed = 0;
  SelectionMode selection = SelectionMode::kTopSum;
};

enum class FailureReason {
  kNone,
  kNoMatchingCandidate,  // no candidate holds any required skill
  kTooFewCandidates,     // fewer than 3 Pareto candidates, no team possible
  kNoCoveringTeam,       // no sampled team covers every requirement
  kUncoverable,          // greedy baselines: the pool cannot cover the project
};

std::string_view ToString(FailureReason reason);

struct Diagnostics {
  std::size_t pool_size = 0;               // |U|
  std::size_t filtered_candidates = 0;     // |U_p|
  std::size_t pareto_candidates = 0;       // round-one front
  std::size_t sampled_teams = 0;           // teams drawn
  std::size_t covering_teams = 0;          // draws with full coverage
  std::size_t pareto_teams = 0;            // round-two front
  bool sampling_fallback = false;          // fewer Pareto candidates than M

  // 1 - |round-one front| / |U_p|; 0 when no candidate round ran.
  double CandidateReduction() const;
  // 1 - |round-two front| / |covering teams|; 0 when no team covered.
  double TeamReduction() const;
};

struct AssemblyOutcome {
  Method method = Method::kMultiObjective;
  std::optional<SelectionMode> selection;  // set for the multi-objective method
  std::optional<Team> team;
  std::optional<ObjectiveVector> objectives;  // present iff team is
  FailureReason failure = FailureReason::kNone;
  Diagnostics diagnostics;

  bool formed() const { return team.has_value(); }
};

// Candidates holding at least one required skill, in pool order. Throws
// InvalidInput on an empty pool and InfeasibleProject when nobody qualifies.
std::vector<const Candidate*> filter_candidates(std::span<const Candidate> pool,
                                                const Project& project);

// Per-requirement costs in sorted requirement order, kNotPossessed for skills
// the candidate lacks.
ScoreVector candidate_scores(const Candidate& candidate, const Project& project);

// Non-dominated subset of `candidates` under candidate_scores, input order.
std::vector<const Candidate*> pareto_candidates(
    std::span<const Candidate* const> candidates, const Project& project);

struct SampledTeams {
  std::vector<Team> teams;
  bool fallback = false;  // fewer candidates than M: one team of everybody
};

// N teams of M distinct members, each drawn uniformly without replacement.
SampledTeams form_random_teams(std::span<const Candidate* const> candidates,
                               std::size_t num_teams, std::size_t team_size,
                               Rng& rng);
SampledTeams form_random_teams(std::span<const Candidate* const> candidates,
                               std::size_t num_teams, std::size_t team_size,
                               std::uint64_t seed);

// Sum over objectives of (x - min) / (max - min), with min and max taken over
// `front`; constant objectives contribute 0. One score per entry of `front`.
std::vector<double> normalized_sums(std::span<const ObjectiveVector> front);

// Two-stage Pareto assembly. The random stream is
// MakeStream(params.seed, project.id()). Throws InvalidInput on bad params.
AssemblyOutcome assemble_multi_objective(std::span<const Candidate> pool,
                                         const Project& project,
                                         const AssemblyParams& params);

// Greedy cover: repeatedly adds the candidate with the lowest
// matched-cost / newly-covered-requirements ratio.
AssemblyOutcome assemble_incremental(std::span<const Candidate> pool,
                                     const Project& project);

// Greedy cover that draws from the currently underrepresented class first.
AssemblyOutcome assemble_fair_allocation(std::span<const Candidate> pool,
                                         const Project& project);

}  // namespace fairteam

#endif  // FAIRTEAM_ASSEMBLY_HPP

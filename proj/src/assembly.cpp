#include "fairteam/assembly.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "fairteam/errors.hpp"
#include "fairteam/objectives.hpp"

namespace fairteam {
namespace {

struct ModeInfo {
  SelectionMode mode;
  std::string_view token;
  std::string_view display;
};

constexpr std::array<ModeInfo, 7> kModeInfo = {{
    {SelectionMode::kRandom, "random", "Random"},
    {SelectionMode::kTopCost, "top-cost", "Top-Cost"},
    {SelectionMode::kTopWorkload, "top-workload", "Top-Workload"},
    {SelectionMode::kTopExpertise, "top-expertise", "Top-Expertise"},
    {SelectionMode::kTopRepresentation, "top-representation",
     "Top-Representation"},
    {SelectionMode::kTopCostDifference, "top-costdiff", "Top-Cost Difference"},
    {SelectionMode::kTopSum, "top-sum", "Top-Sum"},
}};

const ModeInfo& Info(SelectionMode mode) {
  return kModeInfo[static_cast<std::size_t>(mode)];
}

// Index of the front entry a configuration selects.
std::size_t SelectFromFront(std::span<const Team> teams,
                            std::span<const ObjectiveVector> objectives,
                            SelectionMode mode, Rng& rng) {
  if (mode == SelectionMode::kRandom) {
    std::uniform_int_distribution<std::size_t> pick(0, teams.size() - 1);
    return pick(rng);
  }
  const std::vector<double> sums = normalized_sums(objectives);
  const std::optional<Objective> target = TargetObjective(mode);
  auto better = [&](std::size_t a, std::size_t b) {
    if (target) {
      const double xa = objectives[a][*target];
      const double xb = objectives[b][*target];
      if (xa != xb) return xa < xb;
    }
    if (sums[a] != sums[b]) return sums[a] < sums[b];
    return IdsLess(teams[a], teams[b]);
  };
  std::size_t best = 0;
  for (std::size_t i = 1; i < teams.size(); ++i) {
    if (better(i, best)) best = i;
  }
  return best;
}

void ValidateParams(const AssemblyParams& params, std::size_t pool_size) {
  if (params.team_size < 3) {
    throw InvalidInput("team size must be at least 3, got " +
                       std::to_string(params.team_size));
  }
  if (params.num_random_teams < 1) {
    throw InvalidInput("number of random teams must be at least 1");
  }
  if (params.team_size >= pool_size) {
    throw InvalidInput("team size " + std::to_string(params.team_size) +
                       " must be smaller than the pool (" +
                       std::to_string(pool_size) + ")");
  }
}

AssemblyOutcome Greedy(std::span<const Candidate> pool, const Project& project,
                       Method method) {
  if (pool.empty()) throw InvalidInput("empty candidate pool");
  AssemblyOutcome out;
  out.method = method;
  out.diagnostics.pool_size = pool.size();

  std::vector<const Candidate*> eligible;
  for (const Candidate& c : pool) {
    if (member_load(c, project) > 0.0) eligible.push_back(&c);
  }
  out.diagnostics.filtered_candidates = eligible.size();
  if (eligible.empty()) {
    out.failure = FailureReason::kNoMatchingCandidate;
    return out;
  }

  const std::vector<SkillId> reqs(project.requirements().begin(),
                                  project.requirements().end());
  std::vector<bool> covered(reqs.size(), false);
  std::size_t num_covered = 0;
  std::vector<bool> taken(eligible.size(), false);
  std::vector<const Candidate*> members;
  std::array<std::size_t, 2> class_count = {0, 0};
  std::array<double, 2> class_cost = {0.0, 0.0};

  while (num_covered < reqs.size()) {
    std::optional<AttributeClass> preferred;
    if (method == Method::kFairAllocation) {
      const auto zero = static_cast<std::size_t>(AttributeClass::kZero);
      const auto one = static_cast<std::size_t>(AttributeClass::kOne);
      if (class_count[zero] != class_count[one]) {
        preferred = class_count[zero] < class_count[one] ? AttributeClass::kZero
                                                         : AttributeClass::kOne;
      } else if (class_cost[one] < class_cost[zero]) {
        preferred = AttributeClass::kOne;
      } else {
        preferred = AttributeClass::kZero;
      }
    }

    // (ratio, added cost, id) lexicographic minimum among candidates of
    // `cls` (any class when nullopt) that add coverage.
    auto best_of = [&](std::optional<AttributeClass> cls) -> std::optional<std::size_t> {
      std::optional<std::size_t> best;
      std::tuple<double, double, std::string_view> best_key;
      for (std::size_t i = 0; i < eligible.size(); ++i) {
        if (taken[i]) continue;
        const Candidate& c = *eligible[i];
        if (cls && c.attribute() != *cls) continue;
        std::size_t gained = 0;
        for (std::size_t r = 0; r < reqs.size(); ++r) {
          if (!covered[r] && c.Has(reqs[r])) ++gained;
        }
        if (gained == 0) continue;
        const double added = member_load(c, project);
        std::tuple<double, double, std::string_view> key{
            added / static_cast<double>(gained), added, c.id()};
        if (!best || key < best_key) {
          best = i;
          best_key = key;
        }
      }
      return best;
    };

    std::optional<std::size_t> pick = best_of(preferred);
    if (!pick && preferred) pick = best_of(Other(*preferred));
    if (!pick) {
      out.failure = FailureReason::kUncoverable;
      return out;
    }

    const Candidate& chosen = *eligible[*pick];
    taken[*pick] = true;
    members.push_back(&chosen);
    const auto cls = static_cast<std::size_t>(chosen.attribute());
    ++class_count[cls];
    class_cost[cls] += member_load(chosen, project);
    for (std::size_t r = 0; r < reqs.size(); ++r) {
      if (!covered[r] && chosen.Has(reqs[r])) {
        covered[r] = true;
        ++num_covered;
      }
    }
  }

  out.team = Team(std::move(members));
  out.objectives = objective_vector(*out.team, project);
  return out;
}

}  // namespace

std::string_view ToToken(Method method) {
  switch (method) {
    case Method::kMultiObjective:
      return "multi";
    case Method::kIncremental:
      return "incremental";
    case Method::kFairAllocation:
      return "fair-alloc";
  }
  return "?";
}

std::optional<Method> ParseMethod(std::string_view token) {
  for (Method m : {Method::kMultiObjective, Method::kIncremental,
                   Method::kFairAllocation}) {
    if (ToToken(m) == token) return m;
  }
  return std::nullopt;
}

std::string_view DisplayName(Method method) {
  switch (method) {
    case Method::kMultiObjective:
      return "Multi-Objective";
    case Method::kIncremental:
      return "Incremental";
    case Method::kFairAllocation:
      return "Fair Allocation";
  }
  return "?";
}

std::string_view ToToken(SelectionMode mode) { return Info(mode).token; }

std::optional<SelectionMode> ParseSelectionMode(std::string_view token) {
  for (const ModeInfo& info : kModeInfo) {
    if (info.token == token) return info.mode;
  }
  return std::nullopt;
}

std::string_view DisplayName(SelectionMode mode) { return Info(mode).display; }

std::optional<Objective> TargetObjective(SelectionMode mode) {
  switch (mode) {
    case SelectionMode::kTopCost:
      return Objective::kCost;
    case SelectionMode::kTopWorkload:
      return Objective::kWorkload;
    case SelectionMode::kTopExpertise:
      return Objective::kExpertise;
    case SelectionMode::kTopRepresentation:
      return Objective::kRepresentation;
    case SelectionMode::kTopCostDifference:
      return Objective::kCostDifference;
    case SelectionMode::kRandom:
    case SelectionMode::kTopSum:
      return std::nullopt;
  }
  return std::nullopt;
}

std::string_view ToString(FailureReason reason) {
  switch (reason) {
    case FailureReason::kNone:
      return "none";
    case FailureReason::kNoMatchingCandidate:
      return "no-matching-candidate";
    case FailureReason::kTooFewCandidates:
      return "too-few-candidates";
    case FailureReason::kNoCoveringTeam:
      return "no-covering-team";
    case FailureReason::kUncoverable:
      return "uncoverable";
  }
  return "?";
}

double Diagnostics::CandidateReduction() const {
  if (filtered_candidates == 0 || pareto_candidates == 0) return 0.0;
  return 1.0 - static_cast<double>(pareto_candidates) /
                   static_cast<double>(filtered_candidates);
}

double Diagnostics::TeamReduction() const {
  if (covering_teams == 0) return 0.0;
  return 1.0 - static_cast<double>(pareto_teams) /
                   static_cast<double>(covering_teams);
}

std::vector<const Candidate*> filter_candidates(std::span<const Candidate> pool,
                                                const Project& project) {
  if (pool.empty()) throw InvalidInput("empty candidate pool");
  std::vector<const Candidate*> kept;
  for (const Candidate& c : pool) {
    const bool matches =
        std::any_of(project.requirements().begin(), project.requirements().end(),
                    [&](const SkillId& s) { return c.Has(s); });
    if (matches) kept.push_back(&c);
  }
  if (kept.empty()) {
    throw InfeasibleProject("no candidate holds a skill required by project " +
                            project.id());
  }
  return kept;
}

ScoreVector candidate_scores(const Candidate& candidate, const Project& project) {
  ScoreVector scores;
  scores.reserve(project.size());
  for (const SkillId& skill : project.requirements()) {
    scores.push_back(candidate.Has(skill) ? candidate.Cost(skill) : kNotPossessed);
  }
  return scores;
}

std::vector<const Candidate*> pareto_candidates(
    std::span<const Candidate* const> candidates, const Project& project) {
  std::vector<ScoreVector> scores;
  scores.reserve(candidates.size());
  for (const Candidate* c : candidates) scores.push_back(candidate_scores(*c, project));
  std::vector<const Candidate*> front;
  for (std::size_t i : pareto_front(std::span<const ScoreVector>(scores))) {
    front.push_back(candidates[i]);
  }
  return front;
}

SampledTeams form_random_teams(std::span<const Candidate* const> candidates,
                               std::size_t num_teams, std::size_t team_size,
                               Rng& rng) {
  SampledTeams out;
  if (candidates.size() < team_size) {
    out.fallback = true;
    out.teams.emplace_back(
        std::vector<const Candidate*>(candidates.begin(), candidates.end()));
    return out;
  }
  std::vector<const Candidate*> deck(candidates.begin(), candidates.end());
  out.teams.reserve(num_teams);
  for (std::size_t t = 0; t < num_teams; ++t) {
    // Partial Fisher-Yates: the first team_size slots become a uniform sample.
    for (std::size_t k = 0; k < team_size; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, deck.size() - 1);
      std::swap(deck[k], deck[pick(rng)]);
    }
    out.teams.emplace_back(
        std::vector<const Candidate*>(deck.begin(), deck.begin() + team_size));
  }
  return out;
}

SampledTeams form_random_teams(std::span<const Candidate* const> candidates,
                               std::size_t num_teams, std::size_t team_size,
                               std::uint64_t seed) {
  Rng rng(seed);
  return form_random_teams(candidates, num_teams, team_size, rng);
}

std::vector<double> normalized_sums(std::span<const ObjectiveVector> front) {
  std::vector<double> sums(front.size(), 0.0);
  if (front.empty()) return sums;
  for (Objective obj : kAllObjectives) {
    double lo = front[0][obj];
    double hi = lo;
    for (const ObjectiveVector& v : front) {
      lo = std::min(lo, v[obj]);
      hi = std::max(hi, v[obj]);
    }
    if (hi <= lo) continue;
    for (std::size_t i = 0; i < front.size(); ++i) {
      sums[i] += (front[i][obj] - lo) / (hi - lo);
    }
  }
  return sums;
}

AssemblyOutcome assemble_multi_objective(std::span<const Candidate> pool,
                                         const Project& project,
                                         const AssemblyParams& params) {
  if (pool.empty()) throw InvalidInput("empty candidate pool");
  ValidateParams(params, pool.size());

  AssemblyOutcome out;
  out.method = Method::kMultiObjective;
  out.selection = params.selection;
  Diagnostics& diag = out.diagnostics;
  diag.pool_size = pool.size();

  std::vector<const Candidate*> filtered;
  try {
    filtered = filter_candidates(pool, project);
  } catch (const InfeasibleProject&) {
    out.failure = FailureReason::kNoMatchingCandidate;
    return out;
  }
  diag.filtered_candidates = filtered.size();

  const std::vector<const Candidate*> front_candidates =
      pareto_candidates(filtered, project);
  diag.pareto_candidates = front_candidates.size();

  Rng rng = MakeStream(params.seed, project.id());
  SampledTeams sampled = form_random_teams(
      front_candidates, params.num_random_teams, params.team_size, rng);
  diag.sampling_fallback = sampled.fallback;
  diag.sampled_teams = sampled.teams.size();
  if (sampled.fallback && front_candidates.size() < 3) {
    out.failure = FailureReason::kTooFewCandidates;
    return out;
  }

  std::vector<Team> covering;
  std::vector<ObjectiveVector> covering_objectives;
  for (Team& team : sampled.teams) {
    if (!FullyCovers(team, project)) continue;
    covering_objectives.push_back(objective_vector(team, project));
    covering.push_back(std::move(team));
  }
  diag.covering_teams = covering.size();
  if (covering.empty()) {
    out.failure = FailureReason::kNoCoveringTeam;
    return out;
  }

  std::vector<ScoreVector> scores;
  scores.reserve(covering.size());
  for (const ObjectiveVector& v : covering_objectives) {
    const auto a = v.ToArray();
    scores.emplace_back(a.begin(), a.end());
  }
  std::vector<Team> front_teams;
  std::vector<ObjectiveVector> front_objectives;
  for (std::size_t i : pareto_front(std::span<const ScoreVector>(scores))) {
    front_teams.push_back(covering[i]);
    front_objectives.push_back(covering_objectives[i]);
  }
  diag.pareto_teams = front_teams.size();

  const std::size_t pick =
      SelectFromFront(front_teams, front_objectives, params.selection, rng);
  out.team = front_teams[pick];
  out.objectives = front_objectives[pick];
  return out;
}

AssemblyOutcome assemble_incremental(std::span<const Candidate> pool,
                                     const Project& project) {
  return Greedy(pool, project, Method::kIncremental);
}

AssemblyOutcome assemble_fair_allocation(std::span<const Candidate> pool,
                                         const Project& project) {
  return Greedy(pool, project, Method::kFairAllocation);
}

}  // namespace fairteam

// Re-derives the sampled teams of one multi-objective run and scores them with
// the naive evaluator, for exhaustive checks of the selection step.
#ifndef FAIRTEAM_TESTS_RESCAN_HPP
#define FAIRTEAM_TESTS_RESCAN_HPP

#include <algorithm>
#include <span>
#include <vector>

#include "fairteam/assembly.hpp"
#include "fairteam/errors.hpp"
#include "oracles.hpp"

namespace fairteam::testing {

struct Rescan {
  std::vector<Team> covering;
  std::vector<ObjectiveVector> covering_objectives;
  std::vector<std::size_t> front;  // indices into `covering`
};

inline Rescan RescanSamples(std::span<const Candidate> pool, const Project& project,
                            const AssemblyParams& params) {
  Rescan out;
  std::vector<const Candidate*> filtered;
  try {
    filtered = filter_candidates(pool, project);
  } catch (const InfeasibleProject&) {
    return out;
  }
  const auto front_candidates = pareto_candidates(filtered, project);
  if (front_candidates.size() < 3) return out;
  Rng rng = MakeStream(params.seed, project.id());
  const SampledTeams sampled = form_random_teams(
      front_candidates, params.num_random_teams, params.team_size, rng);
  std::vector<std::vector<double>> scores;
  for (const Team& team : sampled.teams) {
    std::vector<const Candidate*> members(team.members().begin(), team.members().end());
    std::size_t held = 0;
    for (const SkillId& s : project.requirements()) {
      held += std::any_of(members.begin(), members.end(),
                          [&](const Candidate* c) { return c->cost_profile().count(s) > 0; });
    }
    if (held != project.size()) continue;
    const NaiveObjectives o = NaiveEvaluate(members, project);
    out.covering.push_back(team);
    out.covering_objectives.push_back(
        {o.cost, o.workload, o.expertise, o.representation, o.cost_difference});
    scores.push_back({o.cost, o.workload, o.expertise, o.representation, o.cost_difference});
  }
  out.front = OracleFront(scores);
  return out;
}

}  // namespace fairteam::testing

#endif  // FAIRTEAM_TESTS_RESCAN_HPP

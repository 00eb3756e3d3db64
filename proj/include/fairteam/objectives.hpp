#ifndef FAIRTEAM_OBJECTIVES_HPP
#define FAIRTEAM_OBJECTIVES_HPP

#include <string>
#include <vector>

#include "fairteam/model.hpp"

namespace fairteam {

// Matched cost of one member: sum of their costs over the project's
// requirements they possess.
struct MemberLoad {
  std::string candidate_id;
  double load = 0.0;
};

double member_load(const Candidate& candidate, const Project& project);

// One entry per member, in team order.
std::vector<MemberLoad> member_loads(const Team& team, const Project& project);

// Per-requirement sum of member costs, one entry per requirement in sorted
// order. Requirements nobody holds contribute 0.
std::vector<double> requirement_totals(const Team& team, const Project& project);

// Total matched cost of the members whose attribute is `cls`.
double cost_attribute(const Team& team, const Project& project,
                      AttributeClass cls);

// Total matched cost of the team. Evaluated as
// cost_attribute(kZero) + cost_attribute(kOne), so the two class shares add
// up to it exactly.
double team_cost(const Team& team, const Project& project);

// Population standard deviation of member loads. Throws InvalidInput on an
// empty team.
double workload_unevenness(const Team& team, const Project& project);

// Population standard deviation of per-requirement totals, normalized by the
// number of requirements.
double expertise_unevenness(const Team& team, const Project& project);

// |#class0 - #class1| / |team|. Throws InvalidInput on an empty team.
double representation_parity(const Team& team);

// |CA(class0) - CA(class1)| / Cost. Throws UndefinedValue when the team cost
// is zero.
double cost_difference(const Team& team, const Project& project);

// All five objectives. Requires coverage >= 1 (InvalidInput otherwise).
ObjectiveVector objective_vector(const Team& team, const Project& project);

}  // namespace fairteam

#endif  // FAIRTEAM_OBJECTIVES_HPP

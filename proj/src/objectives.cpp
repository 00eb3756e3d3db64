#include "fairteam/objectives.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "fairteam/errors.hpp"

namespace fairteam {
namespace {

double PopulationStdDev(const std::vector<double>& values, double total) {
  const double n = static_cast<double>(values.size());
  const double mean = total / n;
  double sum_sq = 0.0;
  for (double v : values) sum_sq += (v - mean) * (v - mean);
  return std::sqrt(sum_sq / n);
}

}  // namespace

double member_load(const Candidate& candidate, const Project& project) {
  double load = 0.0;
  for (const SkillId& skill : project.requirements()) load += candidate.Cost(skill);
  return load;
}

std::vector<MemberLoad> member_loads(const Team& team, const Project& project) {
  std::vector<MemberLoad> loads;
  loads.reserve(team.size());
  for (const Candidate* member : team.members()) {
    loads.push_back({member->id(), member_load(*member, project)});
  }
  return loads;
}

std::vector<double> requirement_totals(const Team& team, const Project& project) {
  std::vector<double> totals;
  totals.reserve(project.size());
  for (const SkillId& skill : project.requirements()) {
    double total = 0.0;
    for (const Candidate* member : team.members()) total += member->Cost(skill);
    totals.push_back(total);
  }
  return totals;
}

double cost_attribute(const Team& team, const Project& project,
                      AttributeClass cls) {
  double total = 0.0;
  for (const Candidate* member : team.members()) {
    if (member->attribute() == cls) total += member_load(*member, project);
  }
  return total;
}

double team_cost(const Team& team, const Project& project) {
  return cost_attribute(team, project, AttributeClass::kZero) +
         cost_attribute(team, project, AttributeClass::kOne);
}

double workload_unevenness(const Team& team, const Project& project) {
  if (team.empty()) throw InvalidInput("workload of an empty team");
  std::vector<double> loads;
  loads.reserve(team.size());
  for (const Candidate* member : team.members()) {
    loads.push_back(member_load(*member, project));
  }
  return PopulationStdDev(loads, team_cost(team, project));
}

double expertise_unevenness(const Team& team, const Project& project) {
  // Project guarantees at least one requirement.
  return PopulationStdDev(requirement_totals(team, project),
                          team_cost(team, project));
}

double representation_parity(const Team& team) {
  if (team.empty()) throw InvalidInput("representation of an empty team");
  long balance = 0;
  for (const Candidate* member : team.members()) {
    balance += member->attribute() == AttributeClass::kZero ? 1 : -1;
  }
  return static_cast<double>(std::labs(balance)) /
         static_cast<double>(team.size());
}

double cost_difference(const Team& team, const Project& project) {
  const double ca0 = cost_attribute(team, project, AttributeClass::kZero);
  const double ca1 = cost_attribute(team, project, AttributeClass::kOne);
  const double cost = ca0 + ca1;
  if (cost <= 0.0) {
    throw UndefinedValue("cost difference of a team with zero cost");
  }
  return std::min(1.0, std::abs(ca0 - ca1) / cost);
}

ObjectiveVector objective_vector(const Team& team, const Project& project) {
  if (coverage(team, project) == 0) {
    throw InvalidInput("objective vector of a team covering no requirement");
  }
  ObjectiveVector v;
  v.cost = team_cost(team, project);
  v.workload = workload_unevenness(team, project);
  v.expertise = expertise_unevenness(team, project);
  v.representation = representation_parity(team);
  v.cost_difference = cost_difference(team, project);
  return v;
}

}  // namespace fairteam

#include "fairteam/model.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

#include "fairteam/errors.hpp"

namespace fairteam {

SkillId::SkillId(std::string value) : value_(std::move(value)) {
  if (value_.empty()) throw InvalidInput("skill id must be non-empty");
}

std::string_view ToString(AttributeClass c) {
  return c == AttributeClass::kZero ? "0" : "1";
}

Candidate::Candidate(std::string id, AttributeClass attribute,
                     CostProfile cost_profile)
    : id_(std::move(id)),
      attribute_(attribute),
      cost_profile_(std::move(cost_profile)) {
  if (id_.empty()) throw InvalidInput("candidate id must be non-empty");
  if (cost_profile_.empty()) {
    throw InvalidInput("candidate " + id_ + " has an empty cost profile");
  }
  for (const auto& [skill, cost] : cost_profile_) {
    if (!std::isfinite(cost) || cost <= 0.0) {
      throw InvalidInput("candidate " + id_ + ": cost of skill " + skill.str() +
                         " must be a finite positive number");
    }
  }
}

double Candidate::Cost(const SkillId& skill) const {
  auto it = cost_profile_.find(skill);
  return it == cost_profile_.end() ? 0.0 : it->second;
}

Project::Project(std::string id, std::set<SkillId> requirements)
    : id_(std::move(id)), requirements_(std::move(requirements)) {
  if (requirements_.empty()) {
    throw InvalidInput("project " + id_ + " has no requirements");
  }
}

Team::Team(std::vector<const Candidate*> members) : members_(std::move(members)) {
  if (std::find(members_.begin(), members_.end(), nullptr) != members_.end()) {
    throw InvalidInput("team member must not be null");
  }
  std::sort(members_.begin(), members_.end(),
            [](const Candidate* a, const Candidate* b) { return a->id() < b->id(); });
  auto dup = std::adjacent_find(
      members_.begin(), members_.end(),
      [](const Candidate* a, const Candidate* b) { return a->id() == b->id(); });
  if (dup != members_.end()) {
    throw InvalidInput("duplicate team member " + (*dup)->id());
  }
}

std::vector<std::string> Team::MemberIds() const {
  std::vector<std::string> ids;
  ids.reserve(members_.size());
  for (const Candidate* c : members_) ids.push_back(c->id());
  return ids;
}

bool IdsLess(const Team& a, const Team& b) {
  return std::lexicographical_compare(
      a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
      [](const Candidate* x, const Candidate* y) { return x->id() < y->id(); });
}

std::size_t coverage(const Team& team, const Project& project) {
  std::size_t covered = 0;
  for (const SkillId& skill : project.requirements()) {
    for (const Candidate* member : team.members()) {
      if (member->Has(skill)) {
        ++covered;
        break;
      }
    }
  }
  return covered;
}

std::string_view ToString(Objective objective) {
  switch (objective) {
    case Objective::kCost:
      return "Cost";
    case Objective::kWorkload:
      return "Workload";
    case Objective::kExpertise:
      return "Expertise";
    case Objective::kRepresentation:
      return "Representation";
    case Objective::kCostDifference:
      return "CostDifference";
  }
  return "?";
}

double ObjectiveVector::operator[](Objective objective) const {
  switch (objective) {
    case Objective::kCost:
      return cost;
    case Objective::kWorkload:
      return workload;
    case Objective::kExpertise:
      return expertise;
    case Objective::kRepresentation:
      return representation;
    case Objective::kCostDifference:
      return cost_difference;
  }
  return 0.0;
}

std::array<double, kNumObjectives> ObjectiveVector::ToArray() const {
  return {cost, workload, expertise, representation, cost_difference};
}

bool ObjectiveVector::Valid() const {
  for (double v : ToArray()) {
    if (!std::isfinite(v) || v < 0.0) return false;
  }
  return representation <= 1.0 && cost_difference <= 1.0;
}

}  // namespace fairteam

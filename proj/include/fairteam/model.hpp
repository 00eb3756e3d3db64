#ifndef FAIRTEAM_MODEL_HPP
#define FAIRTEAM_MODEL_HPP

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace fairteam {

// One skill token of the skill universe. Equality is exact token equality.
class SkillId {
 public:
  explicit SkillId(std::string value);

  const std::string& str() const { return value_; }

  friend auto operator<=>(const SkillId&, const SkillId&) = default;
  friend bool operator==(const SkillId&, const SkillId&) = default;

 private:
  std::string value_;
};

enum class AttributeClass { kZero = 0, kOne = 1 };

inline AttributeClass Other(AttributeClass c) {
  return c == AttributeClass::kZero ? AttributeClass::kOne
                                    : AttributeClass::kZero;
}

std::string_view ToString(AttributeClass c);

// Sparse per-skill hiring costs. A skill is possessed iff it is a key; stored
// costs are always strictly positive and finite.
using CostProfile = std::map<SkillId, double>;

class Candidate {
 public:
  // Throws InvalidInput on an empty id, an empty profile or a cost that is not
  // a finite positive number.
  Candidate(std::string id, AttributeClass attribute, CostProfile cost_profile);

  const std::string& id() const { return id_; }
  AttributeClass attribute() const { return attribute_; }
  const CostProfile& cost_profile() const { return cost_profile_; }

  bool Has(const SkillId& skill) const { return cost_profile_.contains(skill); }
  // Cost of `skill`, or 0 when the skill is not possessed.
  double Cost(const SkillId& skill) const;

 private:
  std::string id_;
  AttributeClass attribute_;
  CostProfile cost_profile_;
};

class Project {
 public:
  // Throws InvalidInput when `requirements` is empty.
  Project(std::string id, std::set<SkillId> requirements);

  const std::string& id() const { return id_; }
  // Sorted by SkillId.
  const std::set<SkillId>& requirements() const { return requirements_; }
  std::size_t size() const { return requirements_.size(); }

 private:
  std::string id_;
  std::set<SkillId> requirements_;
};

// Non-owning set of candidates; the candidates must outlive the team. Members
// are kept sorted by candidate id, which fixes every summation order.
class Team {
 public:
  Team() = default;
  // Throws InvalidInput on null entries or duplicate candidate ids.
  explicit Team(std::vector<const Candidate*> members);

  std::span<const Candidate* const> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  std::vector<std::string> MemberIds() const;

  // Lexicographic comparison of member id sequences.
  friend bool IdsLess(const Team& a, const Team& b);

 private:
  std::vector<const Candidate*> members_;
};

// Number of requirements of `project` possessed by at least one team member.
std::size_t coverage(const Team& team, const Project& project);

inline bool FullyCovers(const Team& team, const Project& project) {
  return coverage(team, project) == project.size();
}

enum class Objective {
  kCost = 0,
  kWorkload,
  kExpertise,
  kRepresentation,
  kCostDifference,
};

inline constexpr std::size_t kNumObjectives = 5;
inline constexpr std::array<Objective, kNumObjectives> kAllObjectives = {
    Objective::kCost, Objective::kWorkload, Objective::kExpertise,
    Objective::kRepresentation, Objective::kCostDifference};

std::string_view ToString(Objective objective);

struct ObjectiveVector {
  double cost = 0.0;
  double workload = 0.0;
  double expertise = 0.0;
  double representation = 0.0;
  double cost_difference = 0.0;

  double operator[](Objective objective) const;
  std::array<double, kNumObjectives> ToArray() const;
  // Finite, non-negative, representation and cost_difference at most 1.
  bool Valid() const;

  friend bool operator==(const ObjectiveVector&,
                         const ObjectiveVector&) = default;
};

}  // namespace fairteam

#endif  // FAIRTEAM_MODEL_HPP

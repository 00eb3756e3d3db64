#ifndef FAIRTEAM_PARETO_HPP
#define FAIRTEAM_PARETO_HPP

#include <cstddef>
#include <limits>
#include <span>
#include <vector>

namespace fairteam {

// Minimization-sense score vector. Entries are finite and >= 0, or
// kNotPossessed, which compares equal to itself and worse than any finite
// value.
using ScoreVector = std::vector<double>;

inline constexpr double kNotPossessed = std::numeric_limits<double>::infinity();

// True iff `a` is no worse than `b` everywhere and strictly better somewhere.
// Throws InvalidInput on a length mismatch.
bool dominates(std::span<const double> a, std::span<const double> b);

// Indices of the non-dominated vectors, in input order. Identical vectors are
// all kept. Throws InvalidInput on empty input, mixed lengths or NaN entries.
std::vector<std::size_t> pareto_front(std::span<const ScoreVector> items);

template <typename Id>
struct Scored {
  Id id;
  ScoreVector scores;
};

// Ids of the non-dominated items, in input order.
template <typename Id>
std::vector<Id> pareto_front(std::span<const Scored<Id>> items) {
  std::vector<ScoreVector> scores;
  scores.reserve(items.size());
  for (const auto& item : items) scores.push_back(item.scores);
  std::vector<Id> ids;
  for (std::size_t i : pareto_front(std::span<const ScoreVector>(scores))) {
    ids.push_back(items[i].id);
  }
  return ids;
}

}  // namespace fairteam

#endif  // FAIRTEAM_PARETO_HPP

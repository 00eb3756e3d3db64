#include "fairteam/pareto.hpp"

#include <cmath>
#include <string>

#include "fairteam/errors.hpp"

namespace fairteam {

bool dominates(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) {
    throw InvalidInput("score vectors of different lengths: " +
                       std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()));
  }
  bool strictly_better = false;
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
    if (a[k] < b[k]) strictly_better = true;
  }
  return strictly_better;
}

std::vector<std::size_t> pareto_front(std::span<const ScoreVector> items) {
  if (items.empty()) throw InvalidInput("pareto front of an empty set");
  const std::size_t dim = items.front().size();
  for (const ScoreVector& v : items) {
    if (v.size() != dim) throw InvalidInput("score vectors of mixed lengths");
    for (double x : v) {
      if (std::isnan(x)) throw InvalidInput("NaN in score vector");
    }
  }

  std::vector<std::size_t> front;
  for (std::size_t i = 0; i < items.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < items.size() && !dominated; ++j) {
      dominated = j != i && dominates(items[j], items[i]);
    }
    if (!dominated) front.push_back(i);
  }
  return front;
}

}  // namespace fairteam

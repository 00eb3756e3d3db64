#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "fairteam/errors.hpp"
#include "fairteam/pareto.hpp"
#include "oracles.hpp"

namespace fairteam {
namespace {

constexpr double kInf = kNotPossessed;

std::vector<std::size_t> Front(const std::vector<ScoreVector>& v) {
  return pareto_front(std::span<const ScoreVector>(v));
}

std::vector<ScoreVector> RandomVectors(std::mt19937_64& rng, std::size_t n,
                                       std::size_t dim) {
  std::uniform_int_distribution<int> level(0, 4);  // small range forces ties
  std::bernoulli_distribution infinite(0.15);
  std::bernoulli_distribution duplicate(0.1);
  std::vector<ScoreVector> v;
  for (std::size_t i = 0; i < n; ++i) {
    if (!v.empty() && duplicate(rng)) {
      v.push_back(v[rng() % v.size()]);
      continue;
    }
    ScoreVector s(dim);
    for (double& x : s) x = infinite(rng) ? kInf : 0.25 * level(rng);
    v.push_back(std::move(s));
  }
  return v;
}

TEST_CASE("dominance") {
  CHECK(dominates(std::vector{1.0, 2.0}, std::vector{2.0, 2.0}));
  CHECK_FALSE(dominates(std::vector{2.0, 2.0}, std::vector{1.0, 2.0}));
  CHECK_FALSE(dominates(std::vector{1.0, 3.0}, std::vector{3.0, 1.0}));
  CHECK_FALSE(dominates(std::vector{3.0, 1.0}, std::vector{1.0, 3.0}));
  CHECK_FALSE(dominates(std::vector{0.5, kInf}, std::vector{0.5, kInf}));
  CHECK(dominates(std::vector{kInf, 7.0}, std::vector{kInf, kInf}));
  CHECK_THROWS_AS(dominates(std::vector{1.0}, std::vector{1.0, 2.0}), InvalidInput);
}

TEST_CASE("pareto front basics") {
  // a:(1,2) b:(2,1) c:(2,2)
  CHECK(Front({{1, 2}, {2, 1}, {2, 2}}) == std::vector<std::size_t>{0, 1});
  CHECK(Front({{3, 3}, {3, 3}, {3, 3}}) == std::vector<std::size_t>{0, 1, 2});
  CHECK(Front({{kInf, kInf}, {kInf, 9.0}}) == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(Front({}), InvalidInput);
  CHECK_THROWS_AS(Front({{1, 2}, {1}}), InvalidInput);
  CHECK_THROWS_AS(Front({{1, std::nan("")}}), InvalidInput);

  const std::vector<Scored<std::string>> items = {
      {"a", {1, 2}}, {"b", {2, 1}}, {"c", {2, 2}}};
  CHECK(pareto_front(std::span<const Scored<std::string>>(items)) ==
        std::vector<std::string>{"a", "b"});
}

TEST_CASE("pareto front matches the all-pairs oracle on 200 random 6-d vectors") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 20; ++rep) {
    const auto v = RandomVectors(rng, 200, 6);
    CHECK(Front(v) == testing::OracleFront(v));
  }
}

TEST_CASE("front properties") {
  std::mt19937_64 rng(5);
  for (int rep = 0; rep < 100; ++rep) {
    const std::size_t dim = 1 + rng() % 5;
    const auto v = RandomVectors(rng, 1 + rng() % 60, dim);
    const auto front = Front(v);
    REQUIRE_FALSE(front.empty());
    const std::set<std::size_t> in_front(front.begin(), front.end());

    // Antichain.
    for (std::size_t i : front) {
      for (std::size_t j : front) CHECK_FALSE(dominates(v[i], v[j]));
    }
    // Completeness.
    for (std::size_t i = 0; i < v.size(); ++i) {
      if (in_front.count(i)) continue;
      CHECK(std::any_of(front.begin(), front.end(),
                        [&](std::size_t j) { return dominates(v[j], v[i]); }));
    }
    // Idempotence.
    std::vector<ScoreVector> sub;
    for (std::size_t i : front) sub.push_back(v[i]);
    CHECK(Front(sub).size() == sub.size());

    // Permutation changes order, never the set.
    std::vector<std::size_t> perm(v.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    std::vector<ScoreVector> shuffled;
    for (std::size_t i : perm) shuffled.push_back(v[i]);
    std::set<std::size_t> mapped;
    for (std::size_t i : Front(shuffled)) mapped.insert(perm[i]);
    CHECK(mapped == in_front);

    // Positive scaling of one coordinate.
    auto scaled = v;
    const std::size_t k = rng() % dim;
    for (auto& s : scaled) s[k] *= 3.5;
    CHECK(Front(scaled) == front);
  }
}

}  // namespace
}  // namespace fairteam

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "fairteam/assembly.hpp"
#include "fairteam/bench.hpp"
#include "fairteam/data_io.hpp"
#include "fairteam/objectives.hpp"
#include "fairteam/pareto.hpp"
#include "oracles.hpp"
#include "rescan.hpp"

namespace {

using namespace fairteam;
using testing::NaiveEvaluate;
using testing::OracleFront;

struct Result {
  bool pass = true;
  std::string detail;
};

// Records the first failing check.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    if (!ok && result_.pass) {
      result_.pass = false;
      result_.detail = what;
    }
  }
  void Note(const std::string& text) {
    if (result_.pass) result_.detail = text;
  }
  Result result() const { return result_; }

 private:
  Result result_;
};

// 1. Worked example.
Result WorkedExample() {
  Checker c;
  const auto members = testing::Table1Members();
  const Team team({&members[0], &members[1], &members[2]});
  const ObjectiveVector v = objective_vector(team, testing::Table1Project());
  const std::array<double, 5> expected = {0.328, 0.0562396, 0.0275590, 0.3333333,
                                          0.7865854};
  const auto got = v.ToArray();
  for (std::size_t k = 0; k < 5; ++k) {
    c.Expect(std::abs(got[k] - expected[k]) <= 1e-6,
             fmt::format("{} = {:.9f}, expected {:.7f}", ToString(kAllObjectives[k]),
                         got[k], expected[k]));
  }
  c.Note(fmt::format("({:.7f}, {:.7f}, {:.7f}, {:.7f}, {:.7f})", got[0], got[1],
                     got[2], got[3], got[4]));
  return c.result();
}

// 2. Pareto front vs all-pairs oracle.
Result ParetoOracle() {
  Checker c;
  std::mt19937_64 rng(20240601);
  std::size_t with_inf = 0, with_dup = 0;
  for (int inst = 0; inst < 1000; ++inst) {
    const std::size_t n = 1 + rng() % 200;
    const std::size_t dim = 1 + rng() % 6;
    const int levels = 2 + static_cast<int>(rng() % 8);
    std::uniform_int_distribution<int> level(0, levels);
    std::bernoulli_distribution inf(0.1), dup(0.1);
    std::vector<ScoreVector> v;
    bool has_inf = false, has_dup = false;
    for (std::size_t i = 0; i < n; ++i) {
      if (!v.empty() && dup(rng)) {
        v.push_back(v[rng() % v.size()]);
        has_dup = true;
        continue;
      }
      ScoreVector s(dim);
      for (double& x : s) {
        if (inf(rng)) {
          x = kNotPossessed;
          has_inf = true;
        } else {
          x = level(rng) / static_cast<double>(levels);
        }
      }
      v.push_back(std::move(s));
    }
    with_inf += has_inf;
    with_dup += has_dup;
    const auto got = pareto_front(std::span<const ScoreVector>(v));
    c.Expect(got == OracleFront(v), fmt::format("instance {} differs", inst));
  }
  c.Note(fmt::format("1000 instances, {} with +inf, {} with duplicates", with_inf,
                     with_dup));
  return c.result();
}

// 3. Objective properties on random teams.
Result ObjectiveProperties() {
  Checker c;
  constexpr double kTol = 1e-9;
  std::mt19937_64 rng(31337);
  std::uniform_real_distribution<double> scale(0.1, 10.0);
  int teams = 0;
  while (teams < 1000) {
    const auto pool = testing::RandomPool(rng, 16, 12, 4);
    const Project p = testing::RandomProject(rng, 12, 1, 6);
    const auto members = testing::RandomMembers(rng, pool, 1 + rng() % 7);
    const Team team(members);
    if (coverage(team, p) == 0) continue;
    ++teams;
    const ObjectiveVector v = objective_vector(team, p);

    const double lambda = scale(rng);
    std::vector<Candidate> scaled, swapped;
    for (const Candidate* m : members) {
      CostProfile sp;
      for (const auto& [s, x] : m->cost_profile()) sp.emplace(s, x * lambda);
      scaled.emplace_back(m->id(), m->attribute(), std::move(sp));
      swapped.emplace_back(m->id(), Other(m->attribute()), m->cost_profile());
    }
    std::vector<const Candidate*> sm, wm;
    for (std::size_t i = 0; i < members.size(); ++i) {
      sm.push_back(&scaled[i]);
      wm.push_back(&swapped[i]);
    }
    const ObjectiveVector vs = objective_vector(Team(sm), p);
    const ObjectiveVector vw = objective_vector(Team(wm), p);

    c.Expect(std::abs(vs.cost - lambda * v.cost) <= kTol, "scale: cost");
    c.Expect(std::abs(vs.workload - lambda * v.workload) <= kTol, "scale: workload");
    c.Expect(std::abs(vs.expertise - lambda * v.expertise) <= kTol, "scale: expertise");
    c.Expect(std::abs(vs.representation - v.representation) <= kTol,
             "scale: representation");
    c.Expect(std::abs(vs.cost_difference - v.cost_difference) <= kTol,
             "scale: cost difference");

    c.Expect(std::abs(vw.representation - v.representation) <= kTol,
             "swap: representation");
    c.Expect(std::abs(vw.cost_difference - v.cost_difference) <= kTol,
             "swap: cost difference");

    const double ca0 = cost_attribute(team, p, AttributeClass::kZero);
    const double ca1 = cost_attribute(team, p, AttributeClass::kOne);
    c.Expect(ca0 + ca1 == team_cost(team, p), "CA additivity");

    double max_load = 0.0;
    for (const MemberLoad& l : member_loads(team, p)) max_load = std::max(max_load, l.load);
    const auto totals = requirement_totals(team, p);
    const double max_total = *std::max_element(totals.begin(), totals.end());
    c.Expect(v.representation >= 0.0 && v.representation <= 1.0, "bounds: representation");
    c.Expect(v.cost_difference >= 0.0 && v.cost_difference <= 1.0,
             "bounds: cost difference");
    c.Expect(v.workload <= max_load + kTol, "bounds: workload");
    c.Expect(v.expertise <= max_total + kTol, "bounds: expertise");
  }
  c.Note("1000 teams: scale, class swap, CA additivity, bounds");
  return c.result();
}

void CheckDiagnostics(Checker& c, const Diagnostics& d, Method method,
                      std::size_t num_teams) {
  c.Expect(d.pareto_candidates <= d.filtered_candidates, "pareto <= filtered");
  c.Expect(d.filtered_candidates <= d.pool_size, "filtered <= pool");
  c.Expect(d.pareto_teams <= d.covering_teams, "front <= covered");
  if (method == Method::kMultiObjective && !d.sampling_fallback) {
    c.Expect(d.sampled_teams == num_teams, "sampled == N");
  }
  c.Expect(d.covering_teams <= d.sampled_teams, "covered <= sampled");
  c.Expect(d.CandidateReduction() >= 0.0 && d.CandidateReduction() <= 1.0,
           "candidate reduction in [0,1]");
  c.Expect(d.TeamReduction() >= 0.0 && d.TeamReduction() <= 1.0,
           "team reduction in [0,1]");
}

// 4. Top-X optimality by exhaustive re-scan.
Result SelectionOptimality() {
  Checker c;
  constexpr std::size_t kM = 4, kN = 500;
  std::size_t formed = 0;
  for (std::uint64_t pair = 0; pair < 100; ++pair) {
    SynthesisSpec ps;
    ps.pool_size = 40;
    ps.skill_universe = 12;
    ps.max_skills = 4;
    ps.cost_lo = 1.0;
    ps.cost_hi = 50.0;
    ps.seed = 1000 + pair;
    ProjectSynthesisSpec js;
    js.count = 1;
    js.skill_universe = 12;
    js.min_requirements = 2;
    js.max_requirements = 4;
    js.seed = 1000 + pair;
    const auto pool = synthesize_pool(ps);
    const Project project = synthesize_projects(js).front();
    const AssemblyParams base{kM, kN, pair, SelectionMode::kRandom};
    const testing::Rescan scan = testing::RescanSamples(pool, project, base);

    for (SelectionMode mode : kAllSelectionModes) {
      const std::optional<Objective> target = TargetObjective(mode);
      if (!target) continue;
      AssemblyParams params = base;
      params.selection = mode;
      const AssemblyOutcome out = assemble_multi_objective(pool, project, params);
      CheckDiagnostics(c, out.diagnostics, Method::kMultiObjective, kN);
      c.Expect(out.formed() == !scan.covering.empty(),
               fmt::format("pair {}: formed mismatch", pair));
      if (!out.formed() || scan.covering.empty()) continue;
      double best = scan.covering_objectives.front()[*target];
      for (const ObjectiveVector& v : scan.covering_objectives) {
        best = std::min(best, v[*target]);
      }
      c.Expect(std::abs((*out.objectives)[*target] - best) <= 1e-9,
               fmt::format("pair {} {}: {} vs min {}", pair, DisplayName(mode),
                           (*out.objectives)[*target], best));
    }
    formed += scan.covering.empty() ? 0 : 1;
  }
  c.Expect(formed > 0, "no pair formed a team");
  c.Note(fmt::format("100 pairs, {} with covering samples, 5 Top-X modes each", formed));
  return c.result();
}

struct DirectionalRun {
  double proportion;
  RunReport report;
};

std::vector<DirectionalRun> RunDirectional(std::size_t jobs) {
  std::vector<DirectionalRun> runs;
  for (double p : {0.5, 0.1}) {
    SynthesisSpec ps;
    ps.pool_size = 300;
    ps.skill_universe = 40;
    ps.min_skills = 1;
    ps.max_skills = 5;
    ps.cost_lo = 1.0;
    ps.cost_hi = 50.0;
    ps.proportion = p;
    ps.seed = 2023;
    ProjectSynthesisSpec js;
    js.count = 50;
    js.skill_universe = 40;
    js.min_requirements = 2;
    js.max_requirements = 4;
    js.seed = 2023;
    const auto pool = synthesize_pool(ps);
    const auto projects = synthesize_projects(js);
    const auto configs = AllMethodConfigs();
    runs.push_back({p, run_benchmark(pool, projects, configs, {4, 1000, 2023, jobs})});
  }
  return runs;
}

const ReportRow& Row(const RunReport& r, MethodConfig config) {
  return *std::find_if(r.rows.begin(), r.rows.end(),
                       [&](const ReportRow& row) { return row.config == config; });
}

// 5. Qualitative orderings.
Result Directional(const std::vector<DirectionalRun>& runs) {
  Checker c;
  std::string notes;
  for (const DirectionalRun& run : runs) {
    const RunReport& r = run.report;
    const std::string tag = run.proportion == 0.5 ? "50/50" : "10/90";
    const auto multi = [](SelectionMode m) { return MethodConfig{Method::kMultiObjective, m}; };
    const ReportRow& random = Row(r, multi(SelectionMode::kRandom));
    c.Expect(random.formed > 0, tag + ": Random formed no team");

    // (a)
    for (SelectionMode mode : kAllSelectionModes) {
      const auto target = TargetObjective(mode);
      if (!target) continue;
      const auto k = static_cast<std::size_t>(*target);
      const ReportRow& top = Row(r, multi(mode));
      c.Expect(top.objectives[k].mean <= random.objectives[k].mean,
               fmt::format("{} (a): {} {} > Random {}", tag, DisplayName(mode),
                           top.objectives[k].mean, random.objectives[k].mean));
    }
    // (b)
    const ReportRow& inc = Row(r, {Method::kIncremental});
    c.Expect(inc.objectives[0].mean <= random.objectives[0].mean,
             fmt::format("{} (b): Incremental cost {} > Random {}", tag,
                         inc.objectives[0].mean, random.objectives[0].mean));
    // (c)
    const ReportRow& fair = Row(r, {Method::kFairAllocation});
    c.Expect(fair.objectives[3].mean <= inc.objectives[3].mean,
             fmt::format("{} (c): Fair Allocation representation {} > Incremental {}",
                         tag, fair.objectives[3].mean, inc.objectives[3].mean));
    // (d)
    const ReportRow& top_sum = Row(r, multi(SelectionMode::kTopSum));
    for (std::size_t k : {std::size_t{3}, std::size_t{4}}) {
      bool some_worse = false;
      for (SelectionMode mode : kAllSelectionModes) {
        if (mode == SelectionMode::kTopSum) continue;
        some_worse = some_worse || Row(r, multi(mode)).objectives[k].mean >
                                       top_sum.objectives[k].mean;
      }
      c.Expect(some_worse, fmt::format("{} (d): Top-Sum is the worst on {}", tag,
                                       ToString(kAllObjectives[k])));
    }
    if (!notes.empty()) notes += " | ";
    notes += fmt::format("{}: Inc cost {:.3f} <= Rand {:.3f}; Fair rep {:.3f} <= Inc {:.3f}",
                         tag, inc.objectives[0].mean, random.objectives[0].mean,
                         fair.objectives[3].mean, inc.objectives[3].mean);
  }
  c.Note(notes);
  return c.result();
}

// 6. Diagnostics chain, and the observed reductions.
Result Reductions(const std::vector<DirectionalRun>& runs) {
  Checker c;
  std::string notes;
  for (const DirectionalRun& run : runs) {
    double cand = 0.0, team = 0.0;
    std::size_t n = 0;
    for (const OutcomeRecord& o : run.report.log) {
      CheckDiagnostics(c, o.diagnostics, o.config.method, 1000);
      c.Expect(!o.formed || o.members.size() >= 1, "formed outcome without members");
      if (o.config.method == Method::kMultiObjective && o.formed) {
        cand += o.diagnostics.CandidateReduction();
        team += o.diagnostics.TeamReduction();
        ++n;
      }
    }
    if (n > 0) {
      notes += fmt::format("p={}: candidates -{:.1f}%, teams -{:.1f}%; ", run.proportion,
                           100.0 * cand / n, 100.0 * team / n);
    }
  }
  c.Note(notes + "(reported, not asserted)");
  return c.result();
}

// 7. Determinism across runs and worker counts.
Result Determinism(const std::vector<DirectionalRun>& reference) {
  Checker c;
  for (std::size_t jobs : {std::size_t{1}, std::size_t{4}}) {
    const auto runs = RunDirectional(jobs);
    for (std::size_t i = 0; i < runs.size(); ++i) {
      for (ReportFormat f : {ReportFormat::kCsv, ReportFormat::kTable}) {
        c.Expect(emit_report(runs[i].report, f) == emit_report(reference[i].report, f),
                 fmt::format("report differs with jobs={}", jobs));
      }
      c.Expect(emit_log(runs[i].report) == emit_log(reference[i].report),
               fmt::format("outcome log differs with jobs={}", jobs));
    }
  }
  c.Note("reports and logs byte-identical for jobs 1, 2, 4");
  return c.result();
}

}  // namespace

int main() {
  using Clock = std::chrono::steady_clock;
  int failures = 0;
  auto report = [&](int id, const char* name, const std::function<Result()>& fn) {
    const auto start = Clock::now();
    const Result r = fn();
    const double secs = std::chrono::duration<double>(Clock::now() - start).count();
    fmt::print("[{}] {}. {} ({:.2f}s): {}\n", r.pass ? "PASS" : "FAIL", id, name, secs,
               r.detail);
    std::fflush(stdout);
    failures += r.pass ? 0 : 1;
  };

  report(1, "Worked-example fidelity", WorkedExample);
  report(2, "Pareto oracle equivalence", ParetoOracle);
  report(3, "Objective property suite", ObjectiveProperties);
  report(4, "Selection optimality", SelectionOptimality);

  std::vector<DirectionalRun> runs;
  report(5, "Directional reproduction", [&] {
    runs = RunDirectional(2);
    return Directional(runs);
  });
  report(6, "Reduction diagnostics", [&] { return Reductions(runs); });
  report(7, "Determinism", [&] { return Determinism(runs); });

  fmt::print("{} of 7 criteria passed\n", 7 - failures);
  return failures == 0 ? 0 : 1;
}

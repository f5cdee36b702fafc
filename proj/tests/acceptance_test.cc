// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Acceptance suite. Prints one PASS/FAIL line per criterion.
//
//   acceptance_test [--only N]... [--expect-fail N,M]
//
// Exit status is 0 when every failing criterion is listed in --expect-fail.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "drsub/algorithms.h"
#include "drsub/harness.h"
#include "drsub/objectives.h"
#include "drsub/properties.h"
#include "drsub/reduction.h"

namespace drsub {
namespace {

// Tolerances and limits.
constexpr double kRatioSlack = 1e-12;
constexpr double kPlusRatio = 0.15;
constexpr double kBandFactor = 4.0;
constexpr double kLemmaTolerance = 1e-9;
constexpr std::int64_t kLemmaSamples = 10000;
constexpr int kRatioInstances = 200;
constexpr int kTrimTraces = 1000;
constexpr int kReducedItemSets = 10000;
constexpr double kSeconds1 = 60.0;
constexpr double kSeconds2 = 300.0;
constexpr double kSeconds3 = 600.0;
constexpr double kSeconds5 = 60.0;
constexpr double kSeconds8 = 600.0;
constexpr std::size_t kFacebookNodes = 4039;
constexpr std::size_t kFacebookEdges = 88234;

using Clock = std::chrono::steady_clock;

double Since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string Fmt(const char* fmt, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), fmt, args...);
  return buf;
}

// Every (fastdrsub, fastdrsubplus) objective pair produced anywhere in the
// run, for criterion 4.
struct DominanceLog {
  std::int64_t pairs = 0;
  std::int64_t violations = 0;
  std::string first;
  void Add(const std::string& where, double base, double plus) {
    ++pairs;
    if (plus < base) {
      if (violations++ == 0) {
        first = Fmt("%s: plus %.17g < base %.17g", where.c_str(), plus, base);
      }
    }
  }
};
DominanceLog g_dominance;

struct MicroInstance {
  ProblemInstance instance;
  SyntheticConcaveQuadratic synth;
};

// Seeded suite of n in {2..5}, k in {2..8}, B = k.
std::vector<MicroInstance> RatioSuite() {
  std::vector<MicroInstance> out;
  for (int i = 0; i < kRatioInstances; ++i) {
    const std::size_t n = 2 + i % 4;
    const Units k = 2 + (i / 4) % 7;
    ProblemInstance inst(n, k);
    out.push_back({inst, RandomSyntheticInstance(inst, n + 1, 1000 + i)});
  }
  return out;
}

Outcome Criterion1() {
  const auto start = Clock::now();
  const double bound = 1.0 / (17.0 + 4.0 * std::sqrt(2.0));
  int violations = 0;
  double worst = 1e300;
  for (const auto& m : RatioSuite()) {
    SyntheticOracle f(m.synth);
    const double opt = BruteForceOpt(f, m.instance).opt_value;
    const FastDrSubOutput out = FastDrSub(f, m.instance, kDefaultAlpha);
    if (!m.instance.IsFeasible(out.z) || out.value < bound * opt - kRatioSlack) {
      ++violations;
    }
    if (opt > 0) worst = std::min(worst, out.value / opt);
  }
  const double secs = Since(start);
  return {violations == 0 && secs < kSeconds1,
          Fmt("%d instances, %d violations, worst f/opt %.4f vs bound %.4f, "
              "%.2fs (limit %.0fs)",
              kRatioInstances, violations, worst, bound, secs, kSeconds1)};
}

Outcome Criterion2() {
  const auto start = Clock::now();
  int violations = 0;
  double worst = 1e300;
  int i = 0;
  for (const auto& m : RatioSuite()) {
    SyntheticOracle f(m.synth);
    const double opt = BruteForceOpt(f, m.instance).opt_value;
    FastDrSubPlusOptions options;
    options.alpha = kDefaultAlpha;
    options.epsilon = 0.1;
    const FastDrSubPlusOutput out = FastDrSubPlus(f, m.instance, options);
    if (!m.instance.IsFeasible(out.s) || out.value < kPlusRatio * opt - kRatioSlack) {
      ++violations;
    }
    if (opt > 0) worst = std::min(worst, out.value / opt);
    g_dominance.Add(Fmt("ratio suite #%d", i++), out.seed.value, out.value);
  }
  const double secs = Since(start);
  return {violations == 0 && secs < kSeconds2,
          Fmt("%d instances, %d violations, worst f/opt %.4f vs %.2f, "
              "%.2fs (limit %.0fs)",
              kRatioInstances, violations, worst, kPlusRatio, secs, kSeconds2)};
}

Outcome Criterion3() {
  const auto start = Clock::now();
  const std::size_t n = 1000;
  const double eps = 0.1;
  std::vector<double> base_ratio, plus_ratio;
  std::string table;
  for (Units k : {16, 32, 64, 128, 256, 512, 1024}) {
    ProblemInstance inst(n, k);
    const auto synth = RandomSyntheticInstance(inst, n, 7);
    SyntheticOracle f(synth);
    CountingOracle c1(f), c2(f);
    const FastDrSubOutput a = FastDrSub(c1, inst, kDefaultAlpha);
    FastDrSubPlusOptions options;
    options.epsilon = eps;
    const FastDrSubPlusOutput b = FastDrSubPlus(c2, inst, options);
    const double logk = std::ceil(std::log2(double(k) + 1.0));
    base_ratio.push_back(double(a.query_count) / (double(n) * logk));
    plus_ratio.push_back(double(b.query_count) /
                         ((double(n) / eps) * std::log(4.0 / eps) * logk));
    table += Fmt(" k=%lld:%.3f/%.3f", static_cast<long long>(k),
                 base_ratio.back(), plus_ratio.back());
    g_dominance.Add(Fmt("query sweep k=%lld", static_cast<long long>(k)), a.value,
                    b.value);
  }
  auto spread = [](const std::vector<double>& v) {
    return *std::max_element(v.begin(), v.end()) / *std::min_element(v.begin(), v.end());
  };
  const double s1 = spread(base_ratio), s2 = spread(plus_ratio);
  const double secs = Since(start);
  return {s1 <= kBandFactor && s2 <= kBandFactor && secs < kSeconds3,
          Fmt("band fastdrsub %.2fx, fastdrsubplus %.2fx (limit %.0fx), %.2fs;",
              s1, s2, kBandFactor, secs) +
              table};
}

Outcome Criterion4() {
  // Benchmark sweeps on top of the rows already logged by criteria 2 and 3.
  std::vector<RunConfig> configs;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    RunConfig c;
    c.objective = ObjectiveKind::kSynthetic;
    c.n = 200;
    c.seed = seed;
    configs.push_back(c);
    RunConfig r;
    r.objective = ObjectiveKind::kRevenue;
    r.nodes = 40;
    r.edge_probability = 0.1;
    r.seed = seed;
    configs.push_back(r);
  }
  for (const RunConfig& c : configs) {
    Experiment e(c);
    for (Units k : e.Budgets()) {
      const auto a = RunSingle(e, Algorithm::kFastDrSub, k);
      const auto b = RunSingle(e, Algorithm::kFastDrSubPlus, k);
      g_dominance.Add(e.dataset_name() + Fmt(" seed=%llu k=%lld",
                                             static_cast<unsigned long long>(c.seed),
                                             static_cast<long long>(k)),
                      a.objective, b.objective);
    }
  }
  return {g_dominance.violations == 0,
          Fmt("%lld row pairs, %lld violations", static_cast<long long>(g_dominance.pairs),
              static_cast<long long>(g_dominance.violations)) +
              (g_dominance.first.empty() ? "" : "; first: " + g_dominance.first)};
}

Outcome Criterion5() {
  const auto start = Clock::now();
  std::int64_t syn_bad = 0, rev_bad = 0, syn_samples = 0, rev_samples = 0;
  std::string witness;
  std::uint64_t seed = 0;
  for (std::size_t n : {10, 25, 40}) {
    ProblemInstance inst(n, 12);
    const auto synth = RandomSyntheticInstance(inst, n, 50 + n);
    SyntheticOracle f(synth);
    const auto r = CheckCrossLemmas(f, inst, kLemmaSamples, ++seed, kLemmaTolerance);
    syn_bad += r.disjoint_union.violation_count + r.unit_scaling.violation_count;
    syn_samples += r.disjoint_union.samples_tested + r.unit_scaling.samples_tested;
  }
  std::int64_t rev_l1 = 0, rev_l2 = 0;
  for (std::size_t n : {10, 25, 40}) {
    const RevenueInstance rev =
        BuildRevenueInstance(RandomGraph(n, 0.15, 60 + n), WeightModel::kUniform01,
                             ExponentModel::kUniform01, 60 + n);
    RevenueOracle f(rev);
    ProblemInstance inst(n, 12);
    const auto r = CheckCrossLemmas(f, inst, kLemmaSamples, ++seed, kLemmaTolerance);
    rev_l1 += r.disjoint_union.violation_count;
    rev_l2 += r.unit_scaling.violation_count;
    rev_samples += r.disjoint_union.samples_tested + r.unit_scaling.samples_tested;
    if (witness.empty()) {
      if (!r.unit_scaling.violations.empty()) {
        witness = r.unit_scaling.violations.front().Describe();
      } else if (!r.disjoint_union.violations.empty()) {
        witness = r.disjoint_union.violations.front().Describe();
      }
    }
  }
  rev_bad = rev_l1 + rev_l2;
  const double secs = Since(start);
  return {syn_bad == 0 && rev_bad == 0 && secs < kSeconds5,
          Fmt("synthetic %lld/%lld violations; revenue disjoint-union %lld, unit-scaling %lld "
              "of %lld samples; %.2fs",
              static_cast<long long>(syn_bad), static_cast<long long>(syn_samples),
              static_cast<long long>(rev_l1), static_cast<long long>(rev_l2),
              static_cast<long long>(rev_samples), secs) +
              (witness.empty() ? "" : "; witness " + witness)};
}

Outcome Criterion6() {
  int traces = 0, violations = 0;
  std::uint64_t seed = 0;
  for (; traces < kTrimTraces && seed < 50000; ++seed) {
    const std::size_t n = 10 + seed % 31;
    const Units k = 4 + static_cast<Units>(seed % 37);
    ProblemInstance inst(n, k);
    const auto synth = RandomSyntheticInstance(inst, n, 7000 + seed);
    SyntheticOracle f(synth);
    const FastDrSubOutput out = FastDrSub(f, inst, kDefaultAlpha);
    const Units lower = k - static_cast<Units>(std::floor(kDefaultAlpha * double(k)));
    bool counted = false;
    auto check = [&](Units untrimmed, const LatticeVector& trimmed) {
      if (untrimmed <= k) return;
      counted = true;
      if (trimmed.Norm1() < lower || trimmed.Norm1() > k) ++violations;
    };
    check(out.x_untrimmed_norm, out.x_trimmed.vector);
    check(out.y_untrimmed_norm, out.y_trimmed.vector);
    if (counted) ++traces;
  }
  return {traces >= kTrimTraces && violations == 0,
          Fmt("%d over-budget traces from %llu runs, %d violations", traces,
              static_cast<unsigned long long>(seed), violations)};
}

Outcome Criterion7() {
  int bad_repr = 0, bad_count = 0;
  for (Units b = 1; b <= 64; ++b) {
    const auto w = DecomposeBound(b);
    std::set<Units> sums;
    for (std::uint64_t mask = 0; mask < (1ull << w.size()); ++mask) {
      Units s = 0;
      for (std::size_t i = 0; i < w.size(); ++i) {
        if (mask >> i & 1) s += w[i];
      }
      sums.insert(s);
    }
    for (Units t = 0; t <= b; ++t) bad_repr += sums.count(t) ? 0 : 1;
    if (*sums.rbegin() != b) ++bad_repr;
    const std::size_t floor_log = static_cast<std::size_t>(std::floor(std::log2(double(b))));
    if (w.size() > floor_log + 1) ++bad_count;
    // With B_e <= k, the same count is within 2 log2 k + 1 for every k >= B_e.
    if (double(w.size()) > 2.0 * std::log2(double(b)) + 1.0) ++bad_count;
  }

  ProblemInstance inst(40, {40, 1, 7, 13, 64, 33, 2, 16, 5, 40});
  const auto synth = RandomSyntheticInstance(inst, 12, 77);
  SyntheticOracle f(synth);
  const ReducedInstance reduced = DecomposeBounds(inst);
  std::mt19937_64 rng(77);
  int mismatches = 0;
  for (int i = 0; i < kReducedItemSets; ++i) {
    std::vector<std::size_t> set;
    for (std::size_t j = 0; j < reduced.items.size(); ++j) {
      if (rng() % 4 == 0) set.push_back(j);
    }
    const ReducedValue g = ReducedValueAndCost(f, reduced, set);
    const double direct = f.Evaluate(ComposeItems(reduced, set));
    if (std::memcmp(&g.g_value, &direct, sizeof(double)) != 0) ++mismatches;
  }
  return {bad_repr == 0 && bad_count == 0 && mismatches == 0,
          Fmt("B<=64: %d unrepresentable, %d count-bound breaches; "
              "%d/%d item sets differ from compose",
              bad_repr, bad_count, mismatches, kReducedItemSets)};
}

std::string FacebookPath() {
  if (const char* env = std::getenv("DRSUB_FACEBOOK_EDGES")) return env;
  return std::string(DRSUB_SOURCE_DIR) + "/data/facebook_combined.txt";
}

// Runs fast_dr_sub at k/n = 0.05 on a revenue instance built from `graph`.
std::string TimeRevenueRun(const EdgeList& graph, bool* feasible, double* secs) {
  const RevenueInstance rev = BuildRevenueInstance(graph, WeightModel::kUniform01,
                                                   ExponentModel::kUniform01, 1);
  RevenueOracle f(rev);
  const Units k = static_cast<Units>(std::ceil(0.05 * double(graph.node_count) - 1e-9));
  ProblemInstance inst(graph.node_count, k);
  CountingOracle counted(f);
  const auto start = Clock::now();
  const FastDrSubOutput out = FastDrSub(counted, inst, kDefaultAlpha);
  *secs = Since(start);
  *feasible = inst.IsFeasible(out.z);
  return Fmt("k=%lld f=%.6g queries=%llu %.2fs", static_cast<long long>(k),
             out.value, static_cast<unsigned long long>(out.query_count), *secs);
}

Outcome Criterion8() {
  const std::string path = FacebookPath();
  if (!std::filesystem::exists(path)) {
    // Same-size stand-in, reported for the runtime half only.
    const double p = double(kFacebookEdges) /
                     (double(kFacebookNodes) * double(kFacebookNodes - 1) / 2.0);
    const EdgeList g = RandomGraph(kFacebookNodes, p, 1);
    bool feasible = false;
    double secs = 0.0;
    const std::string run = TimeRevenueRun(g, &feasible, &secs);
    return {false,
            "dataset not found at " + path +
                " (set DRSUB_FACEBOOK_EDGES); stand-in G(4039, p) with " +
                std::to_string(g.edges.size()) + " edges: " + run +
                (feasible ? ", feasible" : ", INFEASIBLE")};
  }
  const SnapGraph snap = ParseSnapEdgeList(path);
  const bool sizes = snap.graph.node_count == kFacebookNodes &&
                     snap.graph.edges.size() == kFacebookEdges;
  bool feasible = false;
  double secs = 0.0;
  const std::string run = TimeRevenueRun(snap.graph, &feasible, &secs);
  return {sizes && feasible && secs < kSeconds8,
          Fmt("parsed %zu nodes, %zu edges (want %zu, %zu); ", snap.graph.node_count,
              snap.graph.edges.size(), kFacebookNodes, kFacebookEdges) +
              run + (feasible ? ", feasible" : ", INFEASIBLE")};
}

Outcome Criterion9() {
  const auto dir = std::filesystem::temp_directory_path();
  std::vector<RunConfig> configs(2);
  configs[0].objective = ObjectiveKind::kSynthetic;
  configs[0].n = 300;
  configs[0].algorithms = {Algorithm::kFastDrSub, Algorithm::kFastDrSubPlus,
                           Algorithm::kDensityGreedy};
  configs[1].objective = ObjectiveKind::kRevenue;
  configs[1].nodes = 60;
  configs[1].seed = 3;
  int differing = 0;
  std::size_t bytes = 0;
  for (std::size_t i = 0; i < configs.size(); ++i) {
    RunConfig c = configs[i];
    c.timing = false;
    std::string contents[2];
    for (int run = 0; run < 2; ++run) {
      c.output_path = (dir / Fmt("drsub_acceptance_%zu_%d.csv", i, run)).string();
      Experiment e(c);
      std::ostringstream diag;
      RunSweep(e, diag);
      std::ifstream in(c.output_path, std::ios::binary);
      std::stringstream ss;
      ss << in.rdbuf();
      contents[run] = ss.str();
    }
    bytes += contents[0].size();
    if (contents[0] != contents[1] || contents[0].empty()) ++differing;
  }
  return {differing == 0,
          Fmt("%zu sweep configs run twice, %d differ (%zu bytes compared)",
              configs.size(), differing, bytes)};
}

std::set<int> ParseList(const std::string& s) {
  std::set<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(std::stoi(item));
  }
  return out;
}

}  // namespace
}  // namespace drsub

int main(int argc, char** argv) {
  using namespace drsub;
  CLI::App app{"acceptance criteria"};
  std::vector<int> only;
  std::string expect_fail;
  app.add_option("--only", only, "run only these criteria");
  app.add_option("--expect-fail", expect_fail, "comma-separated known failures");
  CLI11_PARSE(app, argc, argv);
  const std::set<int> expected = ParseList(expect_fail);

  const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, Criterion1}, {2, Criterion2}, {3, Criterion3},
      {4, Criterion4}, {5, Criterion5}, {6, Criterion6},
      {7, Criterion7}, {8, Criterion8}, {9, Criterion9}};

  std::set<int> failed;
  for (const auto& [id, run] : criteria) {
    if (!only.empty() && std::find(only.begin(), only.end(), id) == only.end()) {
      continue;
    }
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.pass) failed.insert(id);
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << id << ": "
              << o.detail << std::endl;
  }

  bool unexpected = false;
  for (int id : failed) {
    if (!expected.count(id)) unexpected = true;
  }
  std::cout << "summary: " << failed.size() << " failing";
  if (!failed.empty()) {
    std::cout << " (";
    bool first = true;
    for (int id : failed) {
      std::cout << (first ? "" : ",") << id << (expected.count(id) ? " known" : "");
      first = false;
    }
    std::cout << ")";
  }
  std::cout << std::endl;
  return unexpected ? 1 : 0;
}

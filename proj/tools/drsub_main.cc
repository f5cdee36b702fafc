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

// drsub: command-line driver.
//
//   drsub run    --config c.txt [--algorithm fastdrsub] [--k 20]
//   drsub sweep  --config c.txt [--out results.csv]
//   drsub check  --config c.txt [--samples 10000] [--tolerance 1e-9]
//   drsub exact  --config c.txt [--force-exact]
//   drsub reduce --config c.txt

#include <chrono>
#include <cmath>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "drsub/harness.h"
#include "drsub/reduction.h"

namespace {

struct Overrides {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::int64_t> samples;
  std::optional<double> tolerance;
  bool force_exact = false;
};

drsub::RunConfig LoadConfig(const Overrides& o) {
  drsub::RunConfig c = drsub::LoadRunConfig(o.config_path);
  if (o.seed) c.seed = *o.seed;
  if (o.out) c.output_path = *o.out;
  if (o.samples) c.samples = *o.samples;
  if (o.tolerance) c.tolerance = *o.tolerance;
  if (o.force_exact) c.force_exact = true;
  c.Validate();
  return c;
}

void AddCommonFlags(CLI::App* cmd, Overrides& o) {
  cmd->add_option("--config", o.config_path, "key = value run configuration")
      ->required();
  cmd->add_option("--seed", o.seed, "override the config seed");
  cmd->add_option("--out", o.out, "CSV output path");
  cmd->add_option("--samples", o.samples, "samples per property check");
  cmd->add_option("--tolerance", o.tolerance, "relative check tolerance");
  cmd->add_flag("--force-exact", o.force_exact,
                "lift the exhaustive-enumeration size guard");
}

int RunCommand(const Overrides& o, const std::optional<std::string>& algorithm,
               std::optional<drsub::Units> k) {
  drsub::Experiment experiment(LoadConfig(o));
  const drsub::Algorithm a = algorithm ? drsub::ParseAlgorithm(*algorithm)
                                       : experiment.config().algorithms.front();
  const drsub::Units budget = k ? *k : experiment.Budgets().front();
  const drsub::AlgorithmReport r = drsub::RunSingle(experiment, a, budget);
  if (!r.error.empty()) {
    std::cerr << "error: " << r.error << '\n';
    return 1;
  }
  std::cout << drsub::kCsvHeader << '\n' << drsub::CsvRow(r) << '\n';
  std::cerr << "solution " << r.solution << '\n';
  return 0;
}

int SweepCommand(const Overrides& o) {
  drsub::Experiment experiment(LoadConfig(o));
  const auto reports = drsub::RunSweep(experiment, std::cerr);
  std::cerr << reports.size() << " rows written to "
            << experiment.config().output_path << '\n';
  return 0;
}

int ExactCommand(const Overrides& o) {
  drsub::Experiment experiment(LoadConfig(o));
  for (drsub::Units k : experiment.Budgets()) {
    const auto objective = experiment.At(k);
    const drsub::ExactResult r = drsub::BruteForceOpt(
        *objective.oracle, objective.instance, experiment.config().force_exact);
    std::cout << "k=" << k << " opt=" << r.opt_value << " argmax="
              << r.argmax_vector << " states=" << r.states_enumerated << '\n';
  }
  return 0;
}

int ReduceCommand(const Overrides& o) {
  drsub::Experiment experiment(LoadConfig(o));
  std::cout << "n,k,items,max_items_per_element,item_bound,decompose_us\n";
  for (drsub::Units k : experiment.Budgets()) {
    const auto objective = experiment.At(k);
    const auto start = std::chrono::steady_clock::now();
    const drsub::ReducedInstance reduced =
        drsub::DecomposeBounds(objective.instance);
    const auto stop = std::chrono::steady_clock::now();
    std::size_t widest = 0;
    for (std::size_t e = 0; e + 1 < reduced.first_item.size(); ++e) {
      widest = std::max(widest, reduced.first_item[e + 1] - reduced.first_item[e]);
    }
    const double n = static_cast<double>(objective.instance.n());
    const double bound = n * (2.0 * std::log2(static_cast<double>(k)) + 1.0);
    std::cout << objective.instance.n() << ',' << k << ','
              << reduced.items.size() << ',' << widest << ',' << bound << ','
              << std::chrono::duration_cast<std::chrono::microseconds>(stop - start)
                     .count()
              << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DR-submodular maximization over the integer lattice"};
  app.require_subcommand(1);

  Overrides run_o, sweep_o, check_o, exact_o, reduce_o;
  std::optional<std::string> algorithm;
  std::optional<drsub::Units> k;

  auto* run = app.add_subcommand("run", "run one algorithm at one budget");
  AddCommonFlags(run, run_o);
  run->add_option("--algorithm", algorithm,
                  "fastdrsub | fastdrsubplus | density_greedy | brute_force");
  run->add_option("--k", k, "budget (default: first configured budget)");

  auto* sweep = app.add_subcommand("sweep", "algorithms x budgets to CSV");
  AddCommonFlags(sweep, sweep_o);
  auto* check = app.add_subcommand("check", "sampled structural property checks");
  AddCommonFlags(check, check_o);
  auto* exact = app.add_subcommand("exact", "exhaustive optimum on small instances");
  AddCommonFlags(exact, exact_o);
  auto* reduce = app.add_subcommand("reduce", "reduced-instance statistics");
  AddCommonFlags(reduce, reduce_o);

  CLI11_PARSE(app, argc, argv);

  try {
    if (run->parsed()) return RunCommand(run_o, algorithm, k);
    if (sweep->parsed()) return SweepCommand(sweep_o);
    if (check->parsed()) {
      drsub::Experiment experiment(LoadConfig(check_o));
      return drsub::CheckCommand(experiment, std::cout);
    }
    if (exact->parsed()) return ExactCommand(exact_o);
    if (reduce->parsed()) return ReduceCommand(reduce_o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}

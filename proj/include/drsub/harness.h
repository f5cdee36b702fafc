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

// Experiment harness: SNAP ingestion, run configuration, single runs,
// sweeps to CSV and the property-check driver.

#ifndef DRSUB_HARNESS_H_
#define DRSUB_HARNESS_H_

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "drsub/lattice.h"
#include "drsub/objectives.h"
#include "drsub/oracle.h"

namespace drsub {

struct SnapGraph {
  EdgeList graph;
  std::vector<std::string> labels;  // dense index -> original label
};

// '#' lines are comments and blank lines are ignored. Every other line holds
// exactly two whitespace-separated labels. Self-loops are dropped, repeated
// undirected edges kept once, labels indexed in first-appearance order.
// Throws std::runtime_error on unreadable files, malformed lines (with the
// line number) and files without edges ("no edges").
SnapGraph ParseSnapEdgeList(const std::string& path);
SnapGraph ParseSnapEdgeList(std::istream& in);

enum class Algorithm { kFastDrSub, kFastDrSubPlus, kDensityGreedy, kBruteForce };

Algorithm ParseAlgorithm(const std::string& name);
std::string ToString(Algorithm a);

enum class ObjectiveKind { kRevenue, kSynthetic, kSquared };

struct RunConfig {
  std::string name;  // dataset column in the CSV; derived when empty
  ObjectiveKind objective = ObjectiveKind::kSynthetic;
  // Revenue objective: SNAP file, or a seeded G(nodes, edge_probability)
  // when no path is given.
  std::string dataset_path;
  std::size_t nodes = 40;
  double edge_probability = 0.1;
  // Synthetic and squared objectives.
  std::size_t n = 100;
  std::size_t terms = 0;  // 0 -> n terms

  std::vector<double> k_fractions = {0.05, 0.10, 0.15, 0.20, 0.25};
  std::vector<Units> k_values;  // overrides k_fractions when non-empty
  double alpha;
  double epsilon;
  std::uint64_t seed = 1;
  WeightModel weight_model = WeightModel::kUniform01;
  ExponentModel exponent_model = ExponentModel::kUniform01;
  std::vector<Algorithm> algorithms = {Algorithm::kFastDrSub,
                                       Algorithm::kFastDrSubPlus};
  std::string output_path = "results.csv";
  std::int64_t samples = 10000;
  double tolerance = 1e-9;
  bool force_exact = false;
  // When false, wall_time_ms is written as 0 so reruns are byte-identical.
  bool timing = true;

  RunConfig();

  // Throws std::invalid_argument when a field is out of range.
  void Validate() const;
};

// Flat "key = value" text, '#' comments. Unknown keys are an error.
RunConfig ParseRunConfig(std::istream& in);
RunConfig LoadRunConfig(const std::string& path);

// The objective of a config at a given budget: owns its data and oracle.
class Experiment {
 public:
  explicit Experiment(RunConfig config);
  ~Experiment();

  const RunConfig& config() const { return config_; }
  std::size_t ground_set_size() const;
  std::string dataset_name() const;

  // k for each fraction (ceil(fraction * n)) or the explicit k_values.
  std::vector<Units> Budgets() const;

  struct Objective {
    ProblemInstance instance;
    const ValueOracle* oracle;  // owned by the Experiment
  };
  // Instances are built lazily and cached per budget.
  Objective At(Units k);

 private:
  struct State;
  RunConfig config_;
  std::unique_ptr<State> state_;
};

struct AlgorithmReport {
  std::string algorithm;
  std::string dataset;
  std::size_t n = 0;
  Units k = 0;
  double alpha = 0.0;
  double epsilon = 0.0;
  std::uint64_t seed = 0;
  double objective = 0.0;
  std::uint64_t queries = 0;
  std::int64_t wall_time_ms = 0;

  LatticeVector solution;
  std::string error;  // non-empty when the cell could not run
};

AlgorithmReport RunSingle(Experiment& experiment, Algorithm algorithm, Units k);

inline constexpr const char* kCsvHeader =
    "algorithm,dataset,n,k,alpha,epsilon,seed,objective,queries,wall_time_ms";

std::string CsvRow(const AlgorithmReport& report);

// Every algorithm x budget cell in that order. The output file is opened
// before the first run; failures to open throw std::runtime_error. Cells
// that report an error are logged to `diagnostics` and left out of the CSV.
std::vector<AlgorithmReport> RunSweep(Experiment& experiment,
                                      std::ostream& diagnostics);

// DR, lattice and the two cross-lemma checks on the objective at the first
// budget. Prints summaries and witnesses; returns 0 iff nothing violated.
int CheckCommand(Experiment& experiment, std::ostream& out);

}  // namespace drsub

#endif  // DRSUB_HARNESS_H_

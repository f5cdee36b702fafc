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

#include "drsub/harness.h"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "drsub/algorithms.h"
#include "drsub/properties.h"
#include "drsub/reduction.h"

namespace drsub {

SnapGraph ParseSnapEdgeList(std::istream& in) {
  SnapGraph out;
  std::unordered_map<std::string, Element> index;
  std::set<std::pair<Element, Element>> seen;
  auto intern = [&](const std::string& label) {
    auto [it, inserted] =
        index.emplace(label, static_cast<Element>(out.labels.size()));
    if (inserted) out.labels.push_back(label);
    return it->second;
  };

  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line[0] == '#') continue;
    std::istringstream tokens(line);
    std::vector<std::string> fields;
    for (std::string t; tokens >> t;) fields.push_back(t);
    if (fields.empty()) continue;
    if (fields.size() != 2) {
      throw std::runtime_error("malformed edge at line " +
                               std::to_string(line_number) + ": expected 2 "
                               "labels, got " + std::to_string(fields.size()));
    }
    if (fields[0] == fields[1]) continue;
    const Element u = intern(fields[0]);
    const Element v = intern(fields[1]);
    if (seen.insert(std::minmax(u, v)).second) out.graph.edges.emplace_back(u, v);
  }
  if (out.graph.edges.empty()) throw std::runtime_error("no edges");
  out.graph.node_count = out.labels.size();
  return out;
}

SnapGraph ParseSnapEdgeList(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read edge list: " + path);
  return ParseSnapEdgeList(in);
}

Algorithm ParseAlgorithm(const std::string& name) {
  if (name == "fastdrsub") return Algorithm::kFastDrSub;
  if (name == "fastdrsubplus") return Algorithm::kFastDrSubPlus;
  if (name == "density_greedy") return Algorithm::kDensityGreedy;
  if (name == "brute_force") return Algorithm::kBruteForce;
  throw std::invalid_argument("unknown algorithm: " + name);
}

std::string ToString(Algorithm a) {
  switch (a) {
    case Algorithm::kFastDrSub:
      return "fastdrsub";
    case Algorithm::kFastDrSubPlus:
      return "fastdrsubplus";
    case Algorithm::kDensityGreedy:
      return "density_greedy";
    case Algorithm::kBruteForce:
      return "brute_force";
  }
  return "unknown";
}

RunConfig::RunConfig() : alpha(kDefaultAlpha), epsilon(kDefaultEpsilon) {}

void RunConfig::Validate() const {
  for (double f : k_fractions) {
    if (!(f > 0.0 && f <= 1.0)) {
      throw std::invalid_argument("k fraction outside (0, 1]");
    }
  }
  for (Units k : k_values) {
    if (k < 0) throw std::invalid_argument("negative k");
  }
  if (k_fractions.empty() && k_values.empty()) {
    throw std::invalid_argument("no budgets configured");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha outside (0, 1)");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw std::invalid_argument("epsilon outside (0, 1)");
  }
  if (algorithms.empty()) throw std::invalid_argument("no algorithms");
  if (samples < 0) throw std::invalid_argument("negative sample count");
}

namespace {

std::string Trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> SplitList(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, ',');) {
    item = Trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

bool ParseBool(const std::string& s) {
  if (s == "true" || s == "1" || s == "yes") return true;
  if (s == "false" || s == "0" || s == "no") return false;
  throw std::invalid_argument("expected a boolean, got " + s);
}

ObjectiveKind ParseObjective(const std::string& s) {
  if (s == "revenue") return ObjectiveKind::kRevenue;
  if (s == "synthetic") return ObjectiveKind::kSynthetic;
  if (s == "squared") return ObjectiveKind::kSquared;
  throw std::invalid_argument("unknown objective: " + s);
}

}  // namespace

RunConfig ParseRunConfig(std::istream& in) {
  RunConfig c;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = Trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": expected key = value");
    }
    const std::string key = Trim(line.substr(0, eq));
    const std::string value = Trim(line.substr(eq + 1));
    if (key == "name") {
      c.name = value;
    } else if (key == "objective") {
      c.objective = ParseObjective(value);
    } else if (key == "dataset") {
      c.dataset_path = value;
    } else if (key == "nodes") {
      c.nodes = std::stoul(value);
    } else if (key == "edge_probability") {
      c.edge_probability = std::stod(value);
    } else if (key == "n") {
      c.n = std::stoul(value);
    } else if (key == "terms") {
      c.terms = std::stoul(value);
    } else if (key == "k_fractions") {
      c.k_fractions.clear();
      for (const auto& f : SplitList(value)) c.k_fractions.push_back(std::stod(f));
    } else if (key == "k_values") {
      c.k_values.clear();
      for (const auto& k : SplitList(value)) c.k_values.push_back(std::stoll(k));
    } else if (key == "alpha") {
      c.alpha = std::stod(value);
    } else if (key == "epsilon") {
      c.epsilon = std::stod(value);
    } else if (key == "seed") {
      c.seed = std::stoull(value);
    } else if (key == "weight_model") {
      c.weight_model = ParseWeightModel(value);
    } else if (key == "exponent_model") {
      c.exponent_model = ParseExponentModel(value);
    } else if (key == "algorithms") {
      c.algorithms.clear();
      for (const auto& a : SplitList(value)) c.algorithms.push_back(ParseAlgorithm(a));
    } else if (key == "output") {
      c.output_path = value;
    } else if (key == "samples") {
      c.samples = std::stoll(value);
    } else if (key == "tolerance") {
      c.tolerance = std::stod(value);
    } else if (key == "force_exact") {
      c.force_exact = ParseBool(value);
    } else if (key == "timing") {
      c.timing = ParseBool(value);
    } else {
      throw std::invalid_argument("config line " + std::to_string(line_number) +
                                  ": unknown key '" + key + "'");
    }
  }
  c.Validate();
  return c;
}

RunConfig LoadRunConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config: " + path);
  return ParseRunConfig(in);
}

struct Experiment::State {
  std::optional<RevenueInstance> revenue;
  std::map<Units, SyntheticConcaveQuadratic> synthetic;
  std::map<Units, std::unique_ptr<ValueOracle>> oracles;
  std::unique_ptr<ValueOracle> shared_oracle;
};

Experiment::Experiment(RunConfig config)
    : config_(std::move(config)), state_(std::make_unique<State>()) {
  config_.Validate();
  switch (config_.objective) {
    case ObjectiveKind::kRevenue: {
      EdgeList graph = config_.dataset_path.empty()
                           ? RandomGraph(config_.nodes, config_.edge_probability,
                                         config_.seed)
                           : ParseSnapEdgeList(config_.dataset_path).graph;
      state_->revenue = BuildRevenueInstance(graph, config_.weight_model,
                                             config_.exponent_model, config_.seed);
      state_->shared_oracle = std::make_unique<RevenueOracle>(*state_->revenue);
      break;
    }
    case ObjectiveKind::kSquared:
      state_->shared_oracle = std::make_unique<SquaredNormOracle>();
      break;
    case ObjectiveKind::kSynthetic:
      break;
  }
}

Experiment::~Experiment() = default;

std::size_t Experiment::ground_set_size() const {
  if (state_->revenue) return state_->revenue->node_count;
  return config_.n;
}

std::string Experiment::dataset_name() const {
  if (!config_.name.empty()) return config_.name;
  switch (config_.objective) {
    case ObjectiveKind::kRevenue:
      if (!config_.dataset_path.empty()) {
        return std::filesystem::path(config_.dataset_path).stem().string();
      }
      return "gnp" + std::to_string(config_.nodes);
    case ObjectiveKind::kSynthetic:
      return "synthetic" + std::to_string(config_.n);
    case ObjectiveKind::kSquared:
      return "squared" + std::to_string(config_.n);
  }
  return "unknown";
}

std::vector<Units> Experiment::Budgets() const {
  if (!config_.k_values.empty()) return config_.k_values;
  std::vector<Units> out;
  const double n = static_cast<double>(ground_set_size());
  for (double f : config_.k_fractions) {
    // The small slack keeps products like 0.05 * 4039 from rounding up
    // past an exact integer.
    out.push_back(std::max<Units>(1, static_cast<Units>(std::ceil(f * n - 1e-9))));
  }
  return out;
}

Experiment::Objective Experiment::At(Units k) {
  ProblemInstance instance(ground_set_size(), k);
  if (state_->shared_oracle) return {instance, state_->shared_oracle.get()};
  auto it = state_->oracles.find(k);
  if (it == state_->oracles.end()) {
    const std::size_t terms = config_.terms == 0 ? config_.n : config_.terms;
    auto [sit, _] = state_->synthetic.emplace(
        k, RandomSyntheticInstance(instance, terms, config_.seed));
    it = state_->oracles
             .emplace(k, std::make_unique<SyntheticOracle>(sit->second))
             .first;
  }
  return {instance, it->second.get()};
}

AlgorithmReport RunSingle(Experiment& experiment, Algorithm algorithm, Units k) {
  const RunConfig& config = experiment.config();
  AlgorithmReport report;
  report.algorithm = ToString(algorithm);
  report.dataset = experiment.dataset_name();
  report.n = experiment.ground_set_size();
  report.k = k;
  report.alpha = config.alpha;
  report.epsilon = config.epsilon;
  report.seed = config.seed;

  const Experiment::Objective objective = experiment.At(k);
  CountingOracle counted(*objective.oracle);
  const auto start = std::chrono::steady_clock::now();
  try {
    switch (algorithm) {
      case Algorithm::kFastDrSub:
        report.solution = FastDrSub(counted, objective.instance, config.alpha).z;
        break;
      case Algorithm::kFastDrSubPlus: {
        FastDrSubPlusOptions options;
        options.alpha = config.alpha;
        options.epsilon = config.epsilon;
        report.solution = FastDrSubPlus(counted, objective.instance, options).s;
        break;
      }
      case Algorithm::kDensityGreedy:
        report.solution = DensityGreedyReduced(
            counted, DecomposeBounds(objective.instance));
        break;
      case Algorithm::kBruteForce:
        report.solution =
            BruteForceOpt(counted, objective.instance, config.force_exact)
                .argmax_vector;
        break;
    }
  } catch (const std::exception& e) {
    report.error = e.what();
    return report;
  }
  const auto stop = std::chrono::steady_clock::now();
  report.queries = counted.query_count();
  if (config.timing) {
    report.wall_time_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start)
            .count();
  }
  if (!objective.instance.IsFeasible(report.solution)) {
    throw std::logic_error(report.algorithm + " returned an infeasible vector");
  }
  // Audit evaluation on the bare oracle; it is not part of the query count.
  report.objective = objective.oracle->Evaluate(report.solution);
  return report;
}

std::string CsvRow(const AlgorithmReport& r) {
  char buf[512];
  std::snprintf(buf, sizeof(buf), "%s,%s,%zu,%lld,%.9g,%.9g,%llu,%.9g,%llu,%lld",
                r.algorithm.c_str(), r.dataset.c_str(), r.n,
                static_cast<long long>(r.k), r.alpha, r.epsilon,
                static_cast<unsigned long long>(r.seed), r.objective,
                static_cast<unsigned long long>(r.queries),
                static_cast<long long>(r.wall_time_ms));
  return buf;
}

std::vector<AlgorithmReport> RunSweep(Experiment& experiment,
                                      std::ostream& diagnostics) {
  const RunConfig& config = experiment.config();
  std::ofstream out(config.output_path, std::ios::trunc);
  if (!out) {
    throw std::runtime_error("cannot write output: " + config.output_path);
  }
  out << kCsvHeader << '\n';
  std::vector<AlgorithmReport> reports;
  for (Algorithm algorithm : config.algorithms) {
    for (Units k : experiment.Budgets()) {
      AlgorithmReport r = RunSingle(experiment, algorithm, k);
      if (!r.error.empty()) {
        diagnostics << "skipped " << r.algorithm << " k=" << k << ": "
                    << r.error << '\n';
        continue;
      }
      diagnostics << CsvRow(r) << '\n';
      out << CsvRow(r) << '\n';
      reports.push_back(std::move(r));
    }
  }
  if (!out) throw std::runtime_error("write failed: " + config.output_path);
  return reports;
}

int CheckCommand(Experiment& experiment, std::ostream& out) {
  const RunConfig& config = experiment.config();
  const Units k = experiment.Budgets().front();
  const Experiment::Objective objective = experiment.At(k);
  const ValueOracle& f = *objective.oracle;

  std::vector<PropertyReport> reports;
  reports.push_back(CheckDrSubmodularity(f, objective.instance, config.samples,
                                         config.seed, config.tolerance));
  reports.push_back(CheckLatticeSubmodularity(
      f, objective.instance, config.samples, config.seed + 1, config.tolerance));
  CrossLemmaReport lemmas = CheckCrossLemmas(
      f, objective.instance, config.samples, config.seed + 2, config.tolerance);
  reports.push_back(std::move(lemmas.disjoint_union));
  reports.push_back(std::move(lemmas.unit_scaling));

  out << "objective " << experiment.dataset_name() << " n="
      << objective.instance.n() << " k=" << k << '\n';
  bool ok = true;
  for (const auto& r : reports) {
    out << r.Summary() << '\n';
    for (const auto& v : r.violations) out << "  witness " << v.Describe() << '\n';
    ok = ok && r.ok();
  }
  return ok ? 0 : 1;
}

}  // namespace drsub

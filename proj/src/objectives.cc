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

#include "drsub/objectives.h"

#include <algorithm>
#include <cmath>
#include <random>
#include <set>
#include <stdexcept>

namespace drsub {

EdgeList RandomGraph(std::size_t n, double p, std::uint64_t seed) {
  EdgeList g;
  g.node_count = n;
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  for (Element u = 0; u < n; ++u) {
    for (Element v = u + 1; v < n; ++v) {
      if (coin(rng)) g.edges.emplace_back(u, v);
    }
  }
  return g;
}

WeightModel ParseWeightModel(const std::string& name) {
  if (name == "uniform01") return WeightModel::kUniform01;
  if (name == "inverse_degree") return WeightModel::kInverseDegree;
  throw std::invalid_argument("unknown weight model: " + name);
}

ExponentModel ParseExponentModel(const std::string& name) {
  if (name == "uniform01") return ExponentModel::kUniform01;
  if (name == "fixed" || name == "fixed0.5" || name == "fixed(0.5)") {
    return ExponentModel::kFixedHalf;
  }
  throw std::invalid_argument("unknown exponent model: " + name);
}

std::string ToString(WeightModel m) {
  return m == WeightModel::kUniform01 ? "uniform01" : "inverse_degree";
}

std::string ToString(ExponentModel m) {
  return m == ExponentModel::kUniform01 ? "uniform01" : "fixed(0.5)";
}

RevenueInstance MakeRevenueInstance(
    std::size_t node_count,
    const std::vector<RevenueInstance::WeightedEdge>& edges,
    std::vector<double> exponents) {
  if (node_count == 0 || edges.empty()) {
    throw std::invalid_argument("revenue instance needs nodes and edges");
  }
  if (exponents.size() != node_count) {
    throw std::invalid_argument("one exponent per node required");
  }
  for (double a : exponents) {
    if (!(a > 0.0 && a < 1.0)) {
      throw std::invalid_argument("exponent outside (0, 1)");
    }
  }
  RevenueInstance inst;
  inst.node_count = node_count;
  inst.exponents = std::move(exponents);
  inst.adjacency.resize(node_count);
  std::set<std::pair<Element, Element>> seen;
  for (const auto& edge : edges) {
    if (edge.u >= node_count || edge.v >= node_count) {
      throw std::invalid_argument("edge endpoint out of range");
    }
    if (edge.u == edge.v) throw std::invalid_argument("self-loop");
    if (!(edge.weight >= 0.0 && edge.weight <= 1.0)) {
      throw std::invalid_argument("edge weight outside [0, 1]");
    }
    const auto key = std::minmax(edge.u, edge.v);
    if (!seen.insert(key).second) {
      throw std::invalid_argument("duplicate edge");
    }
    inst.edges.push_back(edge);
    inst.adjacency[edge.u].push_back({edge.v, edge.weight});
    inst.adjacency[edge.v].push_back({edge.u, edge.weight});
  }
  return inst;
}

RevenueInstance BuildRevenueInstance(const EdgeList& graph,
                                     WeightModel weight_model,
                                     ExponentModel exponent_model,
                                     std::uint64_t seed) {
  if (graph.node_count == 0 || graph.edges.empty()) {
    throw std::invalid_argument("empty graph");
  }
  std::vector<std::size_t> degree(graph.node_count, 0);
  for (const auto& [u, v] : graph.edges) {
    if (u >= graph.node_count || v >= graph.node_count) {
      throw std::invalid_argument("malformed node index");
    }
    ++degree[u];
    ++degree[v];
  }

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);

  std::vector<RevenueInstance::WeightedEdge> edges;
  edges.reserve(graph.edges.size());
  for (const auto& [u, v] : graph.edges) {
    double w = 0.0;
    if (weight_model == WeightModel::kUniform01) {
      w = unit(rng);
    } else {
      w = 1.0 / static_cast<double>(std::max(degree[u], degree[v]));
    }
    edges.push_back({u, v, w});
  }

  std::vector<double> exponents(graph.node_count, 0.5);
  if (exponent_model == ExponentModel::kUniform01) {
    for (double& a : exponents) {
      do {
        a = unit(rng);
      } while (a <= 0.0);
    }
  }
  return MakeRevenueInstance(graph.node_count, edges, std::move(exponents));
}

double RevenueEvaluate(const RevenueInstance& inst, const LatticeVector& x) {
  // Per-thread scratch: influence totals indexed by node, plus the list of
  // nodes touched by this call so the reset is proportional to the work.
  thread_local std::vector<double> influence;
  thread_local std::vector<Element> touched;
  if (influence.size() < inst.node_count) influence.assign(inst.node_count, 0.0);
  touched.clear();

  for (const auto& [v, count] : x) {
    const double units = static_cast<double>(count);
    for (const auto& nb : inst.adjacency[v]) {
      if (x.Contains(nb.node)) continue;
      if (influence[nb.node] == 0.0) touched.push_back(nb.node);
      influence[nb.node] += nb.weight * units;
      // A zero-weight edge leaves the node untouched; a later positive
      // contribution then registers it.
    }
  }

  double total = 0.0;
  for (Element u : touched) {
    const double t = influence[u];
    total += std::log1p(std::pow(t, inst.exponents[u]));
    influence[u] = 0.0;
  }
  return total;
}

void SyntheticConcaveQuadratic::Finalize() {
  incidence.assign(n, {});
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (!(terms[j].cap > 0.0)) throw std::invalid_argument("cap must be > 0");
    for (const auto& [e, w] : terms[j].weights) {
      if (e >= n) throw std::invalid_argument("term element out of range");
      if (w < 0.0) throw std::invalid_argument("negative term weight");
      incidence[e].emplace_back(j, w);
    }
  }
}

SyntheticConcaveQuadratic RandomSyntheticInstance(
    const ProblemInstance& instance, std::size_t num_terms,
    std::uint64_t seed) {
  SyntheticConcaveQuadratic inst;
  inst.n = instance.n();
  if (inst.n == 0) throw std::invalid_argument("empty ground set");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> weight(0.0, 1.0);
  const std::size_t max_support = std::min<std::size_t>(3, inst.n);
  std::uniform_int_distribution<std::size_t> support(1, max_support);
  std::uniform_int_distribution<Element> pick(0, static_cast<Element>(inst.n - 1));

  for (std::size_t j = 0; j < num_terms; ++j) {
    SyntheticConcaveQuadratic::Term term;
    const std::size_t size = support(rng);
    std::vector<Element> chosen;
    while (chosen.size() < size) {
      const Element e = pick(rng);
      if (std::find(chosen.begin(), chosen.end(), e) == chosen.end()) {
        chosen.push_back(e);
      }
    }
    std::sort(chosen.begin(), chosen.end());
    double box_max = 0.0;
    for (Element e : chosen) {
      const double w = 1.0 - weight(rng);  // (0, 1]
      term.weights.emplace_back(e, w);
      box_max += w * static_cast<double>(instance.bound(e));
    }
    term.cap = box_max;
    inst.terms.push_back(std::move(term));
  }
  inst.Finalize();
  return inst;
}

double SyntheticEvaluate(const SyntheticConcaveQuadratic& inst,
                         const LatticeVector& x) {
  thread_local std::vector<double> load;
  thread_local std::vector<std::size_t> touched;
  if (load.size() < inst.terms.size()) load.assign(inst.terms.size(), 0.0);
  touched.clear();

  for (const auto& [e, count] : x) {
    const double units = static_cast<double>(count);
    for (const auto& [j, w] : inst.incidence[e]) {
      if (w == 0.0) continue;
      if (load[j] == 0.0) touched.push_back(j);
      load[j] += w * units;
    }
  }
  double total = 0.0;
  for (std::size_t j : touched) {
    const double t = load[j];
    const double cap = inst.terms[j].cap;
    total += t * (cap - t) / cap;
    load[j] = 0.0;
  }
  return total;
}

double SquaredNormOracle::Evaluate(const LatticeVector& x) const {
  double total = 0.0;
  for (const auto& [e, count] : x) {
    total += static_cast<double>(count) * static_cast<double>(count);
  }
  return total;
}

}  // namespace drsub

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

// Concrete objectives: revenue maximization on a weighted social graph and a
// synthetic family of concave quadratics that is DR-submodular by
// construction.

#ifndef DRSUB_OBJECTIVES_H_
#define DRSUB_OBJECTIVES_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "drsub/lattice.h"
#include "drsub/oracle.h"

namespace drsub {

// Simple undirected graph over nodes 0..node_count-1.
struct EdgeList {
  std::size_t node_count = 0;
  std::vector<std::pair<Element, Element>> edges;
};

// Erdos-Renyi G(n, p), seeded. Used for small revenue instances.
EdgeList RandomGraph(std::size_t n, double p, std::uint64_t seed);

enum class WeightModel { kUniform01, kInverseDegree };
enum class ExponentModel { kUniform01, kFixedHalf };

WeightModel ParseWeightModel(const std::string& name);
ExponentModel ParseExponentModel(const std::string& name);
std::string ToString(WeightModel m);
std::string ToString(ExponentModel m);

struct RevenueInstance {
  struct Neighbor {
    Element node;
    double weight;
  };
  struct WeightedEdge {
    Element u;
    Element v;
    double weight;
  };

  std::size_t node_count = 0;
  std::vector<WeightedEdge> edges;
  std::vector<double> exponents;                 // alpha_u in (0, 1)
  std::vector<std::vector<Neighbor>> adjacency;  // both directions

  friend bool operator==(const RevenueInstance& a, const RevenueInstance& b);
};

inline bool operator==(const RevenueInstance::Neighbor& a,
                       const RevenueInstance::Neighbor& b) {
  return a.node == b.node && a.weight == b.weight;
}
inline bool operator==(const RevenueInstance::WeightedEdge& a,
                       const RevenueInstance::WeightedEdge& b) {
  return a.u == b.u && a.v == b.v && a.weight == b.weight;
}
inline bool operator==(const RevenueInstance& a, const RevenueInstance& b) {
  return a.node_count == b.node_count && a.edges == b.edges &&
         a.exponents == b.exponents && a.adjacency == b.adjacency;
}

// Assigns edge weights and per-node exponents. Deterministic in `seed`.
// uniform01 weights are drawn per edge in [0, 1]; inverse_degree sets
// w_uv = 1 / max(deg u, deg v). Exponents are uniform in the open interval
// (0, 1) or fixed at 0.5. Self-loops and repeated edges are rejected.
// Throws std::invalid_argument on an empty graph or bad node indices.
RevenueInstance BuildRevenueInstance(const EdgeList& graph,
                                     WeightModel weight_model,
                                     ExponentModel exponent_model,
                                     std::uint64_t seed);

// Builds an instance from explicit weights and exponents.
RevenueInstance MakeRevenueInstance(
    std::size_t node_count,
    const std::vector<RevenueInstance::WeightedEdge>& edges,
    std::vector<double> exponents);

// f(x) = sum over u outside supp(x) of log(1 + t_u^alpha_u), where
// t_u = sum over v in supp(x) of w_uv x(v). Natural log. Only nodes
// adjacent to the support are touched.
double RevenueEvaluate(const RevenueInstance& inst, const LatticeVector& x);

class RevenueOracle : public ValueOracle {
 public:
  explicit RevenueOracle(const RevenueInstance& inst) : inst_(&inst) {}
  double Evaluate(const LatticeVector& x) const override {
    return RevenueEvaluate(*inst_, x);
  }
  std::string Name() const override { return "revenue"; }

 private:
  const RevenueInstance* inst_;
};

// f(x) = sum_j t_j (C_j - t_j) / C_j with t_j = <w_j, x>, w_j >= 0.
// Concave in x along non-negative directions, hence DR-submodular; it is
// non-negative wherever t_j <= C_j.
struct SyntheticConcaveQuadratic {
  struct Term {
    std::vector<std::pair<Element, double>> weights;
    double cap = 1.0;
  };

  std::size_t n = 0;
  std::vector<Term> terms;
  // element -> (term index, weight), built by Finalize().
  std::vector<std::vector<std::pair<std::size_t, double>>> incidence;

  void Finalize();
};

// Random family member over n elements with bounds from `instance`: each
// term touches 1..3 distinct elements with weights in (0, 1]; its cap is
// the largest t_j reachable in the box 0 <= x <= B, so f >= 0 on the box
// and single-element terms turn back down inside the feasible region.
SyntheticConcaveQuadratic RandomSyntheticInstance(
    const ProblemInstance& instance, std::size_t num_terms,
    std::uint64_t seed);

double SyntheticEvaluate(const SyntheticConcaveQuadratic& inst,
                         const LatticeVector& x);

class SyntheticOracle : public ValueOracle {
 public:
  explicit SyntheticOracle(const SyntheticConcaveQuadratic& inst)
      : inst_(&inst) {}
  double Evaluate(const LatticeVector& x) const override {
    return SyntheticEvaluate(*inst_, x);
  }
  std::string Name() const override { return "synthetic"; }

 private:
  const SyntheticConcaveQuadratic* inst_;
};

// f(x) = sum_e x(e)^2. Supermodular; a planted negative control for the
// property checkers.
class SquaredNormOracle : public ValueOracle {
 public:
  double Evaluate(const LatticeVector& x) const override;
  std::string Name() const override { return "squared"; }
};

}  // namespace drsub

#endif  // DRSUB_OBJECTIVES_H_

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

// Lattice-to-set reduction, a knapsack greedy baseline on the reduced items,
// and the exhaustive solver used as ground truth on micro-instances.

#ifndef DRSUB_REDUCTION_H_
#define DRSUB_REDUCTION_H_

#include <cstdint>
#include <span>
#include <vector>

#include "drsub/lattice.h"
#include "drsub/oracle.h"

namespace drsub {

// Each coordinate x(e) in [0, B_e] is split into items with weights
// 1, 2, 4, ..., 2^(m-1) and a remainder B_e - (2^m - 1), m = floor(log2(B_e
// + 1)), zero remainder omitted. Every value in [0, B_e] is a subset sum.
// A set S of items maps to g(S) = f(x_S) with x_S(e) the sum of the
// selected weights of e, and costs c(S) = sum of selected weights.
struct ReducedInstance {
  struct Item {
    Element origin;
    std::uint32_t index;  // position within the origin's items
    Units weight;
  };

  std::vector<Item> items;
  Units budget = 0;
  ProblemInstance origin;

  // Items of element e occupy [first_item[e], first_item[e + 1]).
  std::vector<std::size_t> first_item;
};

ReducedInstance DecomposeBounds(const ProblemInstance& instance);

// Binary weights for a single bound.
std::vector<Units> DecomposeBound(Units bound);

// x_S. Throws std::domain_error("over-composed coordinate") if some x_S(e)
// exceeds B_e, std::out_of_range on a bad item index.
LatticeVector ComposeItems(const ReducedInstance& reduced,
                           std::span<const std::size_t> item_set);

struct ReducedValue {
  double g_value = 0.0;
  Units cost = 0;
};

// One oracle query.
ReducedValue ReducedValueAndCost(const ValueOracle& f,
                                 const ReducedInstance& reduced,
                                 std::span<const std::size_t> item_set);

// Lazy marginal-density greedy under c(S) <= k, compared with the best
// single item. Returns the composed lattice vector. A stand-in baseline,
// not a reimplementation of any published knapsack algorithm.
LatticeVector DensityGreedyReduced(const ValueOracle& f,
                                   const ReducedInstance& reduced);

struct ExactResult {
  LatticeVector argmax_vector;
  double opt_value = 0.0;
  std::int64_t states_enumerated = 0;
};

inline constexpr std::size_t kExactMaxElements = 8;
inline constexpr Units kExactMaxBudget = 10;

// Enumerates every feasible x in order of non-decreasing norm, then
// lexicographically by (x(0), x(1), ...); the first maximum wins. Throws
// std::invalid_argument when n > 8 or k > 10 unless `force` is set.
ExactResult BruteForceOpt(const ValueOracle& f, const ProblemInstance& instance,
                          bool force = false);

}  // namespace drsub

#endif  // DRSUB_REDUCTION_H_

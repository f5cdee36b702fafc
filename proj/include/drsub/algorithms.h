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

// Deterministic solvers for maximizing a non-negative DR-submodular f over
// { x in Z_+^E : ||x||_1 <= k, x <= B }.
//
// FastDrSub builds two vectors with disjoint supports in one pass over E,
// each element contributing a single chunk d * 1_e with d <= floor(alpha k)
// chosen by binary search against the dynamic threshold f(current) / k. Both
// vectors are then cut back to their longest suffix of chunks that fits in
// k, and the better of the two is compared against the best "large"
// singleton d * 1_e with floor(alpha k) < d <= k.
//
// FastDrSubPlus uses the FastDrSub value to bracket opt, then runs a
// decreasing threshold schedule from Gamma / (4k) down to
// epsilon Gamma / (16k), growing a free greedy vector z and a pair x, y
// whose supports are kept disjoint.
//
// Ties always go to x over y, then to smaller element ids and smaller d.
// Elements are visited in ascending id order.

#ifndef DRSUB_ALGORITHMS_H_
#define DRSUB_ALGORITHMS_H_

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

#include "drsub/lattice.h"
#include "drsub/oracle.h"

namespace drsub {

// alpha = (2 sqrt 2 - 1) / 7, where the FastDrSub bound peaks at
// 1 / (17 + 4 sqrt 2).
inline const double kDefaultAlpha = (2.0 * std::sqrt(2.0) - 1.0) / 7.0;
inline constexpr double kDefaultEpsilon = 0.1;

// 8 (2 - alpha) / (1 - alpha) + 1 / alpha: FastDrSub is guaranteed
// f(z) >= opt / FastDrSubRatioDenominator(alpha).
double FastDrSubRatioDenominator(double alpha);

struct StepResult {
  Units units = 0;
  // f(base + units * 1_e).
  double value = 0.0;
  // f(1_e | base + (units - 1) 1_e); only meaningful when units > 0.
  double last_marginal = 0.0;
};

// Largest d in [1, cap] with f(1_e | base + (d - 1) 1_e) >= theta, or 0.
// Binary search; sound when the coordinate marginal is non-increasing in d.
// Each probe costs at most two queries and values are reused within one
// search. `base_value`, when given, is taken as f(base) without a query.
// Throws std::invalid_argument on negative cap.
StepResult LargestFeasibleStep(const ValueOracle& f, const LatticeVector& base,
                               std::optional<double> base_value, Element e,
                               Units cap, double theta);

struct SingletonChoice {
  std::optional<Element> element;  // empty when no B_e exceeds floor(alpha k)
  Units units = 0;
  double value = 0.0;

  LatticeVector Vector() const {
    return element ? LatticeVector::Unit(*element, units) : LatticeVector();
  }
};

// argmax of f(d 1_e) over e and floor(alpha k) < d <= min(k, B_e). Uses the
// concavity of d -> f(d 1_e): locate the last d with non-negative marginal
// by binary search, then clamp into the range. f(0) is queried once.
// Throws std::invalid_argument("singleton range empty") if
// floor(alpha k) >= k.
SingletonChoice BestLargeSingleton(const ValueOracle& f,
                                   const ProblemInstance& instance,
                                   double alpha);

// Chunks appended to a vector, in order.
struct AdditionLog {
  struct Chunk {
    Element element;
    Units units;
    double value_after;
  };
  std::vector<Chunk> chunks;

  LatticeVector Replay() const;
  Units TotalUnits() const;
};

// The vector formed by the longest suffix of `log` whose total units fit
// in k. Zero vector when even the last chunk does not fit.
LatticeVector SuffixTrim(const AdditionLog& log, Units k);

struct Candidate {
  LatticeVector vector;
  double value = 0.0;
};

struct FastDrSubOutput {
  LatticeVector z;
  double value = 0.0;
  Candidate x_trimmed;
  Candidate y_trimmed;
  SingletonChoice singleton;
  AdditionLog x_log;
  AdditionLog y_log;
  Units x_untrimmed_norm = 0;
  Units y_untrimmed_norm = 0;
  double zero_value = 0.0;  // f(0)
  // Populated only when the oracle is a CountingOracle.
  std::uint64_t query_count = 0;
};

// Requires 0 < alpha < 1. When floor(alpha k) = 0 the chunk loop can add
// nothing and the singleton search covers every d in [1, k]. k = 0 returns
// the zero vector valued f(0).
FastDrSubOutput FastDrSub(const ValueOracle& f, const ProblemInstance& instance,
                          double alpha = kDefaultAlpha);

struct FastDrSubPlusOptions {
  double alpha = kDefaultAlpha;
  double epsilon = kDefaultEpsilon;
  // Records every accepted chunk and checks x ^ y = 0 after each step.
  bool record_trace = false;
};

struct AcceptedChunk {
  enum class Target { kX, kY, kZ };
  Target target;
  int round;
  Element element;
  Units units;
  double theta;
  // f(1_e | v + (units - 1) 1_e) at acceptance.
  double last_marginal;
};

struct FastDrSubPlusOutput {
  LatticeVector s;
  double value = 0.0;
  FastDrSubOutput seed;  // the FastDrSub run that fixes Gamma
  double gamma = 0.0;
  int rounds = 0;
  Candidate x;
  Candidate y;
  Candidate z;
  std::vector<AcceptedChunk> trace;
  // Element steps after which supp(x) and supp(y) overlapped.
  std::int64_t disjointness_failures = 0;
  std::uint64_t query_count = 0;
};

// Requires 0 < epsilon < 1 and a valid alpha. If FastDrSub returns a zero
// value, Gamma = 0 and the threshold loop is skipped.
FastDrSubPlusOutput FastDrSubPlus(const ValueOracle& f,
                                  const ProblemInstance& instance,
                                  const FastDrSubPlusOptions& options = {});

}  // namespace drsub

#endif  // DRSUB_ALGORITHMS_H_

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

// Sampling checkers for the structural assumptions the solvers rely on:
// DR-submodularity, lattice submodularity, and the two inequalities the
// analysis builds on,
//
//   f(s) <= f(s v x) + f(s v y)          whenever x ^ y = 0,
//   f(t 1_e | x) <= t f(1_e | x)         for integers t >= 0.
//
// Each sampled inequality is put in the form lhs >= rhs. A sample is a
// violation iff lhs < rhs - tolerance * max(1, |lhs|, |rhs|). Witnesses are
// reported verbatim; nothing is suppressed.
//
// Sampling scheme (reproducible from the seed): a vector is drawn by picking
// a support size uniformly in [0, min(n, budget)], a uniform subset of that
// size, then counts one element at a time, each uniform over the values that
// keep the remaining elements feasible. An upper vector y >= x adds a
// uniform number of extra units, each placed on a uniform non-saturated
// element.

#ifndef DRSUB_PROPERTIES_H_
#define DRSUB_PROPERTIES_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "drsub/lattice.h"
#include "drsub/oracle.h"

namespace drsub {

struct Violation {
  std::string property;
  // Witness vectors; their meaning depends on the property (x, y, s).
  std::vector<std::pair<std::string, LatticeVector>> vectors;
  std::optional<Element> element;
  std::optional<Units> units;
  double lhs = 0.0;
  double rhs = 0.0;

  std::string Describe() const;
};

struct PropertyReport {
  std::string property;
  std::int64_t samples_tested = 0;
  std::int64_t violation_count = 0;
  // At most kMaxWitnesses entries; violation_count has the full tally.
  std::vector<Violation> violations;
  double max_violation_magnitude = 0.0;

  static constexpr std::size_t kMaxWitnesses = 64;

  bool ok() const { return violation_count == 0; }
  std::string Summary() const;
};

struct CrossLemmaReport {
  PropertyReport disjoint_union;   // f(s) <= f(s v x) + f(s v y)
  PropertyReport unit_scaling;     // f(t 1_e | x) <= t f(1_e | x)

  bool ok() const { return disjoint_union.ok() && unit_scaling.ok(); }
};

inline constexpr double kDefaultTolerance = 1e-9;

PropertyReport CheckDrSubmodularity(const ValueOracle& f,
                                    const ProblemInstance& instance,
                                    std::int64_t samples, std::uint64_t seed,
                                    double tolerance = kDefaultTolerance);

PropertyReport CheckLatticeSubmodularity(const ValueOracle& f,
                                         const ProblemInstance& instance,
                                         std::int64_t samples,
                                         std::uint64_t seed,
                                         double tolerance = kDefaultTolerance);

CrossLemmaReport CheckCrossLemmas(const ValueOracle& f,
                                  const ProblemInstance& instance,
                                  std::int64_t samples, std::uint64_t seed,
                                  double tolerance = kDefaultTolerance);

// Exposed for tests and for the harness.
class LatticeSampler {
 public:
  LatticeSampler(const ProblemInstance& instance, std::uint64_t seed)
      : instance_(&instance), rng_(seed) {}

  // Random x <= B with ||x||_1 <= budget.
  LatticeVector Sample(Units budget);

  // Random y >= x with y <= B and ||y||_1 <= ||x||_1 + extra_budget.
  LatticeVector Extend(const LatticeVector& x, Units extra_budget);

  // Uniform element with x(e) + 1 <= B_e, if any.
  std::optional<Element> NonSaturated(const LatticeVector& x);

  Units UniformUnits(Units lo, Units hi);

 private:
  const ProblemInstance* instance_;
  std::mt19937_64 rng_;
};

}  // namespace drsub

#endif  // DRSUB_PROPERTIES_H_

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

#include "drsub/oracle.h"

#include <cmath>
#include <cstring>
#include <random>

#include <gtest/gtest.h>

#include "drsub/objectives.h"
#include "drsub/properties.h"
#include "test_util.h"

namespace drsub {
namespace {

using testing::Modular;

TEST(MarginalGainTest, ModularAdditivity) {
  const auto f = Modular({2.0, 2.0});
  CountingOracle counted(f);
  ProblemInstance inst(2, 10);
  EXPECT_DOUBLE_EQ(MarginalGain(counted, {{0, 3}}, {{1, 1}}, inst), 6.0);
  EXPECT_EQ(counted.query_count(), 2u);
}

TEST(MarginalGainTest, ZeroDeltaIsZero) {
  SquaredNormOracle f;
  ProblemInstance inst(3, 10);
  EXPECT_EQ(MarginalGain(f, LatticeVector(), {{0, 2}, {2, 1}}, inst), 0.0);
}

TEST(MarginalGainTest, RevenueTwoNodes) {
  const RevenueInstance inst = MakeRevenueInstance(2, {{0, 1, 1.0}}, {0.5, 0.5});
  RevenueOracle f(inst);
  // ln(1 + 2^0.5), evaluated independently.
  EXPECT_NEAR(MarginalGain(f, {{0, 2}}, LatticeVector(), ProblemInstance(2, 4)),
              0.8813735870195429, 1e-12);
}

TEST(MarginalGainTest, DomainViolation) {
  const auto f = Modular({1.0});
  ProblemInstance inst(1, 3);
  EXPECT_THROW(MarginalGain(f, {{0, 2}}, {{0, 2}}, inst), std::domain_error);
}

TEST(CountingOracleTest, CountsEveryEvaluation) {
  SquaredNormOracle f;
  CountingOracle counted = WithCounting(f);
  EXPECT_EQ(counted.query_count(), 0u);
  counted.Evaluate({{0, 1}});
  counted.Evaluate({{1, 1}});
  counted.Evaluate({{2, 1}});
  EXPECT_EQ(counted.query_count(), 3u);
  counted.Reset();
  counted.Evaluate({{0, 1}});
  counted.Evaluate({{0, 1}});
  EXPECT_EQ(counted.query_count(), 2u);
}

TEST(CountingOracleTest, ValueTransparent) {
  ProblemInstance inst(12, 15);
  const auto synth = RandomSyntheticInstance(inst, 12, 3);
  SyntheticOracle f(synth);
  CountingOracle counted(f);
  LatticeSampler sampler(inst, 5);
  for (int i = 0; i < 500; ++i) {
    const LatticeVector x = sampler.Sample(inst.k());
    const double raw = f.Evaluate(x);
    const double wrapped = counted.Evaluate(x);
    ASSERT_EQ(std::memcmp(&raw, &wrapped, sizeof(double)), 0);
  }
  EXPECT_EQ(counted.query_count(), 500u);
}

TEST(CachingOracleTest, HidesRepeatedQueriesFromOuterCounter) {
  SquaredNormOracle f;
  CountingOracle inner_count(f);
  CachingOracle cached(inner_count);
  EXPECT_EQ(cached.Evaluate({{0, 3}}), 9.0);
  EXPECT_EQ(cached.Evaluate({{0, 3}}), 9.0);
  EXPECT_EQ(inner_count.query_count(), 1u);
  EXPECT_EQ(cached.size(), 1u);
}

}  // namespace
}  // namespace drsub

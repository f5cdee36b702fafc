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

#include <stdexcept>

namespace drsub {

double CachingOracle::Evaluate(const LatticeVector& x) const {
  {
    std::lock_guard<std::mutex> lock(mu_);
    auto it = cache_.find(x.entries());
    if (it != cache_.end()) return it->second;
  }
  const double value = inner_->Evaluate(x);
  std::lock_guard<std::mutex> lock(mu_);
  cache_.emplace(x.entries(), value);
  return value;
}

std::size_t CachingOracle::size() const {
  std::lock_guard<std::mutex> lock(mu_);
  return cache_.size();
}

double MarginalGain(const ValueOracle& f, const LatticeVector& delta,
                    const LatticeVector& base,
                    const ProblemInstance& instance) {
  LatticeVector sum = base;
  for (const auto& [e, count] : delta) sum.Add(e, count);
  if (!instance.WithinBounds(sum)) {
    throw std::domain_error("base + delta exceeds coordinate bounds");
  }
  return f.Evaluate(sum) - f.Evaluate(base);
}

}  // namespace drsub

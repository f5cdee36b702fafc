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

// Value oracles. Every call to Evaluate is one query; algorithms see the
// objective only through this interface so query counts are exact.

#ifndef DRSUB_ORACLE_H_
#define DRSUB_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <map>
#include <mutex>
#include <string>
#include <vector>

#include "drsub/lattice.h"

namespace drsub {

class ValueOracle {
 public:
  virtual ~ValueOracle() = default;

  // f(x). Must be deterministic and safe to call concurrently.
  virtual double Evaluate(const LatticeVector& x) const = 0;

  virtual std::string Name() const { return "oracle"; }
};

// Adapts a callable; mostly for tests and small hand-written objectives.
class FunctionOracle : public ValueOracle {
 public:
  using Fn = std::function<double(const LatticeVector&)>;

  explicit FunctionOracle(Fn fn, std::string name = "function")
      : fn_(std::move(fn)), name_(std::move(name)) {}

  double Evaluate(const LatticeVector& x) const override { return fn_(x); }
  std::string Name() const override { return name_; }

 private:
  Fn fn_;
  std::string name_;
};

// Counts evaluations of the wrapped oracle. Values pass through untouched.
// The inner oracle must outlive the wrapper.
class CountingOracle : public ValueOracle {
 public:
  explicit CountingOracle(const ValueOracle& inner) : inner_(&inner) {}

  double Evaluate(const LatticeVector& x) const override {
    count_.fetch_add(1, std::memory_order_relaxed);
    return inner_->Evaluate(x);
  }

  std::string Name() const override { return inner_->Name(); }

  std::uint64_t query_count() const {
    return count_.load(std::memory_order_relaxed);
  }
  void Reset() { count_.store(0, std::memory_order_relaxed); }

  const ValueOracle& inner() const { return *inner_; }

 private:
  const ValueOracle* inner_;
  mutable std::atomic<std::uint64_t> count_{0};
};

inline CountingOracle WithCounting(const ValueOracle& f) {
  return CountingOracle(f);
}

// Memoizing layer. Not used by any benchmark path: a cache hit hides a
// query from an enclosing CountingOracle.
class CachingOracle : public ValueOracle {
 public:
  explicit CachingOracle(const ValueOracle& inner) : inner_(&inner) {}

  double Evaluate(const LatticeVector& x) const override;
  std::string Name() const override { return inner_->Name(); }

  std::size_t size() const;

 private:
  const ValueOracle* inner_;
  mutable std::mutex mu_;
  mutable std::map<std::vector<LatticeVector::Entry>, double> cache_;
};

// f(delta | base) = f(base + delta) - f(base). Exactly two queries.
// Throws std::domain_error when base + delta exceeds the bounds of
// `instance`.
double MarginalGain(const ValueOracle& f, const LatticeVector& delta,
                    const LatticeVector& base,
                    const ProblemInstance& instance);

}  // namespace drsub

#endif  // DRSUB_ORACLE_H_

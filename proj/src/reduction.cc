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

#include "drsub/reduction.h"

#include <functional>
#include <queue>
#include <stdexcept>
#include <tuple>

namespace drsub {

std::vector<Units> DecomposeBound(Units bound) {
  std::vector<Units> weights;
  Units covered = 0;  // 2^m - 1 after m powers
  for (Units w = 1; covered + w <= bound; w *= 2) {
    weights.push_back(w);
    covered += w;
  }
  if (bound > covered) weights.push_back(bound - covered);
  return weights;
}

ReducedInstance DecomposeBounds(const ProblemInstance& instance) {
  ReducedInstance reduced{{}, instance.k(), instance, {}};
  reduced.first_item.reserve(instance.n() + 1);
  for (Element e = 0; e < instance.n(); ++e) {
    reduced.first_item.push_back(reduced.items.size());
    std::uint32_t index = 0;
    for (Units w : DecomposeBound(instance.bound(e))) {
      reduced.items.push_back({e, index++, w});
    }
  }
  reduced.first_item.push_back(reduced.items.size());
  return reduced;
}

LatticeVector ComposeItems(const ReducedInstance& reduced,
                           std::span<const std::size_t> item_set) {
  LatticeVector x;
  for (std::size_t i : item_set) {
    const auto& item = reduced.items.at(i);
    x.Add(item.origin, item.weight);
    if (x.Get(item.origin) > reduced.origin.bound(item.origin)) {
      throw std::domain_error("over-composed coordinate");
    }
  }
  return x;
}

ReducedValue ReducedValueAndCost(const ValueOracle& f,
                                 const ReducedInstance& reduced,
                                 std::span<const std::size_t> item_set) {
  ReducedValue out;
  const LatticeVector x = ComposeItems(reduced, item_set);
  for (std::size_t i : item_set) out.cost += reduced.items[i].weight;
  out.g_value = f.Evaluate(x);
  return out;
}

LatticeVector DensityGreedyReduced(const ValueOracle& f,
                                   const ReducedInstance& reduced) {
  const Units budget = reduced.budget;
  LatticeVector current;
  double current_value = f.Evaluate(current);

  LatticeVector best_single;
  double best_single_value = current_value;

  // (density, -index, round the density was computed in, f(current + item)).
  using Entry = std::tuple<double, std::int64_t, std::int64_t, double>;
  std::priority_queue<Entry> heap;
  for (std::size_t i = 0; i < reduced.items.size(); ++i) {
    const auto& item = reduced.items[i];
    if (item.weight > budget) continue;
    const LatticeVector single = LatticeVector::Unit(item.origin, item.weight);
    const double value = f.Evaluate(single);
    if (value > best_single_value) {
      best_single_value = value;
      best_single = single;
    }
    heap.emplace((value - current_value) / static_cast<double>(item.weight),
                 -static_cast<std::int64_t>(i), 0, value);
  }

  Units cost = 0;
  std::int64_t round = 0;
  while (!heap.empty()) {
    auto [density, neg_index, computed, value_after] = heap.top();
    heap.pop();
    const auto& item = reduced.items[static_cast<std::size_t>(-neg_index)];
    if (cost + item.weight > budget) continue;
    if (computed != round) {
      const double value =
          f.Evaluate(AddUnits(current, item.origin, item.weight));
      heap.emplace((value - current_value) / static_cast<double>(item.weight),
                   neg_index, round, value);
      continue;
    }
    if (density <= 0.0) break;
    current.Add(item.origin, item.weight);
    current_value = value_after;
    cost += item.weight;
    ++round;
  }

  return best_single_value > current_value ? best_single : current;
}

namespace {

class Enumerator {
 public:
  Enumerator(const ValueOracle& f, const ProblemInstance& instance)
      : f_(f), instance_(instance), dense_(instance.n(), 0) {}

  ExactResult Run() {
    for (Units norm = 0; norm <= instance_.k(); ++norm) {
      Assign(0, norm);
    }
    return std::move(result_);
  }

 private:
  void Assign(std::size_t e, Units remaining) {
    const std::size_t n = dense_.size();
    if (n == 0) {
      if (remaining == 0) Visit();
      return;
    }
    if (e + 1 == n) {
      if (remaining > instance_.bound(static_cast<Element>(e))) return;
      dense_[e] = remaining;
      Visit();
      dense_[e] = 0;
      return;
    }
    const Units hi =
        std::min(remaining, instance_.bound(static_cast<Element>(e)));
    for (Units v = 0; v <= hi; ++v) {
      dense_[e] = v;
      Assign(e + 1, remaining - v);
    }
    dense_[e] = 0;
  }

  void Visit() {
    LatticeVector x;
    for (std::size_t e = 0; e < dense_.size(); ++e) {
      if (dense_[e] > 0) x.Set(static_cast<Element>(e), dense_[e]);
    }
    const double value = f_.Evaluate(x);
    if (result_.states_enumerated == 0 || value > result_.opt_value) {
      result_.opt_value = value;
      result_.argmax_vector = std::move(x);
    }
    ++result_.states_enumerated;
  }

  const ValueOracle& f_;
  const ProblemInstance& instance_;
  std::vector<Units> dense_;
  ExactResult result_;
};

}  // namespace

ExactResult BruteForceOpt(const ValueOracle& f, const ProblemInstance& instance,
                          bool force) {
  if (!force &&
      (instance.n() > kExactMaxElements || instance.k() > kExactMaxBudget)) {
    throw std::invalid_argument(
        "instance exceeds exact enumeration guard (n <= 8, k <= 10)");
  }
  return Enumerator(f, instance).Run();
}

}  // namespace drsub

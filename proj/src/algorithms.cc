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

#include "drsub/algorithms.h"

#include <algorithm>
#include <stdexcept>

namespace drsub {

namespace {

Units FloorAlphaK(double alpha, Units k) {
  return static_cast<Units>(std::floor(alpha * static_cast<double>(k)));
}

void ValidateAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("alpha must lie in (0, 1)");
  }
}

std::uint64_t QueriesSoFar(const ValueOracle& f) {
  if (const auto* counting = dynamic_cast<const CountingOracle*>(&f)) {
    return counting->query_count();
  }
  return 0;
}

// Values of f(base + d 1_e) already seen during one binary search.
class ProbeMemo {
 public:
  ProbeMemo(const ValueOracle& f, const LatticeVector& base, Element e,
            std::optional<double> base_value)
      : f_(f), probe_(base), e_(e), origin_(base.Get(e)) {
    if (base_value) seen_.emplace_back(0, *base_value);
  }

  double At(Units d) {
    for (const auto& [units, value] : seen_) {
      if (units == d) return value;
    }
    probe_.Set(e_, origin_ + d);
    const double value = f_.Evaluate(probe_);
    seen_.emplace_back(d, value);
    return value;
  }

 private:
  const ValueOracle& f_;
  LatticeVector probe_;
  Element e_;
  Units origin_;
  std::vector<std::pair<Units, double>> seen_;
};

SingletonChoice BestLargeSingletonImpl(const ValueOracle& f,
                                       const ProblemInstance& instance,
                                       double alpha, double zero_value) {
  const Units k = instance.k();
  const Units lower = FloorAlphaK(alpha, k);
  SingletonChoice best;
  const LatticeVector zero;
  for (Element e = 0; e < instance.n(); ++e) {
    const Units hi = std::min(k, instance.bound(e));
    if (hi <= lower) continue;
    // Peak of the concave section d -> f(d 1_e): last d with a
    // non-negative marginal.
    const StepResult peak = LargestFeasibleStep(f, zero, zero_value, e, hi, 0.0);
    Units d = peak.units;
    double value = peak.value;
    if (d <= lower) {
      d = lower + 1;
      value = f.Evaluate(LatticeVector::Unit(e, d));
    }
    if (!best.element || value > best.value) {
      best.element = e;
      best.units = d;
      best.value = value;
    }
  }
  return best;
}

}  // namespace

double FastDrSubRatioDenominator(double alpha) {
  return 8.0 * (2.0 - alpha) / (1.0 - alpha) + 1.0 / alpha;
}

StepResult LargestFeasibleStep(const ValueOracle& f, const LatticeVector& base,
                               std::optional<double> base_value, Element e,
                               Units cap, double theta) {
  if (cap < 0) throw std::invalid_argument("negative step cap");
  ProbeMemo memo(f, base, e, base_value);
  // Invariant: every d <= lo passes (d = 0 vacuously), every d > hi fails.
  Units lo = 0;
  Units hi = cap;
  while (lo < hi) {
    const Units mid = lo + (hi - lo + 1) / 2;
    const double marginal = memo.At(mid) - memo.At(mid - 1);
    if (marginal >= theta) {
      lo = mid;
    } else {
      hi = mid - 1;
    }
  }
  StepResult result;
  result.units = lo;
  result.value = memo.At(lo);
  if (lo > 0) result.last_marginal = result.value - memo.At(lo - 1);
  return result;
}

SingletonChoice BestLargeSingleton(const ValueOracle& f,
                                   const ProblemInstance& instance,
                                   double alpha) {
  if (FloorAlphaK(alpha, instance.k()) >= instance.k()) {
    throw std::invalid_argument("singleton range empty");
  }
  return BestLargeSingletonImpl(f, instance, alpha,
                                f.Evaluate(LatticeVector()));
}

LatticeVector AdditionLog::Replay() const {
  LatticeVector x;
  for (const auto& chunk : chunks) x.Add(chunk.element, chunk.units);
  return x;
}

Units AdditionLog::TotalUnits() const {
  Units total = 0;
  for (const auto& chunk : chunks) total += chunk.units;
  return total;
}

LatticeVector SuffixTrim(const AdditionLog& log, Units k) {
  LatticeVector out;
  Units total = 0;
  for (auto it = log.chunks.rbegin(); it != log.chunks.rend(); ++it) {
    if (total + it->units > k) break;
    total += it->units;
    out.Add(it->element, it->units);
  }
  return out;
}

FastDrSubOutput FastDrSub(const ValueOracle& f, const ProblemInstance& instance,
                          double alpha) {
  ValidateAlpha(alpha);
  const std::uint64_t queries_before = QueriesSoFar(f);
  FastDrSubOutput out;
  const Units k = instance.k();

  out.zero_value = f.Evaluate(LatticeVector());
  if (k == 0) {
    out.value = out.zero_value;
    out.x_trimmed.value = out.y_trimmed.value = out.zero_value;
    out.query_count = QueriesSoFar(f) - queries_before;
    return out;
  }

  out.singleton = BestLargeSingletonImpl(f, instance, alpha, out.zero_value);

  const Units chunk_cap = FloorAlphaK(alpha, k);
  const double kd = static_cast<double>(k);
  LatticeVector x, y;
  double fx = out.zero_value;
  double fy = out.zero_value;
  for (Element e = 0; e < instance.n(); ++e) {
    const Units cap = std::min(chunk_cap, instance.bound(e));
    if (cap <= 0) continue;
    const StepResult dx = LargestFeasibleStep(f, x, fx, e, cap, fx / kd);
    const StepResult dy = LargestFeasibleStep(f, y, fy, e, cap, fy / kd);
    if (dx.units == 0 && dy.units == 0) continue;
    if (dx.value - fx >= dy.value - fy) {
      if (dx.units > 0) {
        x.Add(e, dx.units);
        fx = dx.value;
        out.x_log.chunks.push_back({e, dx.units, fx});
      }
    } else {
      y.Add(e, dy.units);
      fy = dy.value;
      out.y_log.chunks.push_back({e, dy.units, fy});
    }
  }
  out.x_untrimmed_norm = x.Norm1();
  out.y_untrimmed_norm = y.Norm1();

  auto trimmed = [&](const AdditionLog& log, const LatticeVector& full,
                     double full_value) {
    Candidate c;
    c.vector = SuffixTrim(log, k);
    if (c.vector.Norm1() == full.Norm1()) {
      c.value = full_value;
    } else if (c.vector.IsZero()) {
      c.value = out.zero_value;
    } else {
      c.value = f.Evaluate(c.vector);
    }
    return c;
  };
  out.x_trimmed = trimmed(out.x_log, x, fx);
  out.y_trimmed = trimmed(out.y_log, y, fy);

  out.z = out.x_trimmed.vector;
  out.value = out.x_trimmed.value;
  if (out.y_trimmed.value > out.value) {
    out.z = out.y_trimmed.vector;
    out.value = out.y_trimmed.value;
  }
  if (out.singleton.element && out.singleton.value > out.value) {
    out.z = out.singleton.Vector();
    out.value = out.singleton.value;
  }
  out.query_count = QueriesSoFar(f) - queries_before;
  return out;
}

FastDrSubPlusOutput FastDrSubPlus(const ValueOracle& f,
                                  const ProblemInstance& instance,
                                  const FastDrSubPlusOptions& options) {
  ValidateAlpha(options.alpha);
  if (!(options.epsilon > 0.0 && options.epsilon < 1.0)) {
    throw std::invalid_argument("epsilon must lie in (0, 1)");
  }
  const std::uint64_t queries_before = QueriesSoFar(f);
  FastDrSubPlusOutput out;
  out.seed = FastDrSub(f, instance, options.alpha);
  out.s = out.seed.z;
  out.value = out.seed.value;
  out.gamma = out.seed.value * FastDrSubRatioDenominator(options.alpha);

  const Units k = instance.k();
  const double zero_value = out.seed.zero_value;
  out.x.value = out.y.value = out.z.value = zero_value;

  if (k > 0 && out.gamma > 0.0) {
    const double kd = static_cast<double>(k);
    const double floor_theta = options.epsilon * out.gamma / (16.0 * kd);
    LatticeVector& x = out.x.vector;
    LatticeVector& y = out.y.vector;
    LatticeVector& z = out.z.vector;
    double& fx = out.x.value;
    double& fy = out.y.value;
    double& fz = out.z.value;

    auto cap_for = [&](const LatticeVector& v, Element e) {
      return std::min(k - v.Norm1(), instance.bound(e) - v.Get(e));
    };
    auto note = [&](AcceptedChunk::Target target, Element e,
                    const StepResult& step, double theta) {
      if (options.record_trace && step.units > 0) {
        out.trace.push_back({target, out.rounds, e, step.units, theta,
                             step.last_marginal});
      }
    };

    for (double theta = out.gamma / (4.0 * kd); theta >= floor_theta;
         theta *= (1.0 - options.epsilon)) {
      for (Element e = 0; e < instance.n(); ++e) {
        const StepResult dx = LargestFeasibleStep(f, x, fx, e, cap_for(x, e), theta);
        const StepResult dy = LargestFeasibleStep(f, y, fy, e, cap_for(y, e), theta);
        const StepResult dz = LargestFeasibleStep(f, z, fz, e, cap_for(z, e), theta);
        if (dz.units > 0) {
          z.Add(e, dz.units);
          fz = dz.value;
          note(AcceptedChunk::Target::kZ, e, dz, theta);
        }

        const Units xe = x.Get(e);
        const Units ye = y.Get(e);
        if (dx.units == 0 && dy.units == 0 && xe == 0 && ye == 0) continue;

        // f((d + v(e)) 1_e | v - v(e) 1_e), reusing f(v + d 1_e) from the
        // search; the stripped vector costs a query only when v(e) > 0.
        LatticeVector x_without = x;
        LatticeVector y_without = y;
        double fx_without = fx;
        double fy_without = fy;
        if (xe > 0) {
          x_without.Erase(e);
          fx_without = f.Evaluate(x_without);
        }
        if (ye > 0) {
          y_without.Erase(e);
          fy_without = f.Evaluate(y_without);
        }
        const double gain_x = dx.value - fx_without;
        const double gain_y = dy.value - fy_without;

        if (gain_x >= gain_y) {
          if (dx.units > 0) {
            x.Add(e, dx.units);
            fx = dx.value;
            note(AcceptedChunk::Target::kX, e, dx, theta);
          }
          if (ye > 0) {
            y = std::move(y_without);
            fy = fy_without;
          }
        } else {
          if (dy.units > 0) {
            y.Add(e, dy.units);
            fy = dy.value;
            note(AcceptedChunk::Target::kY, e, dy, theta);
          }
          if (xe > 0) {
            x = std::move(x_without);
            fx = fx_without;
          }
        }
        if (options.record_trace && !Meet(x, y).IsZero()) {
          ++out.disjointness_failures;
        }
      }
      ++out.rounds;
    }

    for (const Candidate* c : {&out.x, &out.y, &out.z}) {
      if (c->value > out.value) {
        out.s = c->vector;
        out.value = c->value;
      }
    }
  } else if (zero_value > out.value) {
    out.s = LatticeVector();
    out.value = zero_value;
  }
  out.query_count = QueriesSoFar(f) - queries_before;
  return out;
}

}  // namespace drsub

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

#include "drsub/properties.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

namespace drsub {

std::string Violation::Describe() const {
  std::ostringstream os;
  os.precision(17);
  os << property << ":";
  for (const auto& [label, v] : vectors) os << ' ' << label << '=' << v;
  if (element) os << " e=" << *element;
  if (units) os << " t=" << *units;
  os << " lhs=" << lhs << " rhs=" << rhs << " gap=" << (rhs - lhs);
  return os.str();
}

std::string PropertyReport::Summary() const {
  std::ostringstream os;
  os << property << ": " << samples_tested << " samples, " << violation_count
     << " violations";
  if (violation_count > 0) os << " (max gap " << max_violation_magnitude << ")";
  return os.str();
}

Units LatticeSampler::UniformUnits(Units lo, Units hi) {
  return std::uniform_int_distribution<Units>(lo, hi)(rng_);
}

LatticeVector LatticeSampler::Sample(Units budget) {
  LatticeVector x;
  const std::size_t n = instance_->n();
  if (budget <= 0 || n == 0) return x;
  const auto max_support =
      static_cast<Units>(std::min<std::size_t>(n, static_cast<std::size_t>(budget)));
  const auto support = static_cast<std::size_t>(UniformUnits(0, max_support));

  // Partial Fisher-Yates over element ids.
  std::vector<Element> ids(n);
  std::iota(ids.begin(), ids.end(), Element{0});
  for (std::size_t i = 0; i < support; ++i) {
    const auto j = static_cast<std::size_t>(
        UniformUnits(static_cast<Units>(i), static_cast<Units>(n - 1)));
    std::swap(ids[i], ids[j]);
  }

  Units remaining = budget;
  for (std::size_t i = 0; i < support; ++i) {
    const Element e = ids[i];
    const auto still_needed = static_cast<Units>(support - i - 1);
    const Units hi = std::min(instance_->bound(e), remaining - still_needed);
    const Units count = UniformUnits(1, hi);
    x.Set(e, count);
    remaining -= count;
  }
  return x;
}

std::optional<Element> LatticeSampler::NonSaturated(const LatticeVector& x) {
  const std::size_t n = instance_->n();
  if (n == 0) return std::nullopt;
  for (int attempt = 0; attempt < 32; ++attempt) {
    const auto e = static_cast<Element>(UniformUnits(0, static_cast<Units>(n - 1)));
    if (x.Get(e) < instance_->bound(e)) return e;
  }
  std::vector<Element> open;
  for (Element e = 0; e < n; ++e) {
    if (x.Get(e) < instance_->bound(e)) open.push_back(e);
  }
  if (open.empty()) return std::nullopt;
  return open[static_cast<std::size_t>(
      UniformUnits(0, static_cast<Units>(open.size() - 1)))];
}

LatticeVector LatticeSampler::Extend(const LatticeVector& x,
                                     Units extra_budget) {
  LatticeVector y = x;
  if (extra_budget <= 0) return y;
  const Units extra = UniformUnits(0, extra_budget);
  for (Units i = 0; i < extra; ++i) {
    auto e = NonSaturated(y);
    if (!e) break;
    y.Add(*e, 1);
  }
  return y;
}

namespace {

class ReportBuilder {
 public:
  ReportBuilder(std::string property, double tolerance) : tolerance_(tolerance) {
    report_.property = std::move(property);
  }

  // Returns true when the sample violates lhs >= rhs.
  bool Record(double lhs, double rhs, Violation&& witness) {
    ++report_.samples_tested;
    const double scale = std::max({1.0, std::abs(lhs), std::abs(rhs)});
    if (!(lhs < rhs - tolerance_ * scale)) return false;
    ++report_.violation_count;
    report_.max_violation_magnitude =
        std::max(report_.max_violation_magnitude, rhs - lhs);
    if (report_.violations.size() < PropertyReport::kMaxWitnesses) {
      witness.property = report_.property;
      witness.lhs = lhs;
      witness.rhs = rhs;
      report_.violations.push_back(std::move(witness));
    }
    return true;
  }

  PropertyReport Take() { return std::move(report_); }

 private:
  double tolerance_;
  PropertyReport report_;
};

}  // namespace

PropertyReport CheckDrSubmodularity(const ValueOracle& f,
                                    const ProblemInstance& instance,
                                    std::int64_t samples, std::uint64_t seed,
                                    double tolerance) {
  ReportBuilder builder("dr-submodularity", tolerance);
  LatticeSampler sampler(instance, seed);
  const Units k = instance.k();
  if (k < 1 || instance.n() == 0) return builder.Take();
  for (std::int64_t i = 0; i < samples; ++i) {
    const LatticeVector x = sampler.Sample(k - 1);
    const LatticeVector y = sampler.Extend(x, k - 1 - x.Norm1());
    const auto e = sampler.NonSaturated(y);
    if (!e) continue;
    const double lhs = f.Evaluate(AddUnits(x, *e, 1)) - f.Evaluate(x);
    const double rhs = f.Evaluate(AddUnits(y, *e, 1)) - f.Evaluate(y);
    Violation w;
    w.vectors = {{"x", x}, {"y", y}};
    w.element = *e;
    builder.Record(lhs, rhs, std::move(w));
  }
  return builder.Take();
}

PropertyReport CheckLatticeSubmodularity(const ValueOracle& f,
                                         const ProblemInstance& instance,
                                         std::int64_t samples,
                                         std::uint64_t seed,
                                         double tolerance) {
  ReportBuilder builder("lattice-submodularity", tolerance);
  LatticeSampler sampler(instance, seed);
  if (instance.n() == 0) return builder.Take();
  for (std::int64_t i = 0; i < samples; ++i) {
    const LatticeVector x = sampler.Sample(instance.k());
    const LatticeVector y = sampler.Sample(instance.k());
    const double lhs = f.Evaluate(x) + f.Evaluate(y);
    const double rhs = f.Evaluate(Join(x, y)) + f.Evaluate(Meet(x, y));
    Violation w;
    w.vectors = {{"x", x}, {"y", y}};
    builder.Record(lhs, rhs, std::move(w));
  }
  return builder.Take();
}

CrossLemmaReport CheckCrossLemmas(const ValueOracle& f,
                                  const ProblemInstance& instance,
                                  std::int64_t samples, std::uint64_t seed,
                                  double tolerance) {
  ReportBuilder disjoint("disjoint-union-bound", tolerance);
  ReportBuilder scaling("unit-scaling-bound", tolerance);
  LatticeSampler sampler(instance, seed);
  const Units k = instance.k();
  if (instance.n() > 0) {
    for (std::int64_t i = 0; i < samples; ++i) {
      const LatticeVector s = sampler.Sample(k);
      const LatticeVector x = sampler.Sample(k);
      LatticeVector y = sampler.Sample(k);
      for (const auto& entry : x) y.Erase(entry.first);
      const double lhs = f.Evaluate(Join(s, x)) + f.Evaluate(Join(s, y));
      const double rhs = f.Evaluate(s);
      Violation w;
      w.vectors = {{"s", s}, {"x", x}, {"y", y}};
      disjoint.Record(lhs, rhs, std::move(w));
    }
  }
  if (instance.n() > 0 && k >= 1) {
    for (std::int64_t i = 0; i < samples; ++i) {
      const LatticeVector x = sampler.Sample(k - 1);
      const auto e = sampler.NonSaturated(x);
      if (!e) continue;
      const Units t = sampler.UniformUnits(
          0, std::min(instance.bound(*e) - x.Get(*e), k - x.Norm1()));
      const double base = f.Evaluate(x);
      const double one_unit = f.Evaluate(AddUnits(x, *e, 1)) - base;
      const double t_units = f.Evaluate(AddUnits(x, *e, t)) - base;
      Violation w;
      w.vectors = {{"x", x}};
      w.element = *e;
      w.units = t;
      scaling.Record(static_cast<double>(t) * one_unit, t_units, std::move(w));
    }
  }
  return {disjoint.Take(), scaling.Take()};
}

}  // namespace drsub

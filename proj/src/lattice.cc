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

#include "drsub/lattice.h"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace drsub {

namespace {

auto LowerBound(const std::vector<LatticeVector::Entry>& entries, Element e) {
  return std::lower_bound(
      entries.begin(), entries.end(), e,
      [](const LatticeVector::Entry& a, Element id) { return a.first < id; });
}

}  // namespace

LatticeVector::LatticeVector(std::initializer_list<Entry> entries) {
  for (const auto& [e, count] : entries) {
    if (count < 0) throw std::invalid_argument("negative lattice count");
    Add(e, count);
  }
}

LatticeVector LatticeVector::Unit(Element e, Units d) {
  LatticeVector x;
  x.Set(e, d);
  return x;
}

Units LatticeVector::Get(Element e) const {
  auto it = LowerBound(entries_, e);
  return (it != entries_.end() && it->first == e) ? it->second : 0;
}

void LatticeVector::Set(Element e, Units count) {
  if (count < 0) throw std::invalid_argument("negative lattice count");
  auto it = std::lower_bound(
      entries_.begin(), entries_.end(), e,
      [](const Entry& a, Element id) { return a.first < id; });
  const bool present = it != entries_.end() && it->first == e;
  if (present) {
    norm1_ += count - it->second;
    if (count == 0) {
      entries_.erase(it);
    } else {
      it->second = count;
    }
  } else if (count > 0) {
    entries_.insert(it, {e, count});
    norm1_ += count;
  }
  assert(CheckInvariants());
}

void LatticeVector::Add(Element e, Units d) {
  if (d < 0) throw std::invalid_argument("negative unit increment");
  if (d == 0) return;
  Set(e, Get(e) + d);
}

void LatticeVector::Remove(Element e, Units d) {
  const Units current = Get(e);
  if (d < 0 || d > current) {
    throw std::invalid_argument("cannot remove more units than stored");
  }
  Set(e, current - d);
}

bool LatticeVector::LessEq(const LatticeVector& other) const {
  for (const auto& [e, count] : entries_) {
    if (count > other.Get(e)) return false;
  }
  return true;
}

bool LatticeVector::CheckInvariants() const {
  Units sum = 0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].second <= 0) return false;
    if (i > 0 && entries_[i - 1].first >= entries_[i].first) return false;
    sum += entries_[i].second;
  }
  return sum == norm1_;
}

std::string LatticeVector::ToString() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (const auto& [e, count] : entries_) {
    if (!first) os << ", ";
    os << e << ':' << count;
    first = false;
  }
  os << '}';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const LatticeVector& x) {
  return os << x.ToString();
}

LatticeVector Join(const LatticeVector& x, const LatticeVector& y) {
  LatticeVector out = x;
  for (const auto& [e, count] : y) {
    if (count > out.Get(e)) out.Set(e, count);
  }
  return out;
}

LatticeVector Meet(const LatticeVector& x, const LatticeVector& y) {
  LatticeVector out;
  for (const auto& [e, count] : x) {
    const Units m = std::min(count, y.Get(e));
    if (m > 0) out.Set(e, m);
  }
  return out;
}

LatticeVector AddUnits(const LatticeVector& x, Element e, Units d) {
  LatticeVector out = x;
  out.Add(e, d);
  return out;
}

ProblemInstance::ProblemInstance(std::size_t n, Units k)
    : ProblemInstance(k, std::vector<Units>(n, std::max<Units>(k, 1))) {}

ProblemInstance::ProblemInstance(Units k, std::vector<Units> bounds)
    : k_(k), bounds_(std::move(bounds)) {
  if (k_ < 0) throw std::invalid_argument("budget k must be non-negative");
  for (Units b : bounds_) {
    if (b < 1) throw std::invalid_argument("coordinate bound must be >= 1");
  }
}

bool ProblemInstance::WithinBounds(const LatticeVector& x) const {
  for (const auto& [e, count] : x) {
    if (e >= bounds_.size() || count > bounds_[e]) return false;
  }
  return true;
}

bool ProblemInstance::IsFeasible(const LatticeVector& x) const {
  return x.Norm1() <= k_ && WithinBounds(x);
}

}  // namespace drsub

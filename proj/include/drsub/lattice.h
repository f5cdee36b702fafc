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

// Sparse points of the non-negative integer lattice Z_+^E and the
// size-constrained problem instance they are evaluated against.

#ifndef DRSUB_LATTICE_H_
#define DRSUB_LATTICE_H_

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

namespace drsub {

// Dense index into the ground set E = {0, ..., n-1}.
using Element = std::uint32_t;

// Number of units placed on a coordinate (or a sum of such counts).
using Units = std::int64_t;

// A point x of Z_+^E stored as (element, count) pairs sorted by element.
// Absent elements have count 0; a stored count is always >= 1. The L1 norm
// is cached and kept in sync with every mutation.
class LatticeVector {
 public:
  using Entry = std::pair<Element, Units>;

  LatticeVector() = default;
  LatticeVector(std::initializer_list<Entry> entries);

  // d * 1_e.
  static LatticeVector Unit(Element e, Units d = 1);

  // Count stored for e, 0 when absent.
  Units Get(Element e) const;

  // Sets x(e) = count; count 0 erases the entry. count must be >= 0.
  void Set(Element e, Units count);

  // x(e) += d with d >= 0.
  void Add(Element e, Units d);

  // x(e) -= d; throws std::invalid_argument if x(e) < d.
  void Remove(Element e, Units d);

  // x(e) = 0.
  void Erase(Element e) { Set(e, 0); }

  Units Norm1() const { return norm1_; }
  bool IsZero() const { return entries_.empty(); }
  std::size_t SupportSize() const { return entries_.size(); }
  bool Contains(Element e) const { return Get(e) > 0; }

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  // Coordinatewise x <= y.
  bool LessEq(const LatticeVector& other) const;

  // Recomputes the norm and checks the no-zero / sorted invariants.
  bool CheckInvariants() const;

  std::string ToString() const;

  friend bool operator==(const LatticeVector& a, const LatticeVector& b) {
    return a.entries_ == b.entries_;
  }

 private:
  std::vector<Entry> entries_;
  Units norm1_ = 0;
};

std::ostream& operator<<(std::ostream& os, const LatticeVector& x);

// x v y: coordinatewise max.
LatticeVector Join(const LatticeVector& x, const LatticeVector& y);

// x ^ y: coordinatewise min.
LatticeVector Meet(const LatticeVector& x, const LatticeVector& y);

// x + d * 1_e.
LatticeVector AddUnits(const LatticeVector& x, Element e, Units d);

inline Units Norm1(const LatticeVector& x) { return x.Norm1(); }

// Ground set size n, budget k and per-coordinate bounds B. A vector is
// feasible iff ||x||_1 <= k and x(e) <= B_e for every e.
class ProblemInstance {
 public:
  // B = k * 1.
  ProblemInstance(std::size_t n, Units k);
  ProblemInstance(Units k, std::vector<Units> bounds);

  std::size_t n() const { return bounds_.size(); }
  Units k() const { return k_; }
  Units bound(Element e) const { return bounds_[e]; }
  const std::vector<Units>& bounds() const { return bounds_; }

  // x <= B and every element id < n; the size budget is not checked.
  bool WithinBounds(const LatticeVector& x) const;
  bool IsFeasible(const LatticeVector& x) const;

 private:
  Units k_;
  std::vector<Units> bounds_;
};

}  // namespace drsub

#endif  // DRSUB_LATTICE_H_

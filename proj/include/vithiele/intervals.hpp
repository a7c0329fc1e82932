// Copyright 2026 The vithiele Authors
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

#ifndef VITHIELE_INTERVALS_HPP_
#define VITHIELE_INTERVALS_HPP_

#include <compare>
#include <vector>

#include "vithiele/rational.hpp"

namespace vithiele {

// Closed interval of 1-based voter positions. `tag` identifies the candidate
// the interval stands for (-1 for anonymous intervals); tags ride along
// through canonicalization and swaps so selections can be reported as
// concrete candidates.
struct Interval {
  int lo = 1;
  int hi = 1;
  int tag = -1;

  friend auto operator<=>(const Interval&, const Interval&) = default;

  bool contains(int position) const { return lo <= position && position <= hi; }
};

// Families are multisets: duplicates are kept and counted. Union concatenates
// (sizes add), intersection takes per-element minima, difference subtracts
// with clamping. Element identity is (lo, hi, tag).
using IntervalFamily = std::vector<Interval>;

// c_X(position): intervals (with multiplicity) containing `position`.
// Throws InputError when position < 1.
int coverage(const IntervalFamily& family, int position);

// Coverage at every position of 1..n, as counts[position-1]. Throws
// InputError when an interval is inverted or leaves [1, n].
std::vector<int> coverage_counts(const IntervalFamily& family, int n);

IntervalFamily multiset_union(const IntervalFamily& a, const IntervalFamily& b);
IntervalFamily multiset_intersection(IntervalFamily a, IntervalFamily b);
IntervalFamily multiset_difference(IntervalFamily a, IntervalFamily b);
bool multiset_equal(IntervalFamily a, IntervalFamily b);
bool is_sub_multiset(IntervalFamily sub, IntervalFamily super);

// Per-position non-decreasing concave functions f_i, stored as prefix sums of
// non-increasing non-negative increments; f_i(0) = 0 and f_i saturates past
// its last increment.
class PointValuation {
 public:
  // increments[i] is the increment sequence of position i+1. Throws
  // InputError when a sequence is negative or increasing anywhere.
  explicit PointValuation(std::vector<std::vector<Rational>> increments);

  int positions() const { return static_cast<int>(prefix_.size()); }
  int cap(int position) const;

  // f_position(x); requires x >= 0.
  const Rational& value(int position, int x) const;

  // F(X) = sum_i f_i(c_X(i)).
  Rational total(const IntervalFamily& family) const;

  // sum_i f_i(c_X(i) + base[i-1]). Evaluating shared intervals of two
  // families reduces to this shifted form, g_i(x) = f_i(x + c_D(i)).
  Rational total_shifted(const IntervalFamily& family, const std::vector<int>& base) const;

 private:
  std::vector<std::vector<Rational>> prefix_;  // prefix_[i][x] = f_{i+1}(x)
};

}  // namespace vithiele

#endif  // VITHIELE_INTERVALS_HPP_

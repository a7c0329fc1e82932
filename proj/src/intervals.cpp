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

#include "vithiele/intervals.hpp"

#include <algorithm>
#include <utility>

#include "vithiele/errors.hpp"

namespace vithiele {

int coverage(const IntervalFamily& family, int position) {
  if (position < 1) throw InputError("coverage position must be >= 1");
  int count = 0;
  for (const Interval& interval : family) {
    if (interval.contains(position)) ++count;
  }
  return count;
}

std::vector<int> coverage_counts(const IntervalFamily& family, int n) {
  if (n < 0) throw InputError("coverage over a negative range");
  // Difference array over positions 1..n.
  std::vector<int> diff(static_cast<std::size_t>(n) + 2, 0);
  for (const Interval& interval : family) {
    if (interval.lo > interval.hi) throw InputError("inverted interval");
    if (interval.lo < 1 || interval.hi > n) throw InputError("interval out of range");
    diff[interval.lo] += 1;
    diff[interval.hi + 1] -= 1;
  }
  std::vector<int> counts(n);
  int running = 0;
  for (int i = 1; i <= n; ++i) {
    running += diff[i];
    counts[i - 1] = running;
  }
  return counts;
}

IntervalFamily multiset_union(const IntervalFamily& a, const IntervalFamily& b) {
  IntervalFamily result = a;
  result.insert(result.end(), b.begin(), b.end());
  std::sort(result.begin(), result.end());
  return result;
}

IntervalFamily multiset_intersection(IntervalFamily a, IntervalFamily b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  IntervalFamily result;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
  return result;
}

IntervalFamily multiset_difference(IntervalFamily a, IntervalFamily b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  IntervalFamily result;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(result));
  return result;
}

bool multiset_equal(IntervalFamily a, IntervalFamily b) {
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b;
}

bool is_sub_multiset(IntervalFamily sub, IntervalFamily super) {
  std::sort(sub.begin(), sub.end());
  std::sort(super.begin(), super.end());
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

PointValuation::PointValuation(std::vector<std::vector<Rational>> increments) {
  prefix_.reserve(increments.size());
  for (std::vector<Rational>& deltas : increments) {
    std::vector<Rational> sums;
    sums.reserve(deltas.size() + 1);
    sums.emplace_back(0);
    for (std::size_t t = 0; t < deltas.size(); ++t) {
      if (deltas[t] < 0) throw InputError("valuation increment is negative");
      if (t > 0 && deltas[t] > deltas[t - 1]) {
        throw InputError("valuation increments must be non-increasing");
      }
      sums.push_back(sums.back() + deltas[t]);
    }
    prefix_.push_back(std::move(sums));
  }
}

int PointValuation::cap(int position) const {
  internal_check(position >= 1 && position <= positions(), "valuation position in range");
  return static_cast<int>(prefix_[position - 1].size()) - 1;
}

const Rational& PointValuation::value(int position, int x) const {
  internal_check(position >= 1 && position <= positions(), "valuation position in range");
  internal_check(x >= 0, "valuation argument non-negative");
  const std::vector<Rational>& sums = prefix_[position - 1];
  const std::size_t index = std::min<std::size_t>(static_cast<std::size_t>(x), sums.size() - 1);
  return sums[index];
}

Rational PointValuation::total(const IntervalFamily& family) const {
  const std::vector<int> counts = coverage_counts(family, positions());
  Rational sum = 0;
  for (int i = 1; i <= positions(); ++i) sum += value(i, counts[i - 1]);
  return sum;
}

Rational PointValuation::total_shifted(const IntervalFamily& family, const std::vector<int>& base) const {
  internal_check(static_cast<int>(base.size()) == positions(), "shift base sized like positions");
  const std::vector<int> counts = coverage_counts(family, positions());
  Rational sum = 0;
  for (int i = 1; i <= positions(); ++i) sum += value(i, counts[i - 1] + base[i - 1]);
  return sum;
}

}  // namespace vithiele

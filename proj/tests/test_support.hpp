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

#ifndef VITHIELE_TESTS_TEST_SUPPORT_HPP_
#define VITHIELE_TESTS_TEST_SUPPORT_HPP_

#include <algorithm>
#include <initializer_list>
#include <utility>
#include <vector>

#include "vithiele/core.hpp"
#include "vithiele/intervals.hpp"
#include "vithiele/rational.hpp"

namespace vithiele::testsupport {

// Profile over exactly the listed ballots; universe = max id + 1 unless
// forced. Ballot entries are 0-based candidate ids.
inline ApprovalProfile profile_of(std::initializer_list<std::vector<int>> ballots,
                                  int universe = -1) {
  std::vector<std::vector<int>> rows(ballots);
  int max_id = -1;
  for (const auto& row : rows) {
    for (int c : row) max_id = std::max(max_id, c);
  }
  const int m = universe >= 0 ? universe : max_id + 1;
  return ApprovalProfile::from_ballots(static_cast<int>(rows.size()), m, rows);
}

inline IntervalFamily family_of(std::initializer_list<std::pair<int, int>> ranges) {
  IntervalFamily family;
  for (const auto& [lo, hi] : ranges) family.push_back(Interval{lo, hi, -1});
  return family;
}

inline Rational rat(long num, long den = 1) { return make_rational(num, den); }

// f_i(x) = min(x, 1) on every position: the coverage indicator.
inline PointValuation cover_once_valuation(int positions, int cap) {
  std::vector<std::vector<Rational>> increments(positions);
  for (auto& row : increments) {
    row.assign(cap, Rational(0));
    if (cap > 0) row[0] = 1;
  }
  return PointValuation(std::move(increments));
}

// All n! voter orders.
inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  std::vector<std::vector<int>> result;
  do {
    result.push_back(order);
  } while (std::next_permutation(order.begin(), order.end()));
  return result;
}

}  // namespace vithiele::testsupport

#endif  // VITHIELE_TESTS_TEST_SUPPORT_HPP_

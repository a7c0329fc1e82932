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

#ifndef VITHIELE_CORE_HPP_
#define VITHIELE_CORE_HPP_

#include <optional>
#include <vector>

#include "vithiele/intervals.hpp"
#include "vithiele/rational.hpp"

namespace vithiele {

// Sorted set of internal candidate ids, no duplicates.
using Committee = std::vector<int>;

// Approval election over `num_voters` voters. Candidates are re-indexed at
// ingest so ids 0..num_candidates-1 are exactly the candidates with at least
// one approval; `original_id` maps them back to the caller's 0-based universe
// of `universe` candidates. All fields are immutable after construction.
struct ApprovalProfile {
  int num_voters = 0;
  int num_candidates = 0;
  std::vector<std::vector<int>> ballots;     // per voter, sorted internal ids
  std::vector<std::vector<int>> supporters;  // per candidate, sorted voter ids
  std::vector<int> original_id;              // internal id -> original id
  int universe = 0;

  // Voter order this profile claims to realize the Voter Interval property
  // (order[position-1] = voter). When set it is authoritative: consumers
  // verify it instead of running recognition.
  std::optional<std::vector<int>> voter_order;

  // Ballots in original ids over [0, universe). Rejects out-of-range and
  // duplicate entries; strips candidates nobody approves.
  static ApprovalProfile from_ballots(int voters, int universe,
                                      const std::vector<std::vector<int>>& raw_ballots);
};

std::vector<int> identity_order(int n);

// Per-voter non-increasing weight sequences with entries in [0, 1]. Only the
// first `entries` weights of each voter exist; scoring never consults more.
class WeightScheme {
 public:
  static WeightScheme av(int voters, int entries);
  static WeightScheme pav(int voters, int entries);
  static WeightScheme cc(int voters, int entries);
  // w_i = ratio^(i-1); requires 0 <= ratio <= 1.
  static WeightScheme geometric(int voters, int entries, const Rational& ratio);
  // w_i = 1 for i <= prefix_len, 0 afterwards.
  static WeightScheme truncated(int voters, int entries, int prefix_len);
  // One row per voter; rows shorter than `entries` are padded with zeros.
  // Validates the range and monotonicity invariants.
  static WeightScheme per_voter(int entries, std::vector<std::vector<Rational>> rows);

  int voters() const { return static_cast<int>(weights_.size()); }
  int entries() const { return entries_; }

  // w^v_index with 1-based index <= entries().
  const Rational& weight(int voter, int index) const;
  // Sum of the first `count` weights of `voter`; count <= entries().
  const Rational& prefix(int voter, int count) const;

 private:
  WeightScheme(int entries, std::vector<std::vector<Rational>> rows);

  int entries_ = 0;
  std::vector<std::vector<Rational>> weights_;  // weights_[v][i-1]
  std::vector<std::vector<Rational>> prefix_;   // prefix_[v][t]
};

// Exact Thiele score: sum_v sum_{i<=|A_v ∩ W|} w^v_i.
Rational score_committee(const ApprovalProfile& profile, const WeightScheme& weights,
                         const Committee& committee);

// The supporter intervals under `order` (order[position-1] = voter), one
// interval per candidate tagged with its internal id. Throws NotViError
// naming the first candidate whose supporters are not contiguous.
IntervalFamily profile_to_family(const ApprovalProfile& profile, const std::vector<int>& order);

// Valuation evaluating cap-truncated Thiele scores on supporter families:
// the position holding voter v receives increments w^v_1 .. w^v_cap.
PointValuation valuation_from_weights(const ApprovalProfile& profile, const WeightScheme& weights,
                                      int cap, const std::vector<int>& order);

// Throws InputError unless `committee` is sorted, duplicate-free and within
// the profile's internal candidate range.
void validate_committee(const ApprovalProfile& profile, const Committee& committee);

std::vector<int> committee_to_original(const ApprovalProfile& profile, const Committee& committee);

// Supporter intervals of the selected candidates only.
IntervalFamily committee_family(const IntervalFamily& all_candidates, const Committee& committee);

}  // namespace vithiele

#endif  // VITHIELE_CORE_HPP_

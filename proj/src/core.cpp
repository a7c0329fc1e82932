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

#include "vithiele/core.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "vithiele/errors.hpp"

namespace vithiele {

ApprovalProfile ApprovalProfile::from_ballots(int voters, int universe,
                                              const std::vector<std::vector<int>>& raw_ballots) {
  if (voters < 0 || universe < 0) throw InputError("negative voter or candidate count");
  if (static_cast<int>(raw_ballots.size()) != voters) {
    throw InputError("ballot count does not match voter count");
  }

  std::vector<int> approvals(universe, 0);
  for (int v = 0; v < voters; ++v) {
    std::vector<int> seen(universe, 0);
    for (int c : raw_ballots[v]) {
      if (c < 0 || c >= universe) {
        throw InputError("ballot of voter " + std::to_string(v + 1) + " references candidate " +
                         std::to_string(c + 1) + " outside the universe");
      }
      if (seen[c]++) {
        throw InputError("ballot of voter " + std::to_string(v + 1) + " lists candidate " +
                         std::to_string(c + 1) + " twice");
      }
      approvals[c] += 1;
    }
  }

  ApprovalProfile profile;
  profile.num_voters = voters;
  profile.universe = universe;
  std::vector<int> internal_of(universe, -1);
  for (int c = 0; c < universe; ++c) {
    if (approvals[c] > 0) {
      internal_of[c] = static_cast<int>(profile.original_id.size());
      profile.original_id.push_back(c);
    }
  }
  profile.num_candidates = static_cast<int>(profile.original_id.size());

  profile.ballots.resize(voters);
  profile.supporters.resize(profile.num_candidates);
  for (int v = 0; v < voters; ++v) {
    std::vector<int>& ballot = profile.ballots[v];
    ballot.reserve(raw_ballots[v].size());
    for (int c : raw_ballots[v]) ballot.push_back(internal_of[c]);
    std::sort(ballot.begin(), ballot.end());
    for (int c : ballot) profile.supporters[c].push_back(v);
  }
  return profile;
}

std::vector<int> identity_order(int n) {
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i;
  return order;
}

WeightScheme::WeightScheme(int entries, std::vector<std::vector<Rational>> rows)
    : entries_(entries), weights_(std::move(rows)) {
  prefix_.reserve(weights_.size());
  for (const std::vector<Rational>& row : weights_) {
    std::vector<Rational> sums;
    sums.reserve(row.size() + 1);
    sums.emplace_back(0);
    for (const Rational& w : row) sums.push_back(sums.back() + w);
    prefix_.push_back(std::move(sums));
  }
}

WeightScheme WeightScheme::per_voter(int entries, std::vector<std::vector<Rational>> rows) {
  if (entries < 0) throw InputError("negative weight entry count");
  for (std::vector<Rational>& row : rows) {
    if (static_cast<int>(row.size()) > entries) {
      throw InputError("weight row longer than the declared entry count");
    }
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (row[i] < 0 || row[i] > 1) throw InputError("weights must lie in [0, 1]");
      if (i > 0 && row[i] > row[i - 1]) throw InputError("weights must be non-increasing");
    }
    row.resize(entries, Rational(0));
  }
  return WeightScheme(entries, std::move(rows));
}

namespace {

std::vector<std::vector<Rational>> repeated_rows(int voters, std::vector<Rational> row) {
  if (voters < 0) throw InputError("negative voter count");
  return std::vector<std::vector<Rational>>(voters, std::move(row));
}

}  // namespace

WeightScheme WeightScheme::av(int voters, int entries) {
  return per_voter(entries, repeated_rows(voters, std::vector<Rational>(entries, Rational(1))));
}

WeightScheme WeightScheme::pav(int voters, int entries) {
  std::vector<Rational> row;
  row.reserve(entries);
  for (int i = 1; i <= entries; ++i) row.push_back(make_rational(1, i));
  return per_voter(entries, repeated_rows(voters, std::move(row)));
}

WeightScheme WeightScheme::cc(int voters, int entries) { return truncated(voters, entries, 1); }

WeightScheme WeightScheme::geometric(int voters, int entries, const Rational& ratio) {
  if (ratio < 0 || ratio > 1) throw InputError("geometric ratio must lie in [0, 1]");
  std::vector<Rational> row;
  row.reserve(entries);
  Rational w(1);
  for (int i = 0; i < entries; ++i) {
    row.push_back(w);
    w *= ratio;
  }
  return per_voter(entries, repeated_rows(voters, std::move(row)));
}

WeightScheme WeightScheme::truncated(int voters, int entries, int prefix_len) {
  if (prefix_len < 0) throw InputError("truncation length must be non-negative");
  std::vector<Rational> row(entries, Rational(0));
  for (int i = 0; i < std::min(entries, prefix_len); ++i) row[i] = 1;
  return per_voter(entries, repeated_rows(voters, std::move(row)));
}

const Rational& WeightScheme::weight(int voter, int index) const {
  internal_check(voter >= 0 && voter < voters(), "weight voter in range");
  internal_check(index >= 1 && index <= entries_, "weight index in range");
  return weights_[voter][index - 1];
}

const Rational& WeightScheme::prefix(int voter, int count) const {
  internal_check(voter >= 0 && voter < voters(), "prefix voter in range");
  internal_check(count >= 0 && count <= entries_, "prefix count in range");
  return prefix_[voter][count];
}

namespace {

void check_dimensions(const ApprovalProfile& profile, const WeightScheme& weights) {
  if (weights.voters() != profile.num_voters) {
    throw InputError("weight scheme voter count does not match the profile");
  }
  if (weights.entries() < profile.num_candidates) {
    throw InputError("weight scheme has fewer entries than candidates");
  }
}

std::vector<int> position_of_voter(const ApprovalProfile& profile, const std::vector<int>& order) {
  const int n = profile.num_voters;
  if (static_cast<int>(order.size()) != n) throw InputError("voter order has wrong length");
  std::vector<int> position(n, -1);
  for (int p = 0; p < n; ++p) {
    const int v = order[p];
    if (v < 0 || v >= n || position[v] != -1) throw InputError("voter order is not a permutation");
    position[v] = p;
  }
  return position;
}

}  // namespace

Rational score_committee(const ApprovalProfile& profile, const WeightScheme& weights,
                         const Committee& committee) {
  check_dimensions(profile, weights);
  validate_committee(profile, committee);
  Rational score = 0;
  for (int v = 0; v < profile.num_voters; ++v) {
    const std::vector<int>& ballot = profile.ballots[v];
    std::vector<int> common;
    std::set_intersection(ballot.begin(), ballot.end(), committee.begin(), committee.end(),
                          std::back_inserter(common));
    score += weights.prefix(v, static_cast<int>(common.size()));
  }
  return score;
}

IntervalFamily profile_to_family(const ApprovalProfile& profile, const std::vector<int>& order) {
  const std::vector<int> position = position_of_voter(profile, order);
  IntervalFamily family;
  family.reserve(profile.num_candidates);
  for (int c = 0; c < profile.num_candidates; ++c) {
    const std::vector<int>& voters = profile.supporters[c];
    internal_check(!voters.empty(), "candidate retained at ingest has a supporter");
    int lo = profile.num_voters, hi = -1;
    for (int v : voters) {
      lo = std::min(lo, position[v]);
      hi = std::max(hi, position[v]);
    }
    if (hi - lo + 1 != static_cast<int>(voters.size())) {
      const int original = profile.original_id[c];
      throw NotViError("supporters of candidate " + std::to_string(original + 1) +
                           " are not contiguous under the voter order",
                       original);
    }
    family.push_back(Interval{lo + 1, hi + 1, c});
  }
  return family;
}

PointValuation valuation_from_weights(const ApprovalProfile& profile, const WeightScheme& weights,
                                      int cap, const std::vector<int>& order) {
  check_dimensions(profile, weights);
  if (cap < 0 || cap > weights.entries()) {
    throw InputError("valuation cap outside the weight scheme's entries");
  }
  const int n = profile.num_voters;
  if (static_cast<int>(order.size()) != n) throw InputError("voter order has wrong length");
  position_of_voter(profile, order);  // permutation check
  std::vector<std::vector<Rational>> increments(n);
  for (int p = 0; p < n; ++p) {
    const int v = order[p];
    increments[p].reserve(cap);
    for (int i = 1; i <= cap; ++i) increments[p].push_back(weights.weight(v, i));
  }
  return PointValuation(std::move(increments));
}

void validate_committee(const ApprovalProfile& profile, const Committee& committee) {
  int previous = -1;
  for (int c : committee) {
    if (c < 0 || c >= profile.num_candidates) throw InputError("committee member out of range");
    if (c <= previous) throw InputError("committee must be sorted and duplicate-free");
    previous = c;
  }
}

std::vector<int> committee_to_original(const ApprovalProfile& profile, const Committee& committee) {
  validate_committee(profile, committee);
  std::vector<int> original;
  original.reserve(committee.size());
  for (int c : committee) original.push_back(profile.original_id[c]);
  std::sort(original.begin(), original.end());
  return original;
}

IntervalFamily committee_family(const IntervalFamily& all_candidates, const Committee& committee) {
  IntervalFamily family;
  family.reserve(committee.size());
  for (int c : committee) {
    internal_check(c >= 0 && c < static_cast<int>(all_candidates.size()),
                   "committee member has an interval");
    internal_check(all_candidates[c].tag == c, "candidate intervals indexed by tag");
    family.push_back(all_candidates[c]);
  }
  return family;
}

}  // namespace vithiele

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

#ifndef VITHIELE_STRUCTURE_HPP_
#define VITHIELE_STRUCTURE_HPP_

#include <optional>
#include <vector>

#include "vithiele/core.hpp"
#include "vithiele/intervals.hpp"

namespace vithiele {

// Domain membership report. Dominancy- and inclusion-freeness are properties
// of the supporter sets alone; the endpoint-nested flag and both orders are
// evaluated under the profile's working voter order (the declared one when
// present, otherwise the recognized one).
struct DomainReport {
  bool is_vi = false;
  bool is_en = false;
  bool is_dominancy_free = false;
  bool is_inclusion_free = false;
  std::optional<std::vector<int>> vi_voter_order;
  std::optional<std::vector<int>> ci_candidate_order;  // internal candidate ids
};

// True iff every candidate's supporters are contiguous under `order`
// (order[position-1] = voter). Throws InputError on a malformed permutation.
bool verify_vi_ordering(const ApprovalProfile& profile, const std::vector<int>& order);

// A voter order realizing the Voter Interval property, or nullopt when none
// exists. Recognition is a consecutive-ones reduction over the supporter
// sets (PQ-tree).
std::optional<std::vector<int>> find_vi_ordering(const ApprovalProfile& profile);

// The declared voter order when present (verified, authoritative), otherwise
// a recognized one. Throws NotViError when neither applies.
std::vector<int> require_vi_order(const ApprovalProfile& profile);

// True iff every containment between two members shares a left or right
// endpoint.
bool is_endpoint_nested(const IntervalFamily& family);

// The family reordered so both endpoint sequences are non-decreasing, ties
// broken by (lo, hi, tag). Throws InputError when the family is not
// endpoint-nested.
IntervalFamily endpoint_nested_order(const IntervalFamily& family);

// Candidate order (internal ids) under which every ballot occupies
// consecutive positions. Requires the supporter family to be endpoint-nested
// under the working voter order.
std::vector<int> en_to_ci_ordering(const ApprovalProfile& profile);

DomainReport classify_profile(const ApprovalProfile& profile);

}  // namespace vithiele

#endif  // VITHIELE_STRUCTURE_HPP_

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

#include "vithiele/structure.hpp"

#include <algorithm>

#include "vithiele/errors.hpp"
#include "vithiele/pq_tree.hpp"

namespace vithiele {

bool verify_vi_ordering(const ApprovalProfile& profile, const std::vector<int>& order) {
  try {
    profile_to_family(profile, order);
    return true;
  } catch (const NotViError&) {
    return false;
  }
}

std::optional<std::vector<int>> find_vi_ordering(const ApprovalProfile& profile) {
  PqTree tree(profile.num_voters);
  for (int c = 0; c < profile.num_candidates; ++c) {
    if (!tree.reduce(profile.supporters[c])) return std::nullopt;
  }
  std::vector<int> order = tree.frontier();
  internal_check(verify_vi_ordering(profile, order), "PQ frontier realizes the VI property");
  return order;
}

std::vector<int> require_vi_order(const ApprovalProfile& profile) {
  if (profile.voter_order) {
    profile_to_family(profile, *profile.voter_order);  // throws NotViError with a culprit
    return *profile.voter_order;
  }
  std::optional<std::vector<int>> order = find_vi_ordering(profile);
  if (!order) throw NotViError("profile is not Voter Interval under any voter order");
  return *order;
}

namespace {

bool weakly_contains(const Interval& outer, const Interval& inner) {
  return outer.lo <= inner.lo && inner.hi <= outer.hi;
}

}  // namespace

bool is_endpoint_nested(const IntervalFamily& family) {
  for (std::size_t i = 0; i < family.size(); ++i) {
    for (std::size_t j = i + 1; j < family.size(); ++j) {
      const Interval& a = family[i];
      const Interval& b = family[j];
      if (weakly_contains(a, b) || weakly_contains(b, a)) {
        if (a.lo != b.lo && a.hi != b.hi) return false;
      }
    }
  }
  return true;
}

IntervalFamily endpoint_nested_order(const IntervalFamily& family) {
  IntervalFamily ordered = family;
  std::sort(ordered.begin(), ordered.end());
  for (std::size_t j = 0; j + 1 < ordered.size(); ++j) {
    if (ordered[j].hi > ordered[j + 1].hi) {
      throw InputError("family is not endpoint-nested");
    }
  }
  return ordered;
}

std::vector<int> en_to_ci_ordering(const ApprovalProfile& profile) {
  const std::vector<int> order = require_vi_order(profile);
  const IntervalFamily family = profile_to_family(profile, order);
  if (!is_endpoint_nested(family)) {
    throw InputError("profile is not endpoint-nested under its working voter order");
  }
  const IntervalFamily ordered = endpoint_nested_order(family);
  std::vector<int> candidates;
  candidates.reserve(ordered.size());
  for (const Interval& interval : ordered) candidates.push_back(interval.tag);
  return candidates;
}

DomainReport classify_profile(const ApprovalProfile& profile) {
  DomainReport report;

  report.is_dominancy_free = true;
  report.is_inclusion_free = true;
  for (int c = 0; c < profile.num_candidates; ++c) {
    for (int d = c + 1; d < profile.num_candidates; ++d) {
      const std::vector<int>& a = profile.supporters[c];
      const std::vector<int>& b = profile.supporters[d];
      const bool a_in_b = std::includes(b.begin(), b.end(), a.begin(), a.end());
      const bool b_in_a = std::includes(a.begin(), a.end(), b.begin(), b.end());
      if (a_in_b || b_in_a) {
        report.is_inclusion_free = false;
        if (!(a_in_b && b_in_a)) report.is_dominancy_free = false;
      }
    }
  }

  std::optional<std::vector<int>> order;
  if (profile.voter_order) {
    if (verify_vi_ordering(profile, *profile.voter_order)) order = profile.voter_order;
  } else {
    order = find_vi_ordering(profile);
  }
  report.is_vi = order.has_value();
  if (order) {
    report.vi_voter_order = order;
    const IntervalFamily family = profile_to_family(profile, *order);
    report.is_en = is_endpoint_nested(family);
    if (report.is_en) report.ci_candidate_order = en_to_ci_ordering(profile);
  }

  internal_check(!report.is_en || report.is_vi, "endpoint-nested implies Voter Interval");
  internal_check(!(report.is_dominancy_free && report.is_vi) || report.is_en,
                 "dominancy-free Voter Interval profiles are endpoint-nested");
  return report;
}

}  // namespace vithiele

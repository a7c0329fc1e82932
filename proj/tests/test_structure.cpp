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

#include <doctest.h>

#include <algorithm>
#include <optional>

#include "test_support.hpp"
#include "vithiele/errors.hpp"
#include "vithiele/oracle.hpp"
#include "vithiele/structure.hpp"

using namespace vithiele;
using testsupport::all_permutations;
using testsupport::family_of;
using testsupport::profile_of;
using testsupport::rat;

namespace {

// Independent recognition oracle: try every voter permutation.
std::optional<std::vector<int>> vi_order_by_enumeration(const ApprovalProfile& profile) {
  for (const std::vector<int>& order : all_permutations(profile.num_voters)) {
    if (verify_vi_ordering(profile, order)) return order;
  }
  return std::nullopt;
}

// Three pairwise-overlapping ballots that no voter order linearizes.
ApprovalProfile sunflower_profile() {
  return profile_of({{0, 1}, {1, 2}, {0, 2}, {0, 1, 2}});
}

}  // namespace

TEST_CASE("verify_vi_ordering spec examples") {
  CHECK(verify_vi_ordering(profile_of({{0}, {0}, {0}}), identity_order(3)));
  CHECK_FALSE(verify_vi_ordering(profile_of({{0}, {1}, {0}}), identity_order(3)));
  CHECK(verify_vi_ordering(profile_of({{0}, {1}, {0}}), {0, 2, 1}));
  CHECK_THROWS_AS(verify_vi_ordering(profile_of({{0}, {0}}), {1, 1}), InputError);
}

TEST_CASE("find_vi_ordering spec examples") {
  SUBCASE("already interval under identity") {
    const ApprovalProfile profile = profile_of({{0}, {0, 1}, {1}});
    const auto order = find_vi_ordering(profile);
    REQUIRE(order.has_value());
    CHECK(verify_vi_ordering(profile, *order));
  }
  SUBCASE("split supporters can be reunited") {
    const ApprovalProfile profile = profile_of({{0}, {1}, {0}});
    const auto order = find_vi_ordering(profile);
    REQUIRE(order.has_value());
    CHECK(verify_vi_ordering(profile, *order));
  }
  SUBCASE("sunflower profile has no order") {
    CHECK_FALSE(find_vi_ordering(sunflower_profile()).has_value());
  }
}

TEST_CASE("recognition agrees with the permutation oracle on every tiny profile") {
  // Every 3-voter x 3-candidate approval matrix.
  for (int mask = 0; mask < (1 << 9); ++mask) {
    std::vector<std::vector<int>> ballots(3);
    for (int v = 0; v < 3; ++v) {
      for (int c = 0; c < 3; ++c) {
        if (mask & (1 << (3 * v + c))) ballots[v].push_back(c);
      }
    }
    const ApprovalProfile profile = ApprovalProfile::from_ballots(3, 3, ballots);
    const auto found = find_vi_ordering(profile);
    const auto oracle = vi_order_by_enumeration(profile);
    REQUIRE(found.has_value() == oracle.has_value());
    if (found) CHECK(verify_vi_ordering(profile, *found));
  }
}

TEST_CASE("recognition agrees with the permutation oracle on every 4x3 profile") {
  for (int mask = 0; mask < (1 << 12); ++mask) {
    std::vector<std::vector<int>> ballots(4);
    for (int v = 0; v < 4; ++v) {
      for (int c = 0; c < 3; ++c) {
        if (mask & (1 << (3 * v + c))) ballots[v].push_back(c);
      }
    }
    const ApprovalProfile profile = ApprovalProfile::from_ballots(4, 3, ballots);
    const auto found = find_vi_ordering(profile);
    const auto oracle = vi_order_by_enumeration(profile);
    REQUIRE(found.has_value() == oracle.has_value());
    if (found) CHECK(verify_vi_ordering(profile, *found));
  }
}

TEST_CASE("recognition agrees with the permutation oracle on every 5x3 profile") {
  for (int mask = 0; mask < (1 << 15); ++mask) {
    std::vector<std::vector<int>> ballots(5);
    for (int v = 0; v < 5; ++v) {
      for (int c = 0; c < 3; ++c) {
        if (mask & (1 << (3 * v + c))) ballots[v].push_back(c);
      }
    }
    const ApprovalProfile profile = ApprovalProfile::from_ballots(5, 3, ballots);
    const auto found = find_vi_ordering(profile);
    const auto oracle = vi_order_by_enumeration(profile);
    REQUIRE(found.has_value() == oracle.has_value());
    if (found) REQUIRE(verify_vi_ordering(profile, *found));
  }
}

TEST_CASE("recognition agrees with the permutation oracle on random profiles") {
  int non_vi_seen = 0;
  for (std::uint64_t seed = 1; seed <= 150; ++seed) {
    RandomSource random(seed * 997);
    const int n = random.uniform_int(1, 6);
    const int m = random.uniform_int(1, 7);
    const ApprovalProfile profile = random_profile(seed, n, m, rat(random.uniform_int(1, 3), 4));
    const auto found = find_vi_ordering(profile);
    const auto oracle = vi_order_by_enumeration(profile);
    REQUIRE(found.has_value() == oracle.has_value());
    if (found) {
      CHECK(verify_vi_ordering(profile, *found));
    } else {
      ++non_vi_seen;
    }
  }
  CHECK(non_vi_seen > 0);  // the sample exercises both outcomes
}

TEST_CASE("recognition recovers shuffled interval profiles") {
  for (std::uint64_t seed = 1; seed <= 40; ++seed) {
    const ApprovalProfile base = random_vi_profile(seed, 7, 6, rat(1, 2));
    const ShuffledProfile shuffled = shuffle_voters(base, seed + 5000);
    CHECK(verify_vi_ordering(shuffled.profile, shuffled.hidden_order));
    const auto order = find_vi_ordering(shuffled.profile);
    REQUIRE(order.has_value());
    CHECK(verify_vi_ordering(shuffled.profile, *order));
  }
}

TEST_CASE("cyclic supporter structures are never interval") {
  // Candidate j approved by voters j and j+1 (mod n): the incidence cycle.
  for (int n = 3; n <= 8; ++n) {
    std::vector<std::vector<int>> ballots(n);
    for (int c = 0; c < n; ++c) {
      ballots[c].push_back(c);
      ballots[(c + 1) % n].push_back(c);
    }
    const ApprovalProfile profile = ApprovalProfile::from_ballots(n, n, ballots);
    CHECK_FALSE(find_vi_ordering(profile).has_value());
    if (n <= 7) CHECK_FALSE(vi_order_by_enumeration(profile).has_value());
    // Dropping any one candidate breaks the cycle and restores the property.
    std::vector<std::vector<int>> open_ballots(n);
    for (int c = 0; c + 1 < n; ++c) {
      open_ballots[c].push_back(c);
      open_ballots[c + 1].push_back(c);
    }
    const ApprovalProfile open_profile = ApprovalProfile::from_ballots(n, n - 1, open_ballots);
    CHECK(find_vi_ordering(open_profile).has_value());
  }
}

TEST_CASE("fixed-size non-interval witnesses") {
  const auto profile_from_rows = [](int voters, std::vector<std::vector<int>> supporter_rows) {
    std::vector<std::vector<int>> ballots(voters);
    for (int c = 0; c < static_cast<int>(supporter_rows.size()); ++c) {
      for (int v : supporter_rows[c]) ballots[v].push_back(c);
    }
    return ApprovalProfile::from_ballots(voters, static_cast<int>(supporter_rows.size()),
                                         ballots);
  };
  SUBCASE("six voters, four interlocking candidates") {
    const ApprovalProfile profile =
        profile_from_rows(6, {{0, 1}, {2, 3}, {4, 5}, {1, 3, 5}});
    CHECK_FALSE(vi_order_by_enumeration(profile).has_value());
    CHECK_FALSE(find_vi_ordering(profile).has_value());
  }
  SUBCASE("five voters, four overlapping candidates") {
    const ApprovalProfile profile =
        profile_from_rows(5, {{0, 1}, {2, 3}, {0, 1, 2, 3}, {0, 3, 4}});
    CHECK_FALSE(vi_order_by_enumeration(profile).has_value());
    CHECK_FALSE(find_vi_ordering(profile).has_value());
  }
}

TEST_CASE("recognition succeeds on deep shuffled interval profiles") {
  // Past factorial-oracle scale: recognition must still recover an order for
  // profiles that are interval by construction.
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    RandomSource random(seed * 523);
    const int n = random.uniform_int(20, 40);
    const int m = random.uniform_int(10, 30);
    const ApprovalProfile base = random_vi_profile(seed + 12000, n, m, rat(1, 4));
    const ShuffledProfile shuffled = shuffle_voters(base, seed + 13000);
    const auto order = find_vi_ordering(shuffled.profile);
    REQUIRE(order.has_value());
    REQUIRE(verify_vi_ordering(shuffled.profile, *order));
  }
}

TEST_CASE("is_endpoint_nested spec examples") {
  CHECK_FALSE(is_endpoint_nested(family_of({{1, 3}, {2, 2}})));
  CHECK(is_endpoint_nested(family_of({{1, 3}, {1, 2}})));
  CHECK(is_endpoint_nested(family_of({{1, 2}, {2, 3}})));
}

TEST_CASE("endpoint_nested_order spec examples") {
  CHECK(endpoint_nested_order(family_of({{1, 2}, {1, 3}})) == family_of({{1, 2}, {1, 3}}));
  CHECK(endpoint_nested_order(family_of({{2, 3}, {1, 2}})) == family_of({{1, 2}, {2, 3}}));
  CHECK(endpoint_nested_order(family_of({{1, 3}, {1, 3}})) == family_of({{1, 3}, {1, 3}}));
  CHECK_THROWS_AS(endpoint_nested_order(family_of({{1, 3}, {2, 2}})), InputError);
}

TEST_CASE("endpoint_nested_order output satisfies both monotonicity conditions") {
  for (std::uint64_t seed = 1; seed <= 60; ++seed) {
    RandomSource random(seed * 31);
    // Families nested by construction: endpoints drawn in sorted pairs.
    IntervalFamily family;
    const int count = random.uniform_int(1, 8);
    std::vector<int> lows, highs;
    for (int i = 0; i < count; ++i) {
      lows.push_back(random.uniform_int(1, 6));
      highs.push_back(random.uniform_int(1, 6));
    }
    std::sort(lows.begin(), lows.end());
    std::sort(highs.begin(), highs.end());
    for (int i = 0; i < count; ++i) {
      family.push_back(Interval{lows[i], std::max(lows[i], highs[i]), -1});
    }
    if (!is_endpoint_nested(family)) continue;
    const IntervalFamily ordered = endpoint_nested_order(family);
    for (std::size_t j = 0; j + 1 < ordered.size(); ++j) {
      CHECK(ordered[j].lo <= ordered[j + 1].lo);
      CHECK(ordered[j].hi <= ordered[j + 1].hi);
    }
    CHECK(multiset_equal(ordered, family));
  }
}

TEST_CASE("en_to_ci_ordering spec examples") {
  SUBCASE("staircase supporters") {
    // a:[1,2], b:[1,3], c:[2,3]
    ApprovalProfile profile = profile_of({{0, 1}, {0, 1, 2}, {1, 2}});
    profile.voter_order = identity_order(3);
    CHECK(en_to_ci_ordering(profile) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("single voter") {
    const ApprovalProfile profile = profile_of({{0, 1, 2}});
    CHECK(en_to_ci_ordering(profile).size() == 3);
  }
  SUBCASE("nested-left family") {
    // a:[1,1], b:[1,2], c:[1,3]
    ApprovalProfile profile = profile_of({{0, 1, 2}, {1, 2}, {2}});
    profile.voter_order = identity_order(3);
    CHECK(en_to_ci_ordering(profile) == std::vector<int>{0, 1, 2});
  }
  SUBCASE("rejects non-nested profiles") {
    ApprovalProfile profile = profile_of({{0}, {0, 1}, {0}});
    profile.voter_order = identity_order(3);
    CHECK_THROWS_AS(en_to_ci_ordering(profile), InputError);
  }
}

TEST_CASE("candidate order makes every ballot contiguous on random nested profiles") {
  int checked = 0;
  for (std::uint64_t seed = 1; seed <= 120; ++seed) {
    RandomSource random(seed * 13);
    const int n = random.uniform_int(1, 7);
    const int m = random.uniform_int(1, 7);
    const ApprovalProfile profile = random_vi_profile(seed, n, m, rat(1, 2));
    const IntervalFamily family = profile_to_family(profile, identity_order(n));
    if (!is_endpoint_nested(family)) continue;
    ++checked;
    const std::vector<int> order = en_to_ci_ordering(profile);
    std::vector<int> place(m);
    for (int p = 0; p < m; ++p) place[order[p]] = p;
    for (int v = 0; v < n; ++v) {
      if (profile.ballots[v].empty()) continue;
      int lo = m, hi = -1;
      for (int c : profile.ballots[v]) {
        lo = std::min(lo, place[c]);
        hi = std::max(hi, place[c]);
      }
      CHECK(hi - lo + 1 == static_cast<int>(profile.ballots[v].size()));
    }
  }
  CHECK(checked >= 20);
}

TEST_CASE("classify_profile spec examples") {
  SUBCASE("single candidate approved by everyone: all flags set") {
    const ApprovalProfile profile = profile_of({{0}, {0}, {0}});
    const DomainReport report = classify_profile(profile);
    CHECK(report.is_vi);
    CHECK(report.is_en);
    CHECK(report.is_dominancy_free);
    CHECK(report.is_inclusion_free);
    CHECK(report.vi_voter_order.has_value());
    CHECK(report.ci_candidate_order.has_value());
  }
  SUBCASE("duplicate ballots break inclusion-freeness only") {
    const ApprovalProfile profile = profile_of({{0, 1}, {0, 1}});
    const DomainReport report = classify_profile(profile);
    CHECK(report.is_vi);
    CHECK(report.is_en);
    CHECK(report.is_dominancy_free);
    CHECK_FALSE(report.is_inclusion_free);
  }
  SUBCASE("strict containment without a shared endpoint") {
    // Supporter intervals {[1,3], [2,2]} under the declared order.
    ApprovalProfile profile = profile_of({{0}, {0, 1}, {0}});
    profile.voter_order = identity_order(3);
    const DomainReport report = classify_profile(profile);
    CHECK(report.is_vi);
    CHECK_FALSE(report.is_en);
    CHECK_FALSE(report.is_dominancy_free);
  }
  SUBCASE("sunflower: not interval at all") {
    const DomainReport report = classify_profile(sunflower_profile());
    CHECK_FALSE(report.is_vi);
    CHECK_FALSE(report.is_en);
    CHECK_FALSE(report.vi_voter_order.has_value());
  }
}

TEST_CASE("flag implications hold on random profiles") {
  for (std::uint64_t seed = 1; seed <= 200; ++seed) {
    RandomSource random(seed * 41);
    const int n = random.uniform_int(1, 6);
    const int m = random.uniform_int(1, 6);
    const ApprovalProfile profile = random_profile(seed + 7000, n, m, rat(1, 2));
    const DomainReport report = classify_profile(profile);
    if (report.is_en) CHECK(report.is_vi);
    if (report.is_inclusion_free) CHECK(report.is_dominancy_free);
    if (report.is_dominancy_free && report.is_vi) CHECK(report.is_en);
    if (report.vi_voter_order) CHECK(verify_vi_ordering(profile, *report.vi_voter_order));
  }
}

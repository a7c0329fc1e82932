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

#include "test_support.hpp"
#include "vithiele/errors.hpp"
#include "vithiele/io.hpp"
#include "vithiele/oracle.hpp"
#include "vithiele/structure.hpp"

using namespace vithiele;
using testsupport::profile_of;
using testsupport::rat;

TEST_CASE("brute_force_thiele spec examples") {
  const ApprovalProfile profile = profile_of({{0}, {0}, {1}});
  const WeightScheme weights = WeightScheme::pav(3, 2);
  SUBCASE("empty committee") {
    const BruteForceResult result = brute_force_thiele(profile, weights, 0);
    CHECK(result.score == 0);
    CHECK(result.committee.empty());
  }
  SUBCASE("single seat") {
    const BruteForceResult result = brute_force_thiele(profile, weights, 1);
    CHECK(result.score == 2);
    CHECK(result.committee == Committee{0});
  }
  SUBCASE("every candidate") {
    const BruteForceResult result = brute_force_thiele(profile, weights, 2);
    CHECK(result.score == score_committee(profile, weights, {0, 1}));
    CHECK(result.committee == Committee{0, 1});
  }
  SUBCASE("size guard") {
    CHECK_THROWS_AS(brute_force_thiele(profile, weights, 3), InputError);
  }
}

TEST_CASE("thiele_curve spec examples") {
  SUBCASE("flat weights sum the top approval counts") {
    // Approval counts (3, 2, 2, 1).
    const ApprovalProfile profile = profile_of({{0, 1}, {0, 1}, {0, 2}, {2, 3}});
    const ThieleCurve curve = thiele_curve(profile, WeightScheme::av(4, 4));
    REQUIRE(curve.scores.size() == 5);
    CHECK(curve.scores == std::vector<Rational>{0, 3, 5, 7, 8});
  }
  SUBCASE("single candidate") {
    const ApprovalProfile profile = profile_of({{0}, {0}});
    const ThieleCurve curve = thiele_curve(profile, WeightScheme::av(2, 1));
    CHECK(curve.scores == std::vector<Rational>{0, 2});
  }
  SUBCASE("interval profiles have concave curves") {
    for (std::uint64_t seed = 1; seed <= 25; ++seed) {
      RandomSource random(seed * 67);
      const int n = random.uniform_int(1, 6);
      const int m = random.uniform_int(1, 6);
      const ApprovalProfile profile = random_vi_profile(seed, n, m, rat(1, 2));
      const WeightScheme weights = random_weight_scheme(seed + 10, n, profile.num_candidates);
      const ThieleCurve curve = thiele_curve(profile, weights);
      CHECK(curve.scores.front() == 0);
      for (std::size_t k = 1; k + 1 < curve.scores.size(); ++k) {
        CHECK(2 * curve.scores[k] >= curve.scores[k - 1] + curve.scores[k + 1]);
        CHECK(curve.scores[k] <= curve.scores[k + 1]);
      }
    }
  }
}

TEST_CASE("relaxed brute force at zero multiplier equals the capped full score") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    const ApprovalProfile profile = random_vi_profile(seed + 90, 5, 5, rat(1, 2));
    const WeightScheme weights = random_weight_scheme(seed + 91, 5, profile.num_candidates);
    const int cap = 1 + static_cast<int>(seed % profile.num_candidates);
    const LagrangianInstance instance = LagrangianInstance::create(profile, weights, cap);
    const BruteForceLr result = brute_force_lr(instance, 0);
    Rational capped = 0;
    for (int v = 0; v < profile.num_voters; ++v) {
      capped += weights.prefix(v, std::min(static_cast<int>(profile.ballots[v].size()), cap));
    }
    CHECK(result.objective == capped);
    CHECK(result.max_size == profile.num_candidates);
  }
}

TEST_CASE("generators are deterministic and respect their contracts") {
  SUBCASE("identity order realizes the interval property") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const ApprovalProfile profile = random_vi_profile(seed, 6, 5, rat(1, 3));
      CHECK(verify_vi_ordering(profile, identity_order(6)));
      CHECK(profile.voter_order.has_value());
    }
  }
  SUBCASE("density one approves everyone") {
    const ApprovalProfile profile = random_vi_profile(7, 5, 4, 1);
    for (int c = 0; c < 4; ++c) CHECK(profile.supporters[c].size() == 5);
  }
  SUBCASE("same seed, same profile") {
    const ApprovalProfile a = random_vi_profile(42, 7, 6, rat(1, 2));
    const ApprovalProfile b = random_vi_profile(42, 7, 6, rat(1, 2));
    CHECK(serialize_profile(a) == serialize_profile(b));
    const ApprovalProfile c = random_vi_profile(43, 7, 6, rat(1, 2));
    CHECK(serialize_profile(a) != serialize_profile(c));
  }
  SUBCASE("random weights satisfy the scheme invariants") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      const WeightScheme weights = random_weight_scheme(seed, 4, 6);
      for (int v = 0; v < 4; ++v) {
        for (int i = 1; i <= 6; ++i) {
          CHECK(weights.weight(v, i) >= 0);
          CHECK(weights.weight(v, i) <= 1);
          if (i > 1) CHECK(weights.weight(v, i) <= weights.weight(v, i - 1));
        }
      }
    }
  }
}

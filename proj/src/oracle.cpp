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

#include "vithiele/oracle.hpp"

#include <algorithm>
#include <functional>
#include <iterator>
#include <utility>

#include "vithiele/errors.hpp"

namespace vithiele {

int RandomSource::uniform_int(int lo, int hi) {
  internal_check(lo <= hi, "uniform_int over a valid range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<int>(engine_() % span);
}

bool RandomSource::chance(const Rational& probability) {
  if (probability <= 0) return false;
  if (probability >= 1) return true;
  const BigInt num = probability.get_num();
  const BigInt den = probability.get_den();
  internal_check(den.fits_ulong_p() && num.fits_ulong_p(), "chance denominator fits a word");
  return engine_() % den.get_ui() < num.get_ui();
}

namespace {

std::vector<std::uint32_t> ballot_masks(const ApprovalProfile& profile) {
  std::vector<std::uint32_t> masks(profile.num_voters, 0);
  for (int v = 0; v < profile.num_voters; ++v) {
    for (int c : profile.ballots[v]) masks[v] |= std::uint32_t{1} << c;
  }
  return masks;
}

Committee mask_to_committee(std::uint32_t mask, int m) {
  Committee committee;
  for (int c = 0; c < m; ++c) {
    if (mask & (std::uint32_t{1} << c)) committee.push_back(c);
  }
  return committee;
}

}  // namespace

BruteForceResult brute_force_thiele(const ApprovalProfile& profile, const WeightScheme& weights,
                                    int k) {
  const int m = profile.num_candidates;
  if (m > 20) throw InputError("brute force limited to m <= 20");
  if (k < 0 || k > m) throw InputError("committee size out of range");

  const std::vector<std::uint32_t> masks = ballot_masks(profile);
  BruteForceResult best;
  best.score = -1;

  std::vector<int> pick(k);
  for (int i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    std::uint32_t mask = 0;
    for (int c : pick) mask |= std::uint32_t{1} << c;
    Rational score = 0;
    for (int v = 0; v < profile.num_voters; ++v) {
      score += weights.prefix(v, __builtin_popcount(masks[v] & mask));
    }
    // Enumeration is lexicographic and only strict improvements replace the
    // incumbent, so the reported argmax is the lexicographically smallest.
    if (score > best.score) {
      best.score = score;
      best.committee = pick;
    }
    int i = k - 1;
    while (i >= 0 && pick[i] == m - k + i) --i;
    if (i < 0) break;
    pick[i] += 1;
    for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return best;
}

ThieleCurve thiele_curve(const ApprovalProfile& profile, const WeightScheme& weights) {
  ThieleCurve curve;
  curve.scores.reserve(profile.num_candidates + 1);
  for (int k = 0; k <= profile.num_candidates; ++k) {
    curve.scores.push_back(brute_force_thiele(profile, weights, k).score);
  }
  return curve;
}

BruteForceLr brute_force_lr(const LagrangianInstance& instance, const Rational& lambda) {
  const int m = instance.profile.num_candidates;
  if (m > 15) throw InputError("brute force limited to m <= 15");
  if (lambda < 0) throw InputError("negative Lagrange multiplier");

  const std::vector<std::uint32_t> masks = ballot_masks(instance.profile);
  std::vector<Rational> penalty(m + 1);
  for (int j = 1; j <= m; ++j) penalty[j] = penalty[j - 1] + lambda;

  BruteForceLr best;
  bool first = true;
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
    const int size = __builtin_popcount(mask);
    Rational objective = -penalty[size];
    for (int v = 0; v < instance.profile.num_voters; ++v) {
      const int counted = std::min(__builtin_popcount(masks[v] & mask), instance.cap);
      objective += instance.weights.prefix(v, counted);
    }
    if (first || objective > best.objective) {
      first = false;
      best.objective = objective;
      best.committee = mask_to_committee(mask, m);
      best.min_size = best.max_size = size;
      best.min_witness = best.max_witness = best.committee;
      continue;
    }
    if (objective != best.objective) continue;
    const Committee committee = mask_to_committee(mask, m);
    if (size < best.min_size || (size == best.min_size && committee < best.min_witness)) {
      best.min_size = size;
      best.min_witness = committee;
    }
    if (size > best.max_size || (size == best.max_size && committee < best.max_witness)) {
      best.max_size = size;
      best.max_witness = committee;
    }
    if (size < static_cast<int>(best.committee.size()) ||
        (size == static_cast<int>(best.committee.size()) && committee < best.committee)) {
      best.committee = committee;
    }
  }
  return best;
}

ApprovalProfile random_vi_profile(std::uint64_t seed, int n, int m, const Rational& density) {
  if (n < 1 || m < 1) throw InputError("generator needs n, m >= 1");
  if (density < 0 || density > 1) throw InputError("density must lie in [0, 1]");
  RandomSource random(seed);
  std::vector<std::vector<int>> ballots(n);
  for (int c = 0; c < m; ++c) {
    int length = 1;
    for (int trial = 0; trial < n - 1; ++trial) {
      if (random.chance(density)) ++length;
    }
    const int lo = random.uniform_int(1, n - length + 1);
    for (int v = lo; v < lo + length; ++v) ballots[v - 1].push_back(c);
  }
  ApprovalProfile profile = ApprovalProfile::from_ballots(n, m, ballots);
  profile.voter_order = identity_order(n);
  return profile;
}

ApprovalProfile random_profile(std::uint64_t seed, int n, int m, const Rational& density) {
  if (n < 1 || m < 1) throw InputError("generator needs n, m >= 1");
  RandomSource random(seed);
  std::vector<std::vector<int>> ballots(n);
  for (int v = 0; v < n; ++v) {
    for (int c = 0; c < m; ++c) {
      if (random.chance(density)) ballots[v].push_back(c);
    }
  }
  return ApprovalProfile::from_ballots(n, m, ballots);
}

ShuffledProfile shuffle_voters(const ApprovalProfile& profile, std::uint64_t seed) {
  const int n = profile.num_voters;
  RandomSource random(seed);
  std::vector<int> old_of_new = identity_order(n);
  for (int i = n - 1; i > 0; --i) {
    std::swap(old_of_new[i], old_of_new[random.uniform_int(0, i)]);
  }

  std::vector<std::vector<int>> ballots(n);
  for (int i = 0; i < n; ++i) {
    for (int c : profile.ballots[old_of_new[i]]) {
      ballots[i].push_back(profile.original_id[c]);
    }
  }
  ShuffledProfile result;
  result.profile = ApprovalProfile::from_ballots(n, profile.universe, ballots);
  // Listing the new voters by their old positions restores the original
  // arrangement, so it realizes VI whenever the identity order did.
  result.hidden_order.resize(n);
  for (int i = 0; i < n; ++i) result.hidden_order[old_of_new[i]] = i;
  return result;
}

namespace {

const std::pair<long, long> kWeightGrid[] = {
    {0, 1}, {1, 6}, {1, 5}, {1, 4}, {1, 3}, {2, 5}, {1, 2},
    {3, 5}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {1, 1},
};

std::vector<Rational> descending_grid_row(RandomSource& random, int length) {
  std::vector<Rational> row;
  row.reserve(length);
  for (int i = 0; i < length; ++i) {
    const auto [num, den] = kWeightGrid[random.uniform_int(0, std::size(kWeightGrid) - 1)];
    row.push_back(make_rational(num, den));
  }
  std::sort(row.begin(), row.end(), std::greater<Rational>());
  return row;
}

}  // namespace

WeightScheme random_weight_scheme(std::uint64_t seed, int voters, int entries) {
  RandomSource random(seed);
  std::vector<std::vector<Rational>> rows;
  rows.reserve(voters);
  for (int v = 0; v < voters; ++v) rows.push_back(descending_grid_row(random, entries));
  return WeightScheme::per_voter(entries, std::move(rows));
}

PointValuation random_valuation(std::uint64_t seed, int positions, int cap) {
  RandomSource random(seed);
  std::vector<std::vector<Rational>> increments;
  increments.reserve(positions);
  for (int i = 0; i < positions; ++i) increments.push_back(descending_grid_row(random, cap));
  return PointValuation(std::move(increments));
}

}  // namespace vithiele

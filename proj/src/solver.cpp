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

#include "vithiele/solver.hpp"

#include <algorithm>
#include <utility>

#include "vithiele/concavity.hpp"
#include "vithiele/errors.hpp"
#include "vithiele/structure.hpp"

namespace vithiele {

PrecisionParams precision_params(const WeightScheme& weights, int cap) {
  PrecisionParams params;
  params.common_denominator = 1;
  const int used = std::min(cap, weights.entries());
  for (int v = 0; v < weights.voters(); ++v) {
    for (int i = 1; i <= used; ++i) {
      const BigInt den = weights.weight(v, i).get_den();
      params.common_denominator = lcm(params.common_denominator, den);
      params.denominator_bits += static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
    }
  }
  params.epsilon = make_rational(BigInt(1), 2 * params.common_denominator);
  return params;
}

namespace {

SolveCertificate direct_certificate(const LagrangianInstance& instance, const Committee& committee,
                                    const Rational& lambda, int iterations, int k) {
  SolveCertificate certificate;
  certificate.committee = committee;
  certificate.score = score_committee(instance.profile, instance.weights, committee);
  certificate.mode = SolveCertificate::Mode::DirectHit;
  certificate.lambda_bar = lambda;
  certificate.iterations = iterations;
  certificate.k = k;
  return certificate;
}

}  // namespace

std::variant<SolveCertificate, Bracket> binary_search_lambda(const LagrangianInstance& instance,
                                                             int k,
                                                             const PrecisionParams& params) {
  const int m = instance.profile.num_candidates;
  if (k < 1 || k > m - 1) throw InputError("binary search needs 1 <= k <= m-1");

  Bracket bracket;
  bracket.lambda_minus = 0;
  bracket.lambda_plus = instance.profile.num_voters;
  // At lambda = 0 selecting everything is optimal (weights are non-negative);
  // at lambda = n nothing is (a candidate's marginal score is at most n).
  bracket.witness_above = identity_order(m);
  bracket.witness_below = {};

  while (bracket.lambda_plus - bracket.lambda_minus > params.epsilon) {
    const Rational lambda = (bracket.lambda_minus + bracket.lambda_plus) / 2;
    const LRSolution solution = solve_lr(instance, lambda);
    bracket.iterations += 1;
    const int size = static_cast<int>(solution.committee.size());
    if (size == k) {
      return direct_certificate(instance, solution.committee, lambda, bracket.iterations, k);
    }
    if (size > k) {
      bracket.lambda_minus = lambda;
      bracket.witness_above = solution.committee;
    } else {
      bracket.lambda_plus = lambda;
      bracket.witness_below = solution.committee;
    }
    internal_check(static_cast<int>(bracket.witness_above.size()) > k &&
                       static_cast<int>(bracket.witness_below.size()) < k,
                   "bracket witnesses stay strict");
  }
  return bracket;
}

SolveCertificate resolve_bracket(const LagrangianInstance& instance, int k, const Bracket& bracket,
                                 const PrecisionParams& params) {
  if (bracket.lambda_minus < 0 || bracket.lambda_plus < bracket.lambda_minus) {
    throw InputError("malformed bracket window");
  }
  if (static_cast<int>(bracket.witness_above.size()) <= k ||
      static_cast<int>(bracket.witness_below.size()) >= k) {
    throw InputError("bracket witnesses do not bracket k");
  }

  const Rational lambda_bar = (bracket.lambda_minus + bracket.lambda_plus) / 2;
  const LRSolution middle = solve_lr(instance, lambda_bar);
  if (static_cast<int>(middle.committee.size()) == k) {
    return direct_certificate(instance, middle.committee, lambda_bar, bracket.iterations, k);
  }

  Rational lambda_low = lambda_bar - params.epsilon;
  if (lambda_low < 0) lambda_low = 0;
  const Rational lambda_high = lambda_bar + params.epsilon;
  const LRSizeExtremes below = lr_size_extremes(instance, lambda_low);
  const LRSizeExtremes above = lr_size_extremes(instance, lambda_high);
  // A perturbed solve may land on k exactly; any optimal committee of size k
  // at some multiplier is optimal among size-k committees.
  if (below.max_size == k) {
    return direct_certificate(instance, below.max_witness, lambda_low, bracket.iterations, k);
  }
  if (above.min_size == k) {
    return direct_certificate(instance, above.min_witness, lambda_high, bracket.iterations, k);
  }

  const Committee& large = below.max_size > k ? below.max_witness : bracket.witness_above;
  const Committee& small = above.min_size < k ? above.min_witness : bracket.witness_below;
  internal_check(static_cast<int>(small.size()) < k && k < static_cast<int>(large.size()),
                 "perturbation or fallback witnesses bracket k strictly");

  const IntervalFamily small_family = committee_family(instance.candidate_intervals, small);
  const IntervalFamily large_family = committee_family(instance.candidate_intervals, large);
  const PointValuation valuation =
      valuation_from_weights(instance.profile, instance.weights,
                             instance.profile.num_candidates, instance.voter_order);
  const CombineResult combined = combine_to_size(small_family, large_family, k, valuation);

  SolveCertificate certificate;
  certificate.committee.reserve(k);
  for (const Interval& interval : combined.combined) {
    internal_check(interval.tag >= 0, "combined intervals carry candidate tags");
    certificate.committee.push_back(interval.tag);
  }
  std::sort(certificate.committee.begin(), certificate.committee.end());
  internal_check(std::adjacent_find(certificate.committee.begin(), certificate.committee.end()) ==
                     certificate.committee.end(),
                 "combined committee has no duplicate candidates");

  certificate.score = score_committee(instance.profile, instance.weights, certificate.committee);
  internal_check(certificate.score == combined.value_combined,
                 "family value equals the committee score");
  // On the bracketed linear segment the interpolation is met with equality;
  // anything else means the bracket was wrong.
  const Rational interpolated = (Rational(1) - combined.theta) * combined.value_small +
                                combined.theta * combined.value_large;
  internal_check(certificate.score == interpolated,
                 "combined score meets the interpolated optimum exactly");

  certificate.mode = SolveCertificate::Mode::Combined;
  certificate.lambda_bar = lambda_bar;
  certificate.iterations = bracket.iterations;
  certificate.k = k;
  CombinedAudit audit;
  audit.small_committee = small;
  audit.large_committee = large;
  audit.theta = combined.theta;
  audit.value_small = combined.value_small;
  audit.value_large = combined.value_large;
  certificate.audit = std::move(audit);
  return certificate;
}

namespace {

void check_weight_dimensions(const ApprovalProfile& profile, const WeightScheme& weights) {
  if (weights.voters() != profile.num_voters) {
    throw InputError("weight scheme voter count does not match the profile");
  }
  if (weights.entries() < profile.num_candidates) {
    throw InputError("weight scheme has fewer entries than candidates");
  }
}

std::vector<int> pad_with_unapproved(const ApprovalProfile& profile, std::vector<int> committee,
                                     int k) {
  std::vector<char> approved(profile.universe, 0);
  for (int original : profile.original_id) approved[original] = 1;
  for (int original = 0; original < profile.universe && static_cast<int>(committee.size()) < k;
       ++original) {
    if (!approved[original]) committee.push_back(original);
  }
  std::sort(committee.begin(), committee.end());
  internal_check(static_cast<int>(committee.size()) == k, "padding reaches the requested size");
  return committee;
}

}  // namespace

SolveCertificate solve_thiele_vi(const ApprovalProfile& profile, const WeightScheme& weights,
                                 int k) {
  if (k < 0) throw InputError("committee size must be non-negative");
  if (k > profile.universe) {
    throw InputError("committee size exceeds the candidate universe: infeasible");
  }
  check_weight_dimensions(profile, weights);
  const int m = profile.num_candidates;

  if (k == 0) {
    SolveCertificate certificate;
    certificate.score = 0;
    certificate.lambda_bar = 0;
    certificate.k = 0;
    return certificate;
  }

  if (k >= m) {
    Committee everyone = identity_order(m);
    SolveCertificate certificate;
    certificate.score = score_committee(profile, weights, everyone);
    certificate.committee =
        pad_with_unapproved(profile, committee_to_original(profile, everyone), k);
    certificate.lambda_bar = 0;
    certificate.k = k;
    return certificate;
  }

  const LagrangianInstance instance = LagrangianInstance::create(profile, weights, k);
  const PrecisionParams params = precision_params(weights, k);
  auto outcome = binary_search_lambda(instance, k, params);
  SolveCertificate certificate =
      std::holds_alternative<SolveCertificate>(outcome)
          ? std::get<SolveCertificate>(std::move(outcome))
          : resolve_bracket(instance, k, std::get<Bracket>(outcome), params);

  certificate.committee = committee_to_original(profile, certificate.committee);
  if (certificate.audit) {
    certificate.audit->small_committee =
        committee_to_original(profile, certificate.audit->small_committee);
    certificate.audit->large_committee =
        committee_to_original(profile, certificate.audit->large_committee);
  }
  return certificate;
}

std::vector<Rational> solve_curve(const ApprovalProfile& profile, const WeightScheme& weights) {
  std::vector<Rational> scores;
  scores.reserve(profile.universe + 1);
  for (int k = 0; k <= profile.universe; ++k) {
    scores.push_back(solve_thiele_vi(profile, weights, k).score);
  }
  internal_check(scores[0] == 0, "empty committee scores zero");
  for (int k = 0; k + 1 <= profile.universe; ++k) {
    internal_check(scores[k] <= scores[k + 1], "score curve is non-decreasing");
  }
  for (int k = 1; k + 1 <= profile.universe; ++k) {
    internal_check(2 * scores[k] >= scores[k - 1] + scores[k + 1], "score curve is concave");
  }
  return scores;
}

}  // namespace vithiele

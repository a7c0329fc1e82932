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

#ifndef VITHIELE_LR_SOLVER_HPP_
#define VITHIELE_LR_SOLVER_HPP_

#include <vector>

#include "vithiele/core.hpp"
#include "vithiele/intervals.hpp"
#include "vithiele/rational.hpp"

namespace vithiele {

// Election prepared for the size-penalized relaxation: a VI-ordered profile,
// weights, and the counting cap k of the size-constrained program (voters
// collect w^v_1..w^v_k only). Immutable once created; safe to share.
struct LagrangianInstance {
  ApprovalProfile profile;
  WeightScheme weights;
  int cap = 0;
  std::vector<int> voter_order;
  IntervalFamily candidate_intervals;  // candidate_intervals[c].tag == c

  // Resolves and verifies the voter order (declared when present, recognized
  // otherwise; throws NotViError when the profile is not Voter Interval) and
  // precomputes the supporter intervals. Requires 1 <= cap <= m.
  static LagrangianInstance create(ApprovalProfile profile, WeightScheme weights, int cap);
};

struct LRSolution {
  Committee committee;
  Rational objective;
  Rational lambda;
};

struct LRSizeExtremes {
  int min_size = 0;
  int max_size = 0;
  Committee min_witness;
  Committee max_witness;
  Rational objective;
};

// sum_v sum_{i <= min(|A_v ∩ W|, cap)} w^v_i  -  lambda * |W|, exactly.
// Throws InputError when lambda < 0 or the committee is malformed.
Rational lr_objective(const LagrangianInstance& instance, const Rational& lambda,
                      const Committee& committee);

// Exact maximizer of the penalized objective over all 2^m committees (no
// cardinality constraint), found as a minimum-cost circulation on the voter
// timeline. Deterministic: returns the lexicographically smallest candidate
// set among the minimum-size optima.
LRSolution solve_lr(const LagrangianInstance& instance, const Rational& lambda);

// Least and greatest sizes attained by optimal committees, with witnesses.
// The size preference is enforced symbolically (lexicographic cost pairs),
// never by perturbing lambda.
LRSizeExtremes lr_size_extremes(const LagrangianInstance& instance, const Rational& lambda);

}  // namespace vithiele

#endif  // VITHIELE_LR_SOLVER_HPP_

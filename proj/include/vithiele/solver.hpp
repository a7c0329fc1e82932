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

#ifndef VITHIELE_SOLVER_HPP_
#define VITHIELE_SOLVER_HPP_

#include <optional>
#include <variant>
#include <vector>

#include "vithiele/core.hpp"
#include "vithiele/lr_solver.hpp"
#include "vithiele/rational.hpp"

namespace vithiele {

// Additive precision for the multiplier search. Every committee score is a
// multiple of 1/D for the common weight denominator D, so distinct slopes of
// the score curve differ by at least 1/D and epsilon = 1/(2D) separates them.
struct PrecisionParams {
  BigInt common_denominator;  // D
  Rational epsilon;           // 1/(2D)
  long denominator_bits = 0;  // total bit-length of the denominators in use
};

// D over the weights actually consulted: entries i <= cap of every voter.
PrecisionParams precision_params(const WeightScheme& weights, int cap);

// Multiplier window [lambda_minus, lambda_plus] whose witnesses certify that
// the slope matching committee size k lies inside: the witness solved at
// lambda_minus is larger than k, the one at lambda_plus smaller.
struct Bracket {
  Rational lambda_minus;
  Rational lambda_plus;
  Committee witness_above;  // optimal at lambda_minus, size > k
  Committee witness_below;  // optimal at lambda_plus, size < k
  int iterations = 0;
};

struct CombinedAudit {
  std::vector<int> small_committee;  // S, |S| < k
  std::vector<int> large_committee;  // S', |S'| > k
  Rational theta;                    // (k - |S|) / (|S'| - |S|)
  Rational value_small;              // F(S)
  Rational value_large;              // F(S')
};

// Full audit trail of a solve. Committees are in the profile's original
// candidate ids (solve_thiele_vi remaps; the lower-level entry points below
// produce instance-internal ids).
struct SolveCertificate {
  enum class Mode { DirectHit, Combined };

  std::vector<int> committee;
  Rational score;
  Mode mode = Mode::DirectHit;
  Rational lambda_bar;
  int iterations = 0;
  int k = 0;
  std::optional<CombinedAudit> audit;
};

// Halves [0, n] until an optimal committee of size exactly k appears (direct
// hit) or the window closes below epsilon. Initial witnesses need no solves:
// the full candidate set is optimal at lambda = 0 and the empty committee at
// lambda = n. Requires 1 <= k <= m-1.
std::variant<SolveCertificate, Bracket> binary_search_lambda(const LagrangianInstance& instance,
                                                             int k,
                                                             const PrecisionParams& params);

// Finishes a closed bracket: solves the midpoint, perturbs by +-epsilon with
// extreme-size tie-breaking to obtain committees strictly bracketing k
// (falling back to the recorded witnesses when a perturbed solve refuses to
// leave k's side), and interpolates them to size k with the combining engine.
// The returned score is exact.
SolveCertificate resolve_bracket(const LagrangianInstance& instance, int k, const Bracket& bracket,
                                 const PrecisionParams& params);

// End-to-end solve for any k >= 0. Returns committees in original candidate
// ids; k above the number of approved candidates is served by padding with
// never-approved candidates (throws InputError past the universe).
// Throws NotViError when the profile is not Voter Interval.
SolveCertificate solve_thiele_vi(const ApprovalProfile& profile, const WeightScheme& weights,
                                 int k);

// Exact score for every k = 0..universe. Checks the concavity of the
// resulting sequence before returning it.
std::vector<Rational> solve_curve(const ApprovalProfile& profile, const WeightScheme& weights);

}  // namespace vithiele

#endif  // VITHIELE_SOLVER_HPP_

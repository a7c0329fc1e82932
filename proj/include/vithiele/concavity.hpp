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

#ifndef VITHIELE_CONCAVITY_HPP_
#define VITHIELE_CONCAVITY_HPP_

#include <optional>
#include <utility>
#include <vector>

#include "vithiele/intervals.hpp"
#include "vithiele/rational.hpp"

namespace vithiele {

// One right-endpoint swap replayed on the canonically ordered family: the
// slots holding before_a = [l_a, r_a] and before_b = [l_b, r_b] (with
// l_a <= l_b <= r_a <= r_b) receive the union `outer` = [l_a, r_b] and the
// intersection `inner` = [l_b, r_a]. Shapes are untagged; tags stay with
// their slots, which is how selections become concrete family members at the
// end of a replay. Coverage is preserved pointwise by every step.
struct SwapStep {
  int slot_a = 0;
  int slot_b = 0;
  Interval before_a;
  Interval before_b;
  Interval outer;
  Interval inner;
};

// Outcome of combining two families S (smaller) and S'.
struct CombineResult {
  IntervalFamily combined;    // P = from_small ∪ from_large ∪ shared
  IntervalFamily from_small;  // R  ⊆ S \ S'
  IntervalFamily from_large;  // R' ⊆ S' \ S
  IntervalFamily shared;      // S ∩ S'
  Rational theta;             // (|P| - |S|) / (|S'| - |S|)
  Rational value_combined;    // F(P) >= (1-theta) F(S) + theta F(S')
  Rational value_small;       // F(S)
  Rational value_large;       // F(S')
  int combine_calls = 1;
};

// Canonical endpoint-nested family: the j-th smallest left endpoint paired
// with the j-th smallest right endpoint. Keeps both endpoint multisets and
// the pointwise coverage of the input; every produced interval is valid.
// Output comes ordered with both endpoint sequences non-decreasing.
IntervalFamily canonical_family(const IntervalFamily& family);

// Parity split (A*, B*) of a canonically ordered family: even 1-based
// positions in A*, odd in B*, so sizes are (floor(u/2), ceil(u/2)) and the
// two coverages differ by at most one everywhere. Throws InputError unless
// both endpoint sequences of the input are non-decreasing.
std::pair<IntervalFamily, IntervalFamily> alternating_partition(const IntervalFamily& canonical);

// Swap sequence turning canonical_family(family) back into `family`, at most
// u(u-1)/2 steps. Built by sorting the right endpoints with adjacent swaps
// (always fixing the leftmost inversion) and reversing that process.
std::vector<SwapStep> swap_sequence(const IntervalFamily& family);

// Replays `steps` on the canonical family while carrying a selected
// sub-multiset along: both replaced members selected -> keep both products,
// exactly one -> keep the union, neither -> unchanged. The result has the
// selection's size and at least its coverage at every position. Throws
// InputError when `selection` is not a sub-multiset of `canonical` or a step
// does not match the current slots.
IntervalFamily pushforward_selection(const IntervalFamily& canonical,
                                     const IntervalFamily& selection,
                                     const std::vector<SwapStep>& steps);

// Balanced combination of two families over the valuation's positions:
// |P| lands on floor or ceil of (|S|+|S'|)/2, S∩S' ⊆ P ⊆ S∪S', and
// F(P) >= (1-theta) F(S) + theta F(S'). Requires |S| < |S'|. `target`,
// when set, picks between the two admissible sizes (ties prefer the larger
// half).
CombineResult combine(const IntervalFamily& small, const IntervalFamily& large,
                      const PointValuation& valuation, std::optional<int> target = std::nullopt);

// Bisects with combine() until |P| = size; requires |S| < size < |S'|.
// combine_calls reports how many combine() invocations were needed.
CombineResult combine_to_size(const IntervalFamily& small, const IntervalFamily& large, int size,
                              const PointValuation& valuation);

}  // namespace vithiele

#endif  // VITHIELE_CONCAVITY_HPP_

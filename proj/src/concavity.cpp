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

#include "vithiele/concavity.hpp"

#include <algorithm>
#include <cstdlib>

#include "vithiele/errors.hpp"

namespace vithiele {

namespace {

bool same_shape(const Interval& a, const Interval& b) { return a.lo == b.lo && a.hi == b.hi; }

IntervalFamily sorted_copy(IntervalFamily family) {
  std::sort(family.begin(), family.end());
  return family;
}

// Steps that rebuild `sorted` (non-decreasing left endpoints) from its
// canonical form. The forward pass bubble-sorts the right endpoints, always
// fixing the leftmost adjacent inversion; the replay is that sequence
// reversed.
std::vector<SwapStep> steps_for_sorted(const IntervalFamily& sorted) {
  const int u = static_cast<int>(sorted.size());
  std::vector<int> lows(u), highs(u);
  for (int j = 0; j < u; ++j) {
    lows[j] = sorted[j].lo;
    highs[j] = sorted[j].hi;
  }
  std::vector<SwapStep> steps;
  int i = 0;
  while (i + 1 < u) {
    if (highs[i] <= highs[i + 1]) {
      ++i;
      continue;
    }
    const int p = highs[i], q = highs[i + 1];
    SwapStep step;
    step.slot_a = i;
    step.slot_b = i + 1;
    step.before_a = Interval{lows[i], q, -1};
    step.before_b = Interval{lows[i + 1], p, -1};
    step.outer = Interval{lows[i], p, -1};
    step.inner = Interval{lows[i + 1], q, -1};
    internal_check(lows[i] <= lows[i + 1] && lows[i + 1] <= q && q <= p,
                   "swap operands are nested");
    steps.push_back(step);
    std::swap(highs[i], highs[i + 1]);
    if (i > 0) --i;
  }
  std::reverse(steps.begin(), steps.end());
  return steps;
}

IntervalFamily canonical_of_sorted(const IntervalFamily& sorted) {
  std::vector<int> highs;
  highs.reserve(sorted.size());
  for (const Interval& interval : sorted) highs.push_back(interval.hi);
  std::sort(highs.begin(), highs.end());
  IntervalFamily slots;
  slots.reserve(sorted.size());
  for (std::size_t j = 0; j < sorted.size(); ++j) {
    internal_check(sorted[j].lo <= highs[j], "canonical pairing yields valid intervals");
    slots.push_back(Interval{sorted[j].lo, highs[j], sorted[j].tag});
  }
  return slots;
}

// Applies the replay to `slots` and pushes `selected` through it.
void replay(IntervalFamily& slots, std::vector<char>& selected,
            const std::vector<SwapStep>& steps) {
  const int u = static_cast<int>(slots.size());
  for (const SwapStep& step : steps) {
    if (step.slot_a < 0 || step.slot_b >= u || step.slot_a == step.slot_b) {
      throw InputError("swap step slots out of range");
    }
    Interval& a = slots[step.slot_a];
    Interval& b = slots[step.slot_b];
    if (!same_shape(a, step.before_a) || !same_shape(b, step.before_b)) {
      throw InputError("swap step does not match the current family");
    }
    a.lo = step.outer.lo;
    a.hi = step.outer.hi;
    b.lo = step.inner.lo;
    b.hi = step.inner.hi;
    const int chosen = (selected[step.slot_a] ? 1 : 0) + (selected[step.slot_b] ? 1 : 0);
    if (chosen == 1) {
      selected[step.slot_a] = 1;  // the union absorbs the survivor
      selected[step.slot_b] = 0;
    }
  }
}

Rational interpolated_bound(const Rational& theta, const Rational& value_small,
                            const Rational& value_large) {
  return (Rational(1) - theta) * value_small + theta * value_large;
}

CombineResult assemble_result(IntervalFamily combined, const IntervalFamily& small,
                              const IntervalFamily& large, const PointValuation& valuation,
                              int combine_calls) {
  std::sort(combined.begin(), combined.end());
  CombineResult result;
  result.shared = multiset_intersection(small, large);
  internal_check(is_sub_multiset(result.shared, combined), "shared intervals survive");
  internal_check(is_sub_multiset(combined, multiset_union(small, large)),
                 "result drawn from the union");
  const IntervalFamily chosen = multiset_difference(combined, result.shared);
  result.from_small = multiset_intersection(chosen, multiset_difference(small, large));
  result.from_large = multiset_difference(chosen, result.from_small);
  internal_check(is_sub_multiset(result.from_large, multiset_difference(large, small)),
                 "surplus side drawn from the larger family");
  result.theta = make_rational(static_cast<long>(combined.size()) - static_cast<long>(small.size()),
                               static_cast<long>(large.size()) - static_cast<long>(small.size()));
  result.value_small = valuation.total(small);
  result.value_large = valuation.total(large);
  result.value_combined = valuation.total(combined);
  internal_check(
      result.value_combined >= interpolated_bound(result.theta, result.value_small, result.value_large),
      "interpolation bound");
  result.combined = std::move(combined);
  result.combine_calls = combine_calls;
  return result;
}

}  // namespace

IntervalFamily canonical_family(const IntervalFamily& family) {
  return canonical_of_sorted(sorted_copy(family));
}

std::pair<IntervalFamily, IntervalFamily> alternating_partition(const IntervalFamily& canonical) {
  for (std::size_t j = 0; j + 1 < canonical.size(); ++j) {
    if (canonical[j].lo > canonical[j + 1].lo || canonical[j].hi > canonical[j + 1].hi) {
      throw InputError("family is not canonically ordered");
    }
  }
  IntervalFamily even_half, odd_half;
  for (std::size_t j = 0; j < canonical.size(); ++j) {
    if ((j + 1) % 2 == 0) even_half.push_back(canonical[j]);
    else odd_half.push_back(canonical[j]);
  }
  return {even_half, odd_half};  // (A*, B*) with |A*| = floor(u/2)
}

std::vector<SwapStep> swap_sequence(const IntervalFamily& family) {
  return steps_for_sorted(sorted_copy(family));
}

IntervalFamily pushforward_selection(const IntervalFamily& canonical,
                                     const IntervalFamily& selection,
                                     const std::vector<SwapStep>& steps) {
  if (!is_sub_multiset(selection, canonical)) {
    throw InputError("selection is not a sub-multiset of the canonical family");
  }
  IntervalFamily slots = canonical;
  std::vector<char> selected(slots.size(), 0);
  // Match selection members to slots; equal slots are interchangeable.
  std::vector<int> order(slots.size());
  for (std::size_t j = 0; j < order.size(); ++j) order[j] = static_cast<int>(j);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return slots[a] < slots[b]; });
  IntervalFamily wanted = sorted_copy(selection);
  std::size_t cursor = 0;
  for (int slot : order) {
    if (cursor < wanted.size() && wanted[cursor] == slots[slot]) {
      selected[slot] = 1;
      ++cursor;
    }
  }
  internal_check(cursor == wanted.size(), "every selected interval found a slot");

  replay(slots, selected, steps);
  IntervalFamily result;
  for (std::size_t j = 0; j < slots.size(); ++j) {
    if (selected[j]) result.push_back(slots[j]);
  }
  return result;
}

CombineResult combine(const IntervalFamily& small, const IntervalFamily& large,
                      const PointValuation& valuation, std::optional<int> target) {
  if (small.size() >= large.size()) throw InputError("combine needs |S| < |S'|");
  const int small_size = static_cast<int>(small.size());
  const int large_size = static_cast<int>(large.size());

  if (large_size - small_size == 1) {
    // The balanced sizes are |S| and |S'| themselves; the bound is tight on
    // both, so only the size preference matters.
    bool pick_large = true;
    if (target) {
      pick_large = std::abs(*target - large_size) <= std::abs(*target - small_size);
    }
    return assemble_result(pick_large ? large : small, small, large, valuation, 1);
  }

  const int n = valuation.positions();
  const IntervalFamily shared = multiset_intersection(small, large);
  const IntervalFamily small_only = multiset_difference(small, shared);
  const IntervalFamily large_only = multiset_difference(large, shared);
  const std::vector<int> base = coverage_counts(shared, n);

  const Rational value_small = valuation.total(small);
  const Rational value_large = valuation.total(large);
  // Shifting by the shared coverage makes the disjoint-case machinery exact:
  // G(X) = sum_i f_i(c_X(i) + c_D(i)) satisfies G(S\D) = F(S).
  internal_check(valuation.total_shifted(small_only, base) == value_small,
                 "shifted valuation agrees on the smaller family");

  const IntervalFamily merged = sorted_copy(multiset_union(small_only, large_only));
  const IntervalFamily slots = canonical_of_sorted(merged);
  const auto [even_half, odd_half] = alternating_partition(slots);

  const Rational distance(static_cast<long>(large_only.size()) -
                          static_cast<long>(small_only.size()));
  const auto half_meets_bound = [&](const IntervalFamily& half, Rational& theta_out) {
    theta_out = Rational(static_cast<long>(half.size()) -
                         static_cast<long>(small_only.size())) /
                distance;
    const Rational value = valuation.total_shifted(half, base);
    return value >= interpolated_bound(theta_out, value_small, value_large);
  };
  Rational theta_even, theta_odd;
  const bool even_ok = half_meets_bound(even_half, theta_even);
  const bool odd_ok = half_meets_bound(odd_half, theta_odd);
  internal_check(even_ok || odd_ok, "one alternating half meets the interpolation bound");

  bool use_odd;
  if (even_ok && odd_ok && target) {
    const int shared_size = static_cast<int>(shared.size());
    const int even_total = static_cast<int>(even_half.size()) + shared_size;
    const int odd_total = static_cast<int>(odd_half.size()) + shared_size;
    // Prefer the half closer to the requested size; ties go to the larger
    // (odd) half.
    use_odd = std::abs(*target - odd_total) <= std::abs(*target - even_total);
  } else if (even_ok && odd_ok) {
    use_odd = true;
  } else {
    use_odd = odd_ok;
  }
  const IntervalFamily& chosen_half = use_odd ? odd_half : even_half;

  const std::vector<SwapStep> steps = steps_for_sorted(merged);
  const IntervalFamily pushed = pushforward_selection(slots, chosen_half, steps);
  internal_check(is_sub_multiset(pushed, merged), "replay lands inside the union");

  IntervalFamily combined = multiset_union(pushed, shared);
  CombineResult result = assemble_result(std::move(combined), small, large, valuation, 1);
  const std::size_t total = small.size() + large.size();
  internal_check(result.combined.size() == total / 2 || result.combined.size() == (total + 1) / 2,
                 "combined size is a balanced half");
  return result;
}

CombineResult combine_to_size(const IntervalFamily& small, const IntervalFamily& large, int size,
                              const PointValuation& valuation) {
  if (static_cast<int>(small.size()) >= size || size >= static_cast<int>(large.size())) {
    throw InputError("requested size must lie strictly between the family sizes");
  }
  IntervalFamily lower = small;
  IntervalFamily upper = large;
  int calls = 0;
  IntervalFamily result;
  for (;;) {
    CombineResult mid = combine(lower, upper, valuation, size);
    ++calls;
    const int got = static_cast<int>(mid.combined.size());
    if (got == size) {
      result = std::move(mid.combined);
      break;
    }
    if (got > size) upper = std::move(mid.combined);
    else lower = std::move(mid.combined);
    internal_check(static_cast<int>(lower.size()) < size && size < static_cast<int>(upper.size()),
                   "bisection keeps the target bracketed");
  }
  CombineResult assembled = assemble_result(std::move(result), small, large, valuation, calls);
  internal_check(static_cast<int>(assembled.combined.size()) == size, "requested size reached");
  return assembled;
}

}  // namespace vithiele

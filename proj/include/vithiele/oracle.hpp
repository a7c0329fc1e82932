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

#ifndef VITHIELE_ORACLE_HPP_
#define VITHIELE_ORACLE_HPP_

#include <cstdint>
#include <random>
#include <vector>

#include "vithiele/core.hpp"
#include "vithiele/lr_solver.hpp"

namespace vithiele {

// Deterministic test randomness. Draws use raw engine words only, so the same
// seed reproduces the same data everywhere.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed) : engine_(seed) {}

  // Uniform over [lo, hi].
  int uniform_int(int lo, int hi);
  // True with the given probability (a rational in [0, 1]).
  bool chance(const Rational& probability);

 private:
  std::mt19937_64 engine_;
};

struct BruteForceResult {
  Rational score;
  Committee committee;  // lexicographically smallest argmax
};

// Exact maximum over all size-k committees by enumeration; refuses m > 20.
BruteForceResult brute_force_thiele(const ApprovalProfile& profile, const WeightScheme& weights,
                                    int k);

struct ThieleCurve {
  std::vector<Rational> scores;  // index k = 0..m
};

ThieleCurve thiele_curve(const ApprovalProfile& profile, const WeightScheme& weights);

struct BruteForceLr {
  Rational objective;
  Committee committee;  // minimum size, lexicographically smallest
  int min_size = 0;
  int max_size = 0;
  Committee min_witness;
  Committee max_witness;
};

// Exact maximum of the penalized objective over all 2^m subsets, with the
// size extremes of the optimal set; refuses m > 15.
BruteForceLr brute_force_lr(const LagrangianInstance& instance, const Rational& lambda);

// Profile whose supporter sets are intervals under the identity voter order
// (declared on the result). `density` in [0, 1] drives the expected interval
// length; density 1 makes every candidate approved by everyone.
ApprovalProfile random_vi_profile(std::uint64_t seed, int n, int m, const Rational& density);

// Bernoulli ballots; not necessarily Voter Interval. Candidates nobody
// approves are stripped at ingest as usual.
ApprovalProfile random_profile(std::uint64_t seed, int n, int m, const Rational& density);

struct ShuffledProfile {
  ApprovalProfile profile;          // voter order cleared
  std::vector<int> hidden_order;    // a voter order realizing VI, the answer key
};

// Shuffles the voters of a profile that is VI under the identity order,
// keeping the order that undoes the shuffle as the answer key.
ShuffledProfile shuffle_voters(const ApprovalProfile& profile, std::uint64_t seed);

// Per-voter non-increasing weights drawn from a fixed grid of small
// rationals.
WeightScheme random_weight_scheme(std::uint64_t seed, int voters, int entries);

// Concave valuation with `cap` increments per position from the same grid.
PointValuation random_valuation(std::uint64_t seed, int positions, int cap);

}  // namespace vithiele

#endif  // VITHIELE_ORACLE_HPP_

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

#include "vithiele/lr_solver.hpp"

#include <algorithm>
#include <utility>

#include "vithiele/errors.hpp"
#include "vithiele/structure.hpp"

namespace vithiele {

LagrangianInstance LagrangianInstance::create(ApprovalProfile profile, WeightScheme weights,
                                              int cap) {
  if (cap < 1 || cap > profile.num_candidates) {
    throw InputError("counting cap outside [1, m]");
  }
  std::vector<int> order = require_vi_order(profile);
  IntervalFamily intervals = profile_to_family(profile, order);
  return LagrangianInstance{std::move(profile), std::move(weights), cap, std::move(order),
                            std::move(intervals)};
}

Rational lr_objective(const LagrangianInstance& instance, const Rational& lambda,
                      const Committee& committee) {
  if (lambda < 0) throw InputError("negative Lagrange multiplier");
  validate_committee(instance.profile, committee);
  Rational value = 0;
  for (int v = 0; v < instance.profile.num_voters; ++v) {
    const std::vector<int>& ballot = instance.profile.ballots[v];
    std::vector<int> common;
    std::set_intersection(ballot.begin(), ballot.end(), committee.begin(), committee.end(),
                          std::back_inserter(common));
    const int counted = std::min(static_cast<int>(common.size()), instance.cap);
    value += instance.weights.prefix(v, counted);
  }
  value -= lambda * Rational(static_cast<long>(committee.size()));
  return value;
}

namespace {

// Cost triple ordered lexicographically: exact relaxed objective first, then
// committee size (sign selects the preferred extreme), then a bitmask weight
// making the lexicographically smallest candidate set win. The two
// symbolic components play the role of infinitesimal perturbations.
struct FlowCost {
  Rational main;
  long long size_pref = 0;
  BigInt lex;

  void add(const FlowCost& other) {
    main += other.main;
    size_pref += other.size_pref;
    lex += other.lex;
  }
  void subtract(const FlowCost& other) {
    main -= other.main;
    size_pref -= other.size_pref;
    lex -= other.lex;
  }
  bool less(const FlowCost& other) const {
    const int c = cmp(main, other.main);
    if (c != 0) return c < 0;
    if (size_pref != other.size_pref) return size_pref < other.size_pref;
    return lex < other.lex;
  }
};

struct Arc {
  int to = 0;
  int rev = 0;
  int cap = 0;
  FlowCost cost;
};

// Unit-capacity circulation network on the voter timeline. Nodes 0..n mark
// the gaps between consecutive positions; the t-th parallel arc of position j
// carries cost -w_t (0 past the counting cap), and each candidate interval
// [l, r] contributes a return arc r -> l-1 priced at lambda. A circulation
// then routes exactly the coverage profile of the selected candidates, so the
// minimum cost is the negated maximum of the relaxed objective.
class CirculationNetwork {
 public:
  CirculationNetwork(const LagrangianInstance& instance, const Rational& lambda,
                     bool prefer_large) {
    const int n = instance.profile.num_voters;
    const int m = instance.profile.num_candidates;
    node_count_ = n + 1;
    adj_.resize(node_count_);

    const std::vector<int> max_cover = coverage_counts(instance.candidate_intervals, n);
    for (int j = 1; j <= n; ++j) {
      const int voter = instance.voter_order[j - 1];
      for (int t = 1; t <= max_cover[j - 1]; ++t) {
        FlowCost cost;
        if (t <= instance.cap) cost.main = -instance.weights.weight(voter, t);
        add_arc(j - 1, j, cost);
      }
    }
    candidate_arcs_.reserve(m);
    for (int c = 0; c < m; ++c) {
      const Interval& interval = instance.candidate_intervals[c];
      FlowCost cost;
      cost.main = lambda;
      cost.size_pref = prefer_large ? -1 : 1;
      cost.lex = -(BigInt(1) << static_cast<unsigned>(m - 1 - c));
      candidate_arcs_.push_back({interval.hi, static_cast<int>(adj_[interval.hi].size())});
      add_arc(interval.hi, interval.lo - 1, cost);
    }
  }

  // Klein's algorithm: cancel residual negative cycles until none remains.
  // Exact costs make the optimality test exact; unit capacities make every
  // augmentation push one unit.
  Committee solve() {
    while (cancel_one_negative_cycle()) {
    }
    Committee committee;
    for (std::size_t c = 0; c < candidate_arcs_.size(); ++c) {
      const auto [node, index] = candidate_arcs_[c];
      if (adj_[node][index].cap == 0) committee.push_back(static_cast<int>(c));
    }
    return committee;
  }

 private:
  void add_arc(int from, int to, FlowCost cost) {
    FlowCost reverse_cost;
    reverse_cost.subtract(cost);
    adj_[from].push_back(Arc{to, static_cast<int>(adj_[to].size()), 1, std::move(cost)});
    adj_[to].push_back(
        Arc{from, static_cast<int>(adj_[from].size()) - 1, 0, std::move(reverse_cost)});
  }

  bool cancel_one_negative_cycle() {
    // Bellman-Ford from an implicit super-source (all distances start at 0);
    // a relaxation surviving node_count_ sweeps exposes a negative cycle.
    std::vector<FlowCost> dist(node_count_);
    std::vector<int> parent_node(node_count_, -1);
    std::vector<int> parent_arc(node_count_, -1);
    int flagged = -1;
    for (int sweep = 0; sweep <= node_count_; ++sweep) {
      flagged = -1;
      for (int u = 0; u < node_count_; ++u) {
        for (std::size_t a = 0; a < adj_[u].size(); ++a) {
          const Arc& arc = adj_[u][a];
          if (arc.cap <= 0) continue;
          FlowCost candidate = dist[u];
          candidate.add(arc.cost);
          if (candidate.less(dist[arc.to])) {
            dist[arc.to] = std::move(candidate);
            parent_node[arc.to] = u;
            parent_arc[arc.to] = static_cast<int>(a);
            flagged = arc.to;
          }
        }
      }
      if (flagged == -1) return false;
    }

    int inside = flagged;
    for (int i = 0; i < node_count_; ++i) inside = parent_node[inside];
    int y = inside;
    do {
      Arc& arc = adj_[parent_node[y]][parent_arc[y]];
      arc.cap -= 1;
      adj_[arc.to][arc.rev].cap += 1;
      y = parent_node[y];
    } while (y != inside);
    return true;
  }

  int node_count_ = 0;
  std::vector<std::vector<Arc>> adj_;
  std::vector<std::pair<int, int>> candidate_arcs_;  // (node, arc index) per candidate
};

Committee solve_circulation(const LagrangianInstance& instance, const Rational& lambda,
                            bool prefer_large) {
  if (lambda < 0) throw InputError("negative Lagrange multiplier");
  CirculationNetwork network(instance, lambda, prefer_large);
  return network.solve();
}

}  // namespace

LRSolution solve_lr(const LagrangianInstance& instance, const Rational& lambda) {
  LRSolution solution;
  solution.committee = solve_circulation(instance, lambda, /*prefer_large=*/false);
  solution.objective = lr_objective(instance, lambda, solution.committee);
  solution.lambda = lambda;
  return solution;
}

LRSizeExtremes lr_size_extremes(const LagrangianInstance& instance, const Rational& lambda) {
  LRSizeExtremes extremes;
  extremes.min_witness = solve_circulation(instance, lambda, /*prefer_large=*/false);
  extremes.max_witness = solve_circulation(instance, lambda, /*prefer_large=*/true);
  extremes.min_size = static_cast<int>(extremes.min_witness.size());
  extremes.max_size = static_cast<int>(extremes.max_witness.size());
  extremes.objective = lr_objective(instance, lambda, extremes.min_witness);
  internal_check(extremes.objective == lr_objective(instance, lambda, extremes.max_witness),
                 "both extreme witnesses are optimal");
  internal_check(extremes.min_size <= extremes.max_size, "size extremes ordered");
  return extremes;
}

}  // namespace vithiele

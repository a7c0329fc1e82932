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

#ifndef VITHIELE_PQ_TREE_HPP_
#define VITHIELE_PQ_TREE_HPP_

#include <optional>
#include <vector>

namespace vithiele {

// PQ-tree over elements 0..n-1 with Booth-Lueker template reduction. This is
// the simple polynomial variant: every reduction relabels the pertinent
// subtree from scratch instead of bubbling, which keeps the templates the only
// delicate part. P-node children may be permuted arbitrarily, Q-node children
// only reversed; the tree represents every element ordering reachable that
// way, restricted by the sets reduced so far.
class PqTree {
 public:
  explicit PqTree(int n);

  // Keeps exactly the represented orderings that place `elements`
  // consecutively. Returns false when none remains; the tree is invalid
  // afterwards. Elements must be distinct and within range.
  bool reduce(const std::vector<int>& elements);

  bool valid() const { return valid_; }

  // One represented ordering. Requires valid().
  std::vector<int> frontier() const;

 private:
  enum class Kind { Leaf, P, Q };
  enum class Label { Empty, Full, Partial };

  struct Node {
    Kind kind = Kind::Leaf;
    int element = -1;
    std::vector<int> children;
  };

  int new_node(Kind kind);
  // A single child stands for itself; several get a fresh P parent.
  int wrap_children(std::vector<int> children);
  void gather_counts(int node, const std::vector<char>& full,
                     std::vector<int>& full_below, std::vector<int>& leaves_below) const;
  std::optional<Label> process(int node, bool pertinent_root,
                               const std::vector<int>& full_below,
                               const std::vector<int>& leaves_below);
  void collect_frontier(int node, std::vector<int>& out) const;

  std::vector<Node> nodes_;
  int root_ = -1;
  int size_ = 0;
  bool valid_ = true;
};

}  // namespace vithiele

#endif  // VITHIELE_PQ_TREE_HPP_

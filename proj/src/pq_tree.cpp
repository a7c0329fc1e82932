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

#include "vithiele/pq_tree.hpp"

#include <algorithm>
#include <utility>

#include "vithiele/errors.hpp"

namespace vithiele {

// new_node() may reallocate the arena, so node contents are always reached
// through nodes_[id] rather than references held across allocations.

PqTree::PqTree(int n) : size_(n) {
  if (n < 0) throw InputError("PQ-tree over a negative ground set");
  if (n == 0) return;
  std::vector<int> leaves;
  leaves.reserve(n);
  for (int e = 0; e < n; ++e) {
    const int leaf = new_node(Kind::Leaf);
    nodes_[leaf].element = e;
    leaves.push_back(leaf);
  }
  if (n == 1) {
    root_ = leaves[0];
    return;
  }
  root_ = new_node(Kind::P);
  nodes_[root_].children = std::move(leaves);
}

int PqTree::new_node(Kind kind) {
  nodes_.push_back(Node{kind, -1, {}});
  return static_cast<int>(nodes_.size()) - 1;
}

int PqTree::wrap_children(std::vector<int> children) {
  internal_check(!children.empty(), "wrap_children needs at least one child");
  if (children.size() == 1) return children[0];
  const int node = new_node(Kind::P);
  nodes_[node].children = std::move(children);
  return node;
}

void PqTree::gather_counts(int node, const std::vector<char>& full,
                           std::vector<int>& full_below, std::vector<int>& leaves_below) const {
  const Node& current = nodes_[node];
  if (current.kind == Kind::Leaf) {
    full_below[node] = full[current.element] ? 1 : 0;
    leaves_below[node] = 1;
    return;
  }
  int fulls = 0, leaves = 0;
  for (int child : current.children) {
    gather_counts(child, full, full_below, leaves_below);
    fulls += full_below[child];
    leaves += leaves_below[child];
  }
  full_below[node] = fulls;
  leaves_below[node] = leaves;
}

bool PqTree::reduce(const std::vector<int>& elements) {
  if (!valid_) return false;
  std::vector<char> full(size_, 0);
  for (int e : elements) {
    if (e < 0 || e >= size_) throw InputError("PQ-tree element out of range");
    if (full[e]) throw InputError("PQ-tree constraint lists an element twice");
    full[e] = 1;
  }
  const int pertinent = static_cast<int>(elements.size());
  if (pertinent <= 1 || pertinent == size_) return true;

  std::vector<int> full_below(nodes_.size(), 0);
  std::vector<int> leaves_below(nodes_.size(), 0);
  gather_counts(root_, full, full_below, leaves_below);

  // Deepest node whose subtree holds the whole constraint.
  int pert_root = root_;
  for (;;) {
    int next = -1;
    for (int child : nodes_[pert_root].children) {
      if (full_below[child] == pertinent) {
        next = child;
        break;
      }
    }
    if (next == -1) break;
    pert_root = next;
  }

  if (!process(pert_root, /*pertinent_root=*/true, full_below, leaves_below)) {
    valid_ = false;
    return false;
  }
  return true;
}

std::optional<PqTree::Label> PqTree::process(int node, bool pertinent_root,
                                             const std::vector<int>& full_below,
                                             const std::vector<int>& leaves_below) {
  if (full_below[node] == 0) return Label::Empty;
  if (full_below[node] == leaves_below[node]) {
    // A subtree occupies a contiguous block of every frontier, so an
    // all-full subtree needs no surgery.
    return Label::Full;
  }
  internal_check(nodes_[node].kind != Kind::Leaf, "mixed node cannot be a leaf");

  // Child labels before any restructuring. Partial children come out of the
  // recursion as Q nodes ordered empty side first.
  std::vector<std::pair<int, Label>> labeled;
  labeled.reserve(nodes_[node].children.size());
  for (int child : nodes_[node].children) {
    Label label;
    if (full_below[child] == 0) {
      label = Label::Empty;
    } else if (full_below[child] == leaves_below[child]) {
      label = Label::Full;
    } else {
      const std::optional<Label> processed = process(child, false, full_below, leaves_below);
      if (!processed) return std::nullopt;
      internal_check(*processed == Label::Partial, "mixed child reduces to a partial node");
      label = Label::Partial;
    }
    labeled.emplace_back(child, label);
  }

  if (nodes_[node].kind == Kind::P) {
    std::vector<int> empties, fulls, partials;
    for (const auto& [child, label] : labeled) {
      if (label == Label::Empty) empties.push_back(child);
      else if (label == Label::Full) fulls.push_back(child);
      else partials.push_back(child);
    }

    if (!pertinent_root) {
      // The constraint continues outside this subtree, so its full part must
      // end up at one end of the node's frontier.
      if (partials.size() >= 2) return std::nullopt;
      std::vector<int> sequence;  // empty side first
      if (partials.empty()) {
        sequence.push_back(wrap_children(std::move(empties)));
        sequence.push_back(wrap_children(std::move(fulls)));
      } else {
        if (!empties.empty()) sequence.push_back(wrap_children(std::move(empties)));
        const std::vector<int> inner = nodes_[partials[0]].children;
        sequence.insert(sequence.end(), inner.begin(), inner.end());
        if (!fulls.empty()) sequence.push_back(wrap_children(std::move(fulls)));
      }
      nodes_[node].kind = Kind::Q;
      nodes_[node].children = std::move(sequence);
      return Label::Partial;
    }

    // Pertinent root: the full block may sit anywhere inside this subtree.
    if (partials.size() > 2) return std::nullopt;
    if (partials.empty()) {
      if (fulls.size() >= 2) {
        const int grouped_fulls = wrap_children(std::move(fulls));
        std::vector<int> grouped = std::move(empties);
        grouped.push_back(grouped_fulls);
        nodes_[node].children = std::move(grouped);
      }
      return Label::Full;
    }
    std::vector<int> combined = nodes_[partials[0]].children;  // empty -> full
    if (!fulls.empty()) combined.push_back(wrap_children(std::move(fulls)));
    if (partials.size() == 2) {
      const std::vector<int> other = nodes_[partials[1]].children;
      combined.insert(combined.end(), other.rbegin(), other.rend());  // full -> empty
    }
    if (empties.empty()) {
      nodes_[node].kind = Kind::Q;
      nodes_[node].children = std::move(combined);
    } else {
      const int merged = new_node(Kind::Q);
      nodes_[merged].children = std::move(combined);
      std::vector<int> grouped = std::move(empties);
      grouped.push_back(merged);
      nodes_[node].children = std::move(grouped);
    }
    return Label::Full;
  }

  // Q node. Its orientation is free, so a pattern may match either direction.
  internal_check(nodes_[node].kind == Kind::Q, "remaining case is a Q node");
  const auto one_sided = [](const std::vector<std::pair<int, Label>>& seq) {
    // empties, then at most one partial, then fulls
    std::size_t i = 0;
    while (i < seq.size() && seq[i].second == Label::Empty) ++i;
    if (i < seq.size() && seq[i].second == Label::Partial) ++i;
    while (i < seq.size() && seq[i].second == Label::Full) ++i;
    return i == seq.size();
  };

  if (!pertinent_root) {
    std::vector<std::pair<int, Label>> oriented = labeled;
    if (!one_sided(oriented)) {
      std::reverse(oriented.begin(), oriented.end());
      if (!one_sided(oriented)) return std::nullopt;
    }
    std::vector<int> sequence;
    for (const auto& [child, label] : oriented) {
      if (label == Label::Partial) {
        const std::vector<int>& inner = nodes_[child].children;
        sequence.insert(sequence.end(), inner.begin(), inner.end());
      } else {
        sequence.push_back(child);
      }
    }
    nodes_[node].children = std::move(sequence);
    return Label::Partial;
  }

  // Root pattern: empties, optional partial, fulls, optional partial, empties.
  std::size_t i = 0;
  const std::size_t k = labeled.size();
  while (i < k && labeled[i].second == Label::Empty) ++i;
  std::ptrdiff_t left_partial = -1, right_partial = -1;
  if (i < k && labeled[i].second == Label::Partial) left_partial = static_cast<std::ptrdiff_t>(i++);
  while (i < k && labeled[i].second == Label::Full) ++i;
  if (i < k && labeled[i].second == Label::Partial) right_partial = static_cast<std::ptrdiff_t>(i++);
  while (i < k && labeled[i].second == Label::Empty) ++i;
  if (i != k) return std::nullopt;

  std::vector<int> sequence;
  for (std::size_t j = 0; j < k; ++j) {
    const auto& [child, label] = labeled[j];
    if (label != Label::Partial) {
      sequence.push_back(child);
      continue;
    }
    const std::vector<int>& inner = nodes_[child].children;
    if (static_cast<std::ptrdiff_t>(j) == left_partial) {
      sequence.insert(sequence.end(), inner.begin(), inner.end());  // empty -> full
    } else {
      internal_check(static_cast<std::ptrdiff_t>(j) == right_partial, "partial placement");
      sequence.insert(sequence.end(), inner.rbegin(), inner.rend());  // full -> empty
    }
  }
  nodes_[node].children = std::move(sequence);
  return Label::Full;
}

void PqTree::collect_frontier(int node, std::vector<int>& out) const {
  const Node& current = nodes_[node];
  if (current.kind == Kind::Leaf) {
    out.push_back(current.element);
    return;
  }
  for (int child : current.children) collect_frontier(child, out);
}

std::vector<int> PqTree::frontier() const {
  internal_check(valid_, "frontier of an invalid PQ-tree");
  std::vector<int> out;
  out.reserve(size_);
  if (root_ != -1) collect_frontier(root_, out);
  return out;
}

}  // namespace vithiele

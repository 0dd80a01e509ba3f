// Copyright 2026 The semichain Authors
//
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

#ifndef SEMICHAIN_HASSE_HPP
#define SEMICHAIN_HASSE_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "semichain/orders.hpp"

namespace semichain {

/// Cover relation of a partial order: (x, y) is an edge iff y covers x.
struct HasseDiagram {
  int n = 0;
  std::vector<std::pair<int, int>> edges;  // (lower, upper), lexicographic
};

/// An unordered rooted tree on vertices {1..n}. `parent(v)` is 0 for the
/// root. Children lists are kept ascending but carry no meaning.
class RootedTree {
 public:
  RootedTree() = default;

  /// `parents[v-1]` is the parent of v, or 0 for the root. Throws
  /// PreconditionViolated unless this describes a single rooted tree.
  explicit RootedTree(std::vector<int> parents);

  int size() const noexcept { return static_cast<int>(parent_.size()); }
  int root() const noexcept { return root_; }
  int parent(int v) const { return parent_[v - 1]; }
  const std::vector<int>& children(int v) const { return children_[v - 1]; }
  const std::vector<int>& parents() const noexcept { return parent_; }

  bool is_binary() const;

  /// Vertices of the subtree rooted at v, ascending.
  std::vector<int> subtree(int v) const;
  int leaf_count() const;

  friend bool operator==(const RootedTree& a, const RootedTree& b) {
    return a.parent_ == b.parent_;
  }

 private:
  std::vector<int> parent_;
  std::vector<std::vector<int>> children_;
  int root_ = 0;
};

/// An unlabeled rooted tree up to isomorphism. The canonical code wraps the
/// lexicographically sorted codes of the children in parentheses, so a
/// leaf is "()" and the empty tree is "".
class TreeShape {
 public:
  TreeShape() = default;

  static TreeShape of(const RootedTree& tree);

  /// Validates the bracket structure and canonicity of `code`.
  static TreeShape from_code(std::string code);

  const std::string& code() const noexcept { return code_; }
  int size() const;
  bool is_binary() const;

  /// A tree with this shape; vertices are numbered in preorder.
  RootedTree realize() const;

  friend bool operator==(const TreeShape&, const TreeShape&) = default;
  friend auto operator<=>(const TreeShape&, const TreeShape&) = default;

 private:
  std::string code_;
};

/// All binary tree shapes with n vertices, sorted by canonical code.
std::vector<TreeShape> binary_tree_shapes(int n);

HasseDiagram hasse(const SemilatticeOrder& s);

/// The Hasse diagram as a tree rooted at the top element, if it is a tree.
std::optional<RootedTree> hasse_tree(const SemilatticeOrder& s);

/// The semilattice whose Hasse diagram is `tree` (ancestors are above).
SemilatticeOrder semilattice_from_tree(const RootedTree& tree);

/// The Hasse diagram is a rooted tree in which every vertex has at most
/// two children.
bool is_binary_tree_semilattice(const SemilatticeOrder& s);

/// For every child x' of x: x is the t-least element strictly t-above the
/// whole ideal of x', or the t-greatest element strictly t-below it.
/// Throws NotBinaryTree if the Hasse diagram is not a binary tree.
bool satisfies_structure_condition(const SemilatticeOrder& s, const TotalOrder& t);

/// Binary-tree semilattice satisfying the structure condition; equivalent
/// to nondecreasingness for t.
bool theorem_main_check(const SemilatticeOrder& s, const TotalOrder& t);

/// A labeling of `shape` that is nondecreasing for the natural order:
/// a single-child root takes the largest label; a two-child root takes
/// |C1| + 1 with C1 below it and C2 above it.
SemilatticeOrder canonical_nondecreasing_labeling(const TreeShape& shape);

/// F(x,y) <= F(x+1,y) <= F(x,y)+1 and the same in the second argument.
bool is_smooth(const OpTable& f);

/// The peak a when the order is exactly 1 < 2 < ... < a together with
/// n < n-1 < ... < a and nothing else; std::nullopt otherwise. The chains
/// (a = n or a = 1) are included.
std::optional<int> smooth_order_characterization(const SemilatticeOrder& s);

/// Whether the join of `s` has a neutral element. Requires the join to be
/// t-preserving (PreconditionViolated otherwise); under that hypothesis the
/// answer coincides with "s is a chain single-peaked for t".
bool neutral_iff_single_peaked_check(const SemilatticeOrder& s, const TotalOrder& t);

/// Graphviz rendering of the Hasse diagram, bottom to top. Vertices are
/// listed 1..n and each edge points from an element to its cover.
std::string hasse_dot(const SemilatticeOrder& s, const std::string& name = "hasse");

}  // namespace semichain

#endif  // SEMICHAIN_HASSE_HPP

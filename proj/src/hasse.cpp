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

#include "semichain/hasse.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include "semichain/errors.hpp"

namespace semichain {

RootedTree::RootedTree(std::vector<int> parents) : parent_(std::move(parents)) {
  const int n = size();
  children_.assign(parent_.size(), {});
  for (int v = 1; v <= n; ++v) {
    const int p = parent_[v - 1];
    if (p == 0) {
      if (root_ != 0) throw PreconditionViolated("rooted tree: more than one root");
      root_ = v;
    } else if (p < 1 || p > n || p == v) {
      throw PreconditionViolated("rooted tree: bad parent of vertex " + std::to_string(v));
    } else {
      children_[p - 1].push_back(v);
    }
  }
  if (n > 0 && root_ == 0) throw PreconditionViolated("rooted tree: no root");
  // Every vertex must reach the root.
  for (int v = 1; v <= n; ++v) {
    int u = v;
    for (int steps = 0; u != root_; ++steps) {
      if (steps > n) throw PreconditionViolated("rooted tree: cycle");
      u = parent_[u - 1];
    }
  }
}

bool RootedTree::is_binary() const {
  return std::all_of(children_.begin(), children_.end(),
                     [](const auto& c) { return c.size() <= 2; });
}

std::vector<int> RootedTree::subtree(int v) const {
  std::vector<int> out;
  std::vector<int> stack{v};
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    out.push_back(u);
    for (int c : children(u)) stack.push_back(c);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int RootedTree::leaf_count() const {
  return static_cast<int>(std::count_if(children_.begin(), children_.end(),
                                        [](const auto& c) { return c.empty(); }));
}

namespace {

std::string encode(const RootedTree& tree, int v) {
  std::vector<std::string> codes;
  for (int c : tree.children(v)) codes.push_back(encode(tree, c));
  std::sort(codes.begin(), codes.end());
  std::string out = "(";
  for (const auto& c : codes) out += c;
  out += ')';
  return out;
}

// Splits "(c1c2...)" into its child codes; `pos` is advanced past it.
std::vector<std::string> split_children(const std::string& code, std::size_t& pos) {
  if (pos >= code.size() || code[pos] != '(') throw PreconditionViolated("tree code: expected '('");
  ++pos;
  std::vector<std::string> children;
  while (pos < code.size() && code[pos] == '(') {
    const std::size_t start = pos;
    split_children(code, pos);
    children.push_back(code.substr(start, pos - start));
  }
  if (pos >= code.size() || code[pos] != ')') throw PreconditionViolated("tree code: expected ')'");
  ++pos;
  return children;
}

}  // namespace

TreeShape TreeShape::of(const RootedTree& tree) {
  TreeShape s;
  if (tree.size() > 0) s.code_ = encode(tree, tree.root());
  return s;
}

TreeShape TreeShape::from_code(std::string code) {
  TreeShape s;
  s.code_ = std::move(code);
  if (s.code_.empty()) return s;
  std::size_t pos = 0;
  split_children(s.code_, pos);
  if (pos != s.code_.size()) throw PreconditionViolated("tree code: trailing characters");
  if (TreeShape::of(s.realize()).code_ != s.code_) {
    throw PreconditionViolated("tree code: not canonical");
  }
  return s;
}

int TreeShape::size() const {
  return static_cast<int>(std::count(code_.begin(), code_.end(), '('));
}

bool TreeShape::is_binary() const { return size() == 0 || realize().is_binary(); }

RootedTree TreeShape::realize() const {
  std::vector<int> parents;
  std::function<void(const std::string&, int)> build = [&](const std::string& code, int parent) {
    parents.push_back(parent);
    const int self = static_cast<int>(parents.size());
    std::size_t pos = 0;
    for (const auto& child : split_children(code, pos)) build(child, self);
  };
  if (!code_.empty()) build(code_, 0);
  return RootedTree(std::move(parents));
}

std::vector<TreeShape> binary_tree_shapes(int n) {
  if (n <= 0) return {TreeShape()};
  // by_size[m] holds the codes of all binary shapes with m vertices.
  std::vector<std::vector<std::string>> by_size(static_cast<std::size_t>(n) + 1);
  by_size[1] = {"()"};
  for (int m = 2; m <= n; ++m) {
    std::set<std::string> codes;
    for (const auto& c : by_size[m - 1]) codes.insert("(" + c + ")");
    for (int i = 1; 2 * i <= m - 1; ++i) {
      for (const auto& a : by_size[i]) {
        for (const auto& b : by_size[m - 1 - i]) {
          codes.insert(a < b ? "(" + a + b + ")" : "(" + b + a + ")");
        }
      }
    }
    by_size[m].assign(codes.begin(), codes.end());
  }
  std::vector<TreeShape> out;
  for (auto& c : by_size[n]) out.push_back(TreeShape::from_code(c));
  return out;
}

HasseDiagram hasse(const SemilatticeOrder& s) {
  return HasseDiagram{s.size(), s.order().covers()};
}

std::optional<RootedTree> hasse_tree(const SemilatticeOrder& s) {
  const int n = s.size();
  if (n == 0) return RootedTree();
  std::vector<int> parents(static_cast<std::size_t>(n), 0);
  const int top = s.top();
  for (auto [lo, hi] : hasse(s).edges) {
    if (parents[lo - 1] != 0) return std::nullopt;  // two upper covers
    parents[lo - 1] = hi;
  }
  for (int v = 1; v <= n; ++v) {
    if (v != top && parents[v - 1] == 0) return std::nullopt;
  }
  return RootedTree(std::move(parents));
}

SemilatticeOrder semilattice_from_tree(const RootedTree& tree) {
  std::vector<std::pair<int, int>> pairs;
  for (int v = 1; v <= tree.size(); ++v) {
    if (tree.parent(v) != 0) pairs.emplace_back(v, tree.parent(v));
  }
  return SemilatticeOrder::from_order(PartialOrder::from_pairs(tree.size(), pairs));
}

bool is_binary_tree_semilattice(const SemilatticeOrder& s) {
  const auto tree = hasse_tree(s);
  return tree && tree->is_binary();
}

bool satisfies_structure_condition(const SemilatticeOrder& s, const TotalOrder& t) {
  const auto tree = hasse_tree(s);
  if (!tree || !tree->is_binary()) {
    throw NotBinaryTree("structure condition needs a binary-tree Hasse diagram");
  }
  const int n = s.size();
  for (int x = 1; x <= n; ++x) {
    for (int child : tree->children(x)) {
      const auto ideal = principal_ideal(s, child);
      int lowest = n + 1;  // t-rank of the ideal's lowest element
      int highest = 0;
      for (int y : ideal) {
        lowest = std::min(lowest, t.rank(y));
        highest = std::max(highest, t.rank(y));
      }
      // Strictly above the whole ideal: positions highest+1..n; its t-min is
      // position highest+1. Dually for the strict lower bounds.
      const bool just_above = highest < n && t.at(highest + 1) == x;
      const bool just_below = lowest > 1 && t.at(lowest - 1) == x;
      if (!just_above && !just_below) return false;
    }
  }
  return true;
}

bool theorem_main_check(const SemilatticeOrder& s, const TotalOrder& t) {
  return is_binary_tree_semilattice(s) && satisfies_structure_condition(s, t);
}

SemilatticeOrder canonical_nondecreasing_labeling(const TreeShape& shape) {
  const RootedTree tree = shape.realize();
  if (!tree.is_binary()) throw NotBinaryTree("canonical labeling needs a binary tree shape");
  const int n = tree.size();
  std::vector<int> label(static_cast<std::size_t>(n), 0);
  // Assign labels offset+1..offset+|subtree(v)| to the subtree of v.
  std::function<void(int, int)> assign = [&](int v, int offset) {
    const auto& kids = tree.children(v);
    const int size = static_cast<int>(tree.subtree(v).size());
    if (kids.empty()) {
      label[v - 1] = offset + 1;
    } else if (kids.size() == 1) {
      assign(kids[0], offset);
      label[v - 1] = offset + size;
    } else {
      const int first = static_cast<int>(tree.subtree(kids[0]).size());
      assign(kids[0], offset);
      label[v - 1] = offset + first + 1;
      assign(kids[1], offset + first + 1);
    }
  };
  if (n > 0) assign(tree.root(), 0);
  std::vector<int> parents(static_cast<std::size_t>(n), 0);
  for (int v = 1; v <= n; ++v) {
    if (tree.parent(v) != 0) parents[label[v - 1] - 1] = label[tree.parent(v) - 1];
  }
  return semilattice_from_tree(RootedTree(std::move(parents)));
}

bool is_smooth(const OpTable& f) {
  const int n = f.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const int v = f(x, y);
      if (x < n && (f(x + 1, y) < v || f(x + 1, y) > v + 1)) return false;
      if (y < n && (f(x, y + 1) < v || f(x, y + 1) > v + 1)) return false;
    }
  }
  return true;
}

std::optional<int> smooth_order_characterization(const SemilatticeOrder& s) {
  const int n = s.size();
  for (int a = 1; a <= n; ++a) {
    bool match = true;
    for (int x = 1; x <= n && match; ++x) {
      for (int y = 1; y <= n && match; ++y) {
        const bool expected = x == y || (x < y && y <= a) || (a <= y && y < x);
        match = s.leq(x, y) == expected;
      }
    }
    if (match) return a;
  }
  return std::nullopt;
}

bool neutral_iff_single_peaked_check(const SemilatticeOrder& s, const TotalOrder& t) {
  const OpTable join = join_op(s);
  if (!is_preserving(join, t)) {
    throw PreconditionViolated("neutral element check needs a t-preserving join");
  }
  return neutral_element(join).has_value();
}

std::string hasse_dot(const SemilatticeOrder& s, const std::string& name) {
  std::ostringstream out;
  out << "digraph " << name << " {\n";
  out << "  rankdir=BT;\n";
  for (int v = 1; v <= s.size(); ++v) out << "  " << v << ";\n";
  for (auto [lo, hi] : hasse(s).edges) out << "  " << lo << " -> " << hi << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace semichain

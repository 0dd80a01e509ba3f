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

#include "semichain/construction.hpp"

#include "semichain/errors.hpp"
#include "semichain/hasse.hpp"

namespace semichain {
namespace {

using Chain = std::vector<int>;

enum class Mode { Nondecreasing, Internal, Ci };

RootedTree binary_hasse_tree(const SemilatticeOrder& s) {
  auto tree = hasse_tree(s);
  if (!tree || !tree->is_binary()) throw NotBinaryTree("Hasse diagram is not a binary tree");
  return std::move(*tree);
}

Chain concat(std::initializer_list<const Chain*> parts) {
  Chain out;
  for (const Chain* p : parts) out.insert(out.end(), p->begin(), p->end());
  return out;
}

std::vector<Chain> chains(const RootedTree& tree, int r, Mode mode) {
  const auto& kids = tree.children(r);
  const Chain root{r};
  std::vector<Chain> out;
  if (kids.empty()) {
    out.push_back(root);
  } else if (kids.size() == 1) {
    for (const Chain& l : chains(tree, kids[0], mode)) {
      if (mode == Mode::Internal) {
        for (std::size_t pos = 0; pos <= l.size(); ++pos) {
          Chain c(l.begin(), l.begin() + static_cast<std::ptrdiff_t>(pos));
          c.push_back(r);
          c.insert(c.end(), l.begin() + static_cast<std::ptrdiff_t>(pos), l.end());
          out.push_back(std::move(c));
        }
      } else {
        out.push_back(concat({&l, &root}));
        out.push_back(concat({&root, &l}));
      }
    }
  } else {
    const auto left = chains(tree, kids[0], mode);
    const auto right = chains(tree, kids[1], mode);
    for (const Chain& l1 : left) {
      for (const Chain& l2 : right) {
        out.push_back(concat({&l1, &root, &l2}));
        out.push_back(concat({&l2, &root, &l1}));
        if (mode == Mode::Ci) {
          out.push_back(concat({&l1, &l2, &root}));
          out.push_back(concat({&root, &l1, &l2}));
          out.push_back(concat({&l2, &l1, &root}));
          out.push_back(concat({&root, &l2, &l1}));
        }
      }
    }
  }
  return out;
}

std::vector<TotalOrder> orders_for(const SemilatticeOrder& s, Mode mode) {
  const RootedTree tree = binary_hasse_tree(s);
  if (s.size() == 0) return {TotalOrder()};
  std::vector<TotalOrder> out;
  for (auto& c : chains(tree, tree.root(), mode)) out.push_back(TotalOrder::from_chain(std::move(c)));
  return out;
}

// gamma (Internal) or eta (Ci) of the subtree rooted at r.
BigCount recurrence(const RootedTree& tree, int r, Mode mode) {
  const auto& kids = tree.children(r);
  if (kids.empty()) return 1;
  const int i = static_cast<int>(kids.size());
  BigCount product = 1;
  for (int c : kids) product *= recurrence(tree, c, mode);
  if (mode == Mode::Internal) {
    const int m = static_cast<int>(tree.subtree(r).size());
    return (i == 1 ? BigCount(m) : BigCount(2)) * product;
  }
  return (i == 1 ? BigCount(2) : BigCount(6)) * product;
}

}  // namespace

std::vector<TotalOrder> total_orders_nondecreasing(const SemilatticeOrder& s) {
  return orders_for(s, Mode::Nondecreasing);
}

std::vector<TotalOrder> total_orders_internal(const SemilatticeOrder& s) {
  return orders_for(s, Mode::Internal);
}

std::vector<TotalOrder> total_orders_ci(const SemilatticeOrder& s) {
  return orders_for(s, Mode::Ci);
}

BigCount count_nondecreasing_orders(const SemilatticeOrder& s) {
  const RootedTree tree = binary_hasse_tree(s);
  if (s.size() == 0) return 1;
  return BigCount(1) << (s.size() - tree.leaf_count());
}

BigCount count_internal_orders(const SemilatticeOrder& s) {
  const RootedTree tree = binary_hasse_tree(s);
  return s.size() == 0 ? BigCount(1) : recurrence(tree, tree.root(), Mode::Internal);
}

BigCount count_ci_orders(const SemilatticeOrder& s) {
  const RootedTree tree = binary_hasse_tree(s);
  return s.size() == 0 ? BigCount(1) : recurrence(tree, tree.root(), Mode::Ci);
}

}  // namespace semichain

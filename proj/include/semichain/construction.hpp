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

#ifndef SEMICHAIN_CONSTRUCTION_HPP
#define SEMICHAIN_CONSTRUCTION_HPP

#include <vector>

#include "semichain/enumeration.hpp"
#include "semichain/orders.hpp"
#include "semichain/total_order.hpp"

namespace semichain {

// Total orders attached to a binary-tree semilattice, built recursively over
// its Hasse tree. For a vertex r with children c1 < c2 (by label) and
// sub-chains L1, L2 the emission order is:
//   splice A: L1 r L2, then splice B: L2 r L1;
//   one child: r on top, then r at the bottom (nondecreasing / CI), or r at
//   each insertion position from the bottom up (internal);
//   CI, two children: A, B, L1 L2 r, r L1 L2, L2 L1 r, r L2 L1.
// Child sub-chains vary in nested loops, c1's outermost. Every function
// throws NotBinaryTree if the Hasse diagram is not a binary tree.

/// All t for which `s` is nondecreasing.
std::vector<TotalOrder> total_orders_nondecreasing(const SemilatticeOrder& s);

/// All t for which `s` is internal.
std::vector<TotalOrder> total_orders_internal(const SemilatticeOrder& s);

/// All t for which `s` has the CI-property.
std::vector<TotalOrder> total_orders_ci(const SemilatticeOrder& s);

/// 2^(n - L), L the number of minimal elements.
BigCount count_nondecreasing_orders(const SemilatticeOrder& s);

/// gamma = 2^(i-1) m^(2-i) gamma(C1) gamma(C2) at a root with i children
/// and a subtree of m vertices; 1 for subtrees with at most one vertex.
BigCount count_internal_orders(const SemilatticeOrder& s);

/// eta = 3^(i-1) 2 eta(C1) eta(C2); 1 for subtrees with at most one vertex.
BigCount count_ci_orders(const SemilatticeOrder& s);

}  // namespace semichain

#endif  // SEMICHAIN_CONSTRUCTION_HPP

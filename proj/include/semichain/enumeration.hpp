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

#ifndef SEMICHAIN_ENUMERATION_HPP
#define SEMICHAIN_ENUMERATION_HPP

#include <functional>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "semichain/core_ops.hpp"
#include "semichain/orders.hpp"

namespace semichain {

/// Exact nonnegative count.
using BigCount = boost::multiprecision::cpp_int;

/// Catalan numbers: alpha(0) = 1, alpha(n) = sum_{i=1..n} alpha(n-i) alpha(i-1).
/// Counts the semilattice orders on {1..n} nondecreasing for the natural order.
BigCount alpha(int n);

/// Isomorphism types of those orders (unordered binary trees on n vertices),
/// by the even/odd split recurrence.
BigCount tau(int n);

/// beta(n) = sum_{i=1..n-2} beta(i) beta(n-i-1) + n beta(n-1), beta(0) = beta(1) = 1.
/// Counts the orders internal for the natural order with the linear filter property.
BigCount beta(int n);

/// delta(n) = sum_{i=1..n} delta(i-1) delta(n-i)
///          + sum_{j=1..n-2} C(n-1, j) delta(j) delta(n-j-1), delta(0) = 1.
/// Counts binary-tree semilattice orders with the CI-property for the natural order.
BigCount delta(int n);

BigCount binomial(int n, int k);

inline constexpr int kDefaultGenerationBound = 10;

/// Calls `visit` on every semilattice order on {1..n} nondecreasing for the
/// natural order, each once. The top r runs over 1..n ascending; for an
/// interior r the orders on [1, r-1] form the outer loop and those on
/// [r+1, n] the inner one. Throws BoundExceeded if n > bound.
void for_each_nondecreasing_order(int n, const std::function<void(const SemilatticeOrder&)>& visit,
                                  int bound = kDefaultGenerationBound);

std::vector<SemilatticeOrder> generate_nondecreasing_orders(int n,
                                                            int bound = kDefaultGenerationBound);

/// Every symmetric, idempotent, natural-order-preserving table on {1..n}
/// (upper triangle filled row by row with incremental monotonicity pruning).
/// Throws BoundExceeded for n > 6.
void for_each_monotone_idempotent_symmetric_table(int n,
                                                  const std::function<void(const OpTable&)>& visit);

/// Every semilattice order on {1..n} whose Hasse diagram is a binary tree,
/// each once: binary shapes times all labelings, deduplicated.
/// Throws BoundExceeded for n > 7.
void for_each_binary_tree_order(int n, const std::function<void(const SemilatticeOrder&)>& visit);

/// Every semilattice order on {1..n}, by filtering all partial orders.
/// Throws BoundExceeded for n > 5.
void for_each_semilattice_order(int n, const std::function<void(const SemilatticeOrder&)>& visit);

/// Predicates for brute_count_operations.
enum class Property : unsigned {
  Associative = 1u << 0,   // table domain: filter by brute-force associativity
  BinaryTree = 1u << 1,    // tree domain (always true there)
  CiProperty = 1u << 2,
  Internal = 1u << 3,
  LinearFilter = 1u << 4,
  Nondecreasing = 1u << 5,
};

class PropertySet {
 public:
  constexpr PropertySet() = default;
  constexpr PropertySet(Property p) : bits_(static_cast<unsigned>(p)) {}  // NOLINT

  constexpr bool has(Property p) const { return (bits_ & static_cast<unsigned>(p)) != 0; }
  constexpr unsigned bits() const { return bits_; }

  friend constexpr PropertySet operator|(PropertySet a, PropertySet b) {
    PropertySet s;
    s.bits_ = a.bits_ | b.bits_;
    return s;
  }

 private:
  unsigned bits_ = 0;
};

constexpr PropertySet operator|(Property a, Property b) {
  return PropertySet(a) | PropertySet(b);
}

/// Exhaustive oracle count. With Associative, counts associative tables
/// among the symmetric idempotent preserving ones (n <= 5). Otherwise counts
/// binary-tree semilattice orders (n <= 7) with every requested property
/// for the natural order. Throws BoundExceeded past those bounds.
BigCount brute_count_operations(int n, PropertySet props);

/// Semilattice orders on {1..n} internal for the natural order, by brute
/// force over all partial orders. Throws BoundExceeded for n > 5.
BigCount count_internal_only(int n);

}  // namespace semichain

#endif  // SEMICHAIN_ENUMERATION_HPP

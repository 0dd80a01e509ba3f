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

#ifndef SEMICHAIN_ORDERS_HPP
#define SEMICHAIN_ORDERS_HPP

#include <optional>
#include <tuple>
#include <utility>
#include <vector>

#include "semichain/core_ops.hpp"
#include "semichain/total_order.hpp"

namespace semichain {

/// A partial order on {1..n} as a dense relation matrix, leq(x, y) iff
/// x precedes-or-equals y. Construction validates reflexivity,
/// antisymmetry and transitivity; the value is immutable afterwards.
class PartialOrder {
 public:
  PartialOrder() = default;

  /// `leq` is row-major n x n. Throws PreconditionViolated if the relation
  /// is not a partial order.
  static PartialOrder from_matrix(int n, std::vector<char> leq);

  /// Reflexive-transitive closure of the pairs (x, y) meaning x <= y.
  /// Throws PreconditionViolated on an out-of-range element or a cycle.
  static PartialOrder from_pairs(int n, const std::vector<std::pair<int, int>>& pairs);

  /// The order x <= y iff t.leq(x, y).
  static PartialOrder from_total(const TotalOrder& t);

  int size() const noexcept { return n_; }

  bool leq(int x, int y) const {
    return leq_[static_cast<std::size_t>(x - 1) * n_ + (y - 1)] != 0;
  }
  bool less(int x, int y) const { return x != y && leq(x, y); }
  bool comparable(int x, int y) const { return leq(x, y) || leq(y, x); }
  bool incomparable(int x, int y) const { return !comparable(x, y); }

  bool is_total() const;

  /// The pairs (x, y) with x covered by y, in lexicographic order.
  std::vector<std::pair<int, int>> covers() const;

  friend bool operator==(const PartialOrder&, const PartialOrder&) = default;
  friend auto operator<=>(const PartialOrder& a, const PartialOrder& b) {
    return std::tie(a.n_, a.leq_) <=> std::tie(b.n_, b.leq_);
  }

 private:
  int n_ = 0;
  std::vector<char> leq_;
};

/// A join-semilattice order: a partial order together with its table of
/// pairwise suprema. Both are checked for consistency on construction.
class SemilatticeOrder {
 public:
  SemilatticeOrder() = default;

  /// Throws NotSemilattice if some pair has no least upper bound.
  static SemilatticeOrder from_order(PartialOrder order);
  static std::optional<SemilatticeOrder> try_from_order(PartialOrder order);

  int size() const noexcept { return order_.size(); }
  const PartialOrder& order() const noexcept { return order_; }

  bool leq(int x, int y) const { return order_.leq(x, y); }
  bool less(int x, int y) const { return order_.less(x, y); }
  bool incomparable(int x, int y) const { return order_.incomparable(x, y); }

  int join(int x, int y) const {
    return join_[static_cast<std::size_t>(x - 1) * size() + (y - 1)];
  }

  /// The greatest element (requires n >= 1).
  int top() const;

  friend bool operator==(const SemilatticeOrder& a, const SemilatticeOrder& b) {
    return a.order_ == b.order_;
  }
  friend auto operator<=>(const SemilatticeOrder& a, const SemilatticeOrder& b) {
    return a.order_ <=> b.order_;
  }

 private:
  PartialOrder order_;
  std::vector<int> join_;
};

/// x <=_F y iff F(x, y) = y. Throws NotSemilattice unless F is
/// associative, symmetric and idempotent.
SemilatticeOrder order_from_op(const OpTable& f);

OpTable join_op(const SemilatticeOrder& s);

/// {y : y <= x}, ascending.
std::vector<int> principal_ideal(const SemilatticeOrder& s, int x);

/// {y : x <= y}, ascending.
std::vector<int> principal_filter(const SemilatticeOrder& s, int x);

/// a <=_t b <=_t c implies b <= a v c.
bool has_ci_property(const SemilatticeOrder& s, const TotalOrder& t);

/// No a <_t b <_t c with a = b v c or c = a v b.
bool is_internal_for(const SemilatticeOrder& s, const TotalOrder& t);

/// CI-property and internality together.
bool is_nondecreasing_for(const SemilatticeOrder& s, const TotalOrder& t);

/// Every filter is a chain, checked as: no incomparable pair has a common
/// lower bound.
bool has_linear_filter_property(const SemilatticeOrder& s);

/// Whether the chain `p` (read as a preference order, larger = higher) is
/// single-peaked along `t`: for a <=_t b <=_t c, b <=_p max_p(a, c).
bool is_single_peaked(const TotalOrder& p, const TotalOrder& t);

/// The chain `t` viewed as a semilattice order.
SemilatticeOrder chain_order(const TotalOrder& t);

}  // namespace semichain

#endif  // SEMICHAIN_ORDERS_HPP

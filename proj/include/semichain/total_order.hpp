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

#ifndef SEMICHAIN_TOTAL_ORDER_HPP
#define SEMICHAIN_TOTAL_ORDER_HPP

#include <span>
#include <vector>

namespace semichain {

/// A chain on {1..n}, stored both as the bottom-to-top listing of elements
/// and as the inverse rank map. The identity permutation is the natural
/// order.
class TotalOrder {
 public:
  TotalOrder() = default;

  /// Natural order 1 < 2 < ... < n.
  static TotalOrder natural(int n);

  /// Build from the elements listed bottom to top. Throws
  /// PreconditionViolated unless `chain` is a permutation of {1..n}.
  static TotalOrder from_chain(std::vector<int> chain);

  /// Build from ranks: `ranks[x-1]` is the 1-based position of x.
  static TotalOrder from_ranks(std::span<const int> ranks);

  int size() const noexcept { return static_cast<int>(chain_.size()); }

  /// 1-based position of element x.
  int rank(int x) const { return rank_[x - 1]; }

  /// Element at 1-based position p.
  int at(int p) const { return chain_[p - 1]; }

  bool less(int x, int y) const { return rank(x) < rank(y); }
  bool leq(int x, int y) const { return rank(x) <= rank(y); }

  int bottom() const { return chain_.front(); }
  int top() const { return chain_.back(); }

  bool is_natural() const noexcept;

  /// The dual chain.
  TotalOrder reversed() const;

  const std::vector<int>& chain() const noexcept { return chain_; }

  friend bool operator==(const TotalOrder&, const TotalOrder&) = default;
  friend auto operator<=>(const TotalOrder& a, const TotalOrder& b) {
    return a.chain_ <=> b.chain_;
  }

 private:
  std::vector<int> chain_;
  std::vector<int> rank_;
};

/// Every total order on {1..n}, in lexicographic order of their chains.
std::vector<TotalOrder> all_total_orders(int n);

}  // namespace semichain

#endif  // SEMICHAIN_TOTAL_ORDER_HPP

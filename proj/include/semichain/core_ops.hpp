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

#ifndef SEMICHAIN_CORE_OPS_HPP
#define SEMICHAIN_CORE_OPS_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "semichain/total_order.hpp"

namespace semichain {

/// A binary operation F on {1..n}, stored densely as an n x n table.
/// Entry (x, y) holds F(x, y); every entry lies in {1..n}. The empty
/// operation (n = 0) is allowed and carries an empty table.
class OpTable {
 public:
  OpTable() = default;

  /// `values` is row-major: values[(x-1)*n + (y-1)] = F(x, y).
  /// Throws PreconditionViolated on a size mismatch or an entry outside 1..n.
  OpTable(int n, std::vector<int> values);

  template <class Fn>
  static OpTable from_function(int n, Fn&& f) {
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(n) * n);
    for (int x = 1; x <= n; ++x) {
      for (int y = 1; y <= n; ++y) values.push_back(f(x, y));
    }
    return OpTable(n, std::move(values));
  }

  int size() const noexcept { return n_; }

  int operator()(int x, int y) const {
    return values_[static_cast<std::size_t>(x - 1) * n_ + (y - 1)];
  }

  std::span<const int> values() const noexcept { return values_; }

  /// The restriction of F to [lo, hi]^2, relabelled onto {1..hi-lo+1}.
  /// Throws PreconditionViolated if some cell leaves [lo, hi].
  OpTable restrict_to(int lo, int hi) const;

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  int n_ = 0;
  std::vector<int> values_;
};

/// deg_F(z) = |F^{-1}(z)| for z in 1..n.
struct DegreeSequence {
  std::vector<std::int64_t> counts;

  std::int64_t operator[](int z) const { return counts[z - 1]; }
  int size() const noexcept { return static_cast<int>(counts.size()); }
  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;
};

/// max(x, y) on {1..n}, the join of the natural chain.
OpTable max_table(int n);

bool is_associative(const OpTable& f);
bool is_symmetric(const OpTable& f);
bool is_idempotent(const OpTable& f);
bool is_quasitrivial(const OpTable& f);

/// Monotone in each argument with respect to `t`.
bool is_preserving(const OpTable& f, const TotalOrder& t);

/// Shorthand for is_preserving against the natural order.
bool is_preserving(const OpTable& f);

/// min_t(x, y) <=_t F(x, y) <=_t max_t(x, y) for all x, y.
bool is_internal_op(const OpTable& f, const TotalOrder& t);

/// The absorbing element, found by a linear scan.
std::optional<int> zero_element(const OpTable& f);

std::optional<int> neutral_element(const OpTable& f);

DegreeSequence degree_sequence(const OpTable& f);

}  // namespace semichain

#endif  // SEMICHAIN_CORE_OPS_HPP

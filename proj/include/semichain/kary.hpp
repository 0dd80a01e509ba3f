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

#ifndef SEMICHAIN_KARY_HPP
#define SEMICHAIN_KARY_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "semichain/core_ops.hpp"
#include "semichain/enumeration.hpp"
#include "semichain/total_order.hpp"

namespace semichain {

/// Largest n^k a KaryOpTable may hold.
inline constexpr std::int64_t kMaxKaryCells = 1 << 24;

/// Largest n^(2k-1) is_kary_associative will scan.
inline constexpr std::int64_t kMaxAssociativityTuples = 1 << 26;

/// A k-ary operation on {1..n}, dense in row-major tuple order (last
/// argument fastest).
class KaryOpTable {
 public:
  KaryOpTable() = default;

  /// Throws PreconditionViolated for k < 2, a size mismatch or an entry
  /// outside 1..n, and BoundExceeded when n^k exceeds kMaxKaryCells.
  KaryOpTable(int n, int k, std::vector<int> values);

  template <class Fn>
  static KaryOpTable from_function(int n, int k, Fn&& f) {
    const std::int64_t cells = checked_cells(n, k);
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(cells));
    std::vector<int> tuple(static_cast<std::size_t>(k), 1);
    for (std::int64_t c = 0; c < cells; ++c) {
      values.push_back(f(std::span<const int>(tuple)));
      advance(tuple, n);
    }
    return KaryOpTable(n, k, std::move(values));
  }

  int size() const noexcept { return n_; }
  int arity() const noexcept { return k_; }

  int operator()(std::span<const int> args) const { return values_[index(args)]; }

  std::span<const int> values() const noexcept { return values_; }

  std::size_t index(std::span<const int> args) const {
    std::size_t idx = 0;
    for (int x : args) idx = idx * static_cast<std::size_t>(n_) + static_cast<std::size_t>(x - 1);
    return idx;
  }

  friend bool operator==(const KaryOpTable&, const KaryOpTable&) = default;

  /// n^k, or BoundExceeded past kMaxKaryCells.
  static std::int64_t checked_cells(int n, int k);

  /// Odometer step over {1..n}^k, last position fastest. Returns false
  /// after wrapping around.
  static bool advance(std::vector<int>& tuple, int n);

 private:
  int n_ = 0;
  int k_ = 2;
  std::vector<int> values_;
};

/// Throws BoundExceeded when n^(2k-1) exceeds kMaxAssociativityTuples.
bool is_kary_associative(const KaryOpTable& f);
bool is_kary_symmetric(const KaryOpTable& f);
bool is_kary_idempotent(const KaryOpTable& f);
bool is_kary_preserving(const KaryOpTable& f, const TotalOrder& t);

/// H_k by left nesting: H_2 = H, H_{j+1}(x_1..x_{j+1}) = H(H_j(x_1..x_j), x_{j+1}).
/// Throws NotAssociative if H is not associative.
KaryOpTable extend(const OpTable& h, int k);

/// G(x, y) = F(x, ..., x, y). Requires F associative, idempotent, symmetric
/// and preserving for the natural order (PreconditionViolated otherwise);
/// throws ReductionMismatch if extend(G, k) differs from F.
OpTable reduce(const KaryOpTable& f);

/// Counts k-ary associative, idempotent, symmetric, natural-order-preserving
/// tables on {1..n} exhaustively. Throws BoundExceeded when the number of
/// k-element multisets over {1..n} exceeds 20.
BigCount count_kary_semilattice_tables(int n, int k);

}  // namespace semichain

#endif  // SEMICHAIN_KARY_HPP

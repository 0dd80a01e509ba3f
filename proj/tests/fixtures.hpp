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

#ifndef SEMICHAIN_TESTS_FIXTURES_HPP
#define SEMICHAIN_TESTS_FIXTURES_HPP

// Worked examples used across the test suites.

#include <array>
#include <utility>
#include <vector>

#include "semichain/core_ops.hpp"
#include "semichain/orders.hpp"
#include "semichain/total_order.hpp"

namespace semichain::fixtures {

inline OpTable rows(int n, std::vector<std::vector<int>> r) {
  std::vector<int> values;
  for (const auto& row : r) values.insert(values.end(), row.begin(), row.end());
  return OpTable(n, std::move(values));
}

inline SemilatticeOrder order(int n, std::vector<std::pair<int, int>> pairs) {
  return SemilatticeOrder::from_order(PartialOrder::from_pairs(n, pairs));
}

inline TotalOrder chain(std::vector<int> c) { return TotalOrder::from_chain(std::move(c)); }

/// Symmetric idempotent monotone, zero element 4, not associative: level
/// sets {11,12,21}, {13,31,22}, {23,32,33} and the last row/column.
inline OpTable four_element_counterexample() {
  return rows(4, {{1, 1, 2, 4}, {1, 2, 3, 4}, {2, 3, 3, 4}, {4, 4, 4, 4}});
}

/// Idempotent monotone on {1,2,3} with deg(2) = 5 and no zero element.
inline OpTable degree_five_table() { return rows(3, {{1, 2, 2}, {2, 2, 3}, {2, 3, 3}}); }

/// Join of 1 < 2 > 3 with 1 || 3: value 2 everywhere except the corners.
inline OpTable peak_table() { return rows(3, {{1, 2, 2}, {2, 2, 2}, {2, 2, 3}}); }

/// 2 <= 1, 3 <= 1, 2 || 3: CI for the natural order but not internal.
inline SemilatticeOrder top_one_cherry() { return order(3, {{2, 1}, {3, 1}}); }

/// The chain 1 < 3 < 2: internal for the natural order but not CI.
inline SemilatticeOrder chain_132() { return order(3, {{1, 3}, {3, 2}}); }

/// 1 <= 3, 4 <= 3, 3 <= 2 on {1..4}: linear filters, not CI.
inline SemilatticeOrder linear_filter_not_ci() { return order(4, {{1, 3}, {4, 3}, {3, 2}}); }

/// Elements a, e, c, d, b relabelled 1..5 along the chain; a v c = e,
/// e v b = d. Internal for the natural order with a v b = b v c.
inline SemilatticeOrder internal_shared_join() { return order(5, {{1, 2}, {3, 2}, {2, 4}, {5, 4}}); }

/// Five-element binary tree r > a, a > b, a > c, c > d with a=1, b=2, c=3,
/// d=4, r=5.
inline SemilatticeOrder five_tree() { return order(5, {{1, 5}, {2, 1}, {3, 1}, {4, 3}}); }
inline constexpr int kA = 1, kB = 2, kC = 3, kD = 4, kR = 5;

/// The eight total orders for which five_tree() is nondecreasing.
inline std::vector<TotalOrder> five_tree_orders() {
  std::vector<std::vector<int>> listed{
      {kR, kB, kA, kC, kD}, {kR, kB, kA, kD, kC}, {kR, kC, kD, kA, kB}, {kR, kD, kC, kA, kB}};
  std::vector<TotalOrder> out;
  for (const auto& c : listed) {
    out.push_back(chain(c));
    out.push_back(chain(c).reversed());
  }
  return out;
}

/// The 14 nondecreasing orders on {1..4}, built from the three tree shapes:
/// chain a < b < c < d; t > z, t > y > x; r > w > u, w > v.
inline std::vector<SemilatticeOrder> fourteen_orders() {
  std::vector<SemilatticeOrder> out;
  for (auto [u, v, w, r] : std::vector<std::array<int, 4>>{{1, 3, 2, 4}, {2, 4, 3, 1}}) {
    out.push_back(order(4, {{u, w}, {v, w}, {w, r}}));
  }
  for (auto [x, y, z, t] :
       std::vector<std::array<int, 4>>{{3, 4, 1, 2}, {4, 3, 1, 2}, {1, 2, 4, 3}, {2, 1, 4, 3}}) {
    out.push_back(order(4, {{x, y}, {y, t}, {z, t}}));
  }
  for (auto [a, b, c, d] : std::vector<std::array<int, 4>>{{1, 2, 3, 4},
                                                          {2, 1, 3, 4},
                                                          {2, 3, 1, 4},
                                                          {2, 3, 4, 1},
                                                          {3, 4, 2, 1},
                                                          {3, 2, 1, 4},
                                                          {3, 2, 4, 1},
                                                          {4, 3, 2, 1}}) {
    out.push_back(order(4, {{a, b}, {b, c}, {c, d}}));
  }
  return out;
}

}  // namespace semichain::fixtures

#endif  // SEMICHAIN_TESTS_FIXTURES_HPP

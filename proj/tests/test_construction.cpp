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

#include <doctest.h>

#include <set>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semichain/construction.hpp"
#include "semichain/enumeration.hpp"
#include "semichain/errors.hpp"
#include "semichain/hasse.hpp"

using namespace semichain;
namespace fx = semichain::fixtures;

namespace {

template <class Pred>
std::set<TotalOrder> filtered(int n, Pred pred) {
  std::set<TotalOrder> out;
  for (const auto& t : all_total_orders(n))
    if (pred(t)) out.insert(t);
  return out;
}

std::set<TotalOrder> as_set(const std::vector<TotalOrder>& v) { return {v.begin(), v.end()}; }

int minimal_count(const SemilatticeOrder& s) {
  int count = 0;
  for (int x = 1; x <= s.size(); ++x)
    if (principal_ideal(s, x).size() == 1) ++count;
  return count;
}

}  // namespace

TEST_CASE("five-element tree yields the eight listed orders") {
  const auto s = fx::five_tree();
  const auto listed = fx::five_tree_orders();
  const auto gen = total_orders_nondecreasing(s);
  CHECK(gen.size() == 8);
  CHECK(as_set(gen) == as_set(listed));
  CHECK(count_nondecreasing_orders(s) == 8);
  for (const auto& t : listed) CHECK(is_nondecreasing_for(s, t));
}

TEST_CASE("generators match filtered permutations") {
  for (int n = 1; n <= 6; ++n) {
    for_each_binary_tree_order(n, [&](const SemilatticeOrder& s) {
      const auto nd = total_orders_nondecreasing(s);
      const auto in = total_orders_internal(s);
      const auto ci = total_orders_ci(s);
      CHECK(as_set(nd).size() == nd.size());
      CHECK(as_set(in).size() == in.size());
      CHECK(as_set(ci).size() == ci.size());
      CHECK(as_set(nd) == filtered(n, [&](const TotalOrder& t) { return is_nondecreasing_for(s, t); }));
      CHECK(as_set(in) == filtered(n, [&](const TotalOrder& t) { return is_internal_for(s, t); }));
      CHECK(as_set(ci) == filtered(n, [&](const TotalOrder& t) { return has_ci_property(s, t); }));
      CHECK(nd.size() == count_nondecreasing_orders(s));
      CHECK(in.size() == count_internal_orders(s));
      CHECK(ci.size() == count_ci_orders(s));
      CHECK(count_nondecreasing_orders(s) == BigCount(1) << (n - minimal_count(s)));
    });
  }
}

TEST_CASE("emission order") {
  // Cherry 1, 3 below 2.
  const auto cherry = fx::order(3, {{1, 2}, {3, 2}});
  const auto nd = total_orders_nondecreasing(cherry);
  REQUIRE(nd.size() == 2);
  CHECK(nd[0].chain() == std::vector<int>{1, 2, 3});
  CHECK(nd[1].chain() == std::vector<int>{3, 2, 1});
  const auto ci = total_orders_ci(cherry);
  REQUIRE(ci.size() == 6);
  CHECK(ci[2].chain() == std::vector<int>{1, 3, 2});
  CHECK(ci[3].chain() == std::vector<int>{2, 1, 3});
  CHECK(ci[4].chain() == std::vector<int>{3, 1, 2});
  CHECK(ci[5].chain() == std::vector<int>{2, 3, 1});
  // Chain 1 < 2 < 3: one child at every vertex.
  const auto chain = fx::order(3, {{1, 2}, {2, 3}});
  const auto in = total_orders_internal(chain);
  REQUIRE(in.size() == 6);
  CHECK(in[0].chain() == std::vector<int>{3, 2, 1});
  CHECK(total_orders_nondecreasing(chain)[0].chain() == std::vector<int>{1, 2, 3});
}

TEST_CASE("counts on shapes") {
  // Every labeling of a chain is internal for every t; a chain has 2^(n-1)
  // nondecreasing orders and 2^(n-1) CI orders.
  const auto chain = fx::order(4, {{1, 2}, {2, 3}, {3, 4}});
  CHECK(count_internal_orders(chain) == 24);
  CHECK(count_nondecreasing_orders(chain) == 8);
  CHECK(count_ci_orders(chain) == 8);
  const auto cherry = fx::order(3, {{1, 2}, {3, 2}});
  CHECK(count_internal_orders(cherry) == 2);
  CHECK(count_ci_orders(cherry) == 6);
}

TEST_CASE("non-tree inputs are rejected") {
  const auto diamond = fx::order(4, {{1, 2}, {1, 3}, {2, 4}, {3, 4}});
  CHECK_THROWS_AS(total_orders_nondecreasing(diamond), NotBinaryTree);
  CHECK_THROWS_AS(total_orders_internal(diamond), NotBinaryTree);
  CHECK_THROWS_AS(total_orders_ci(diamond), NotBinaryTree);
  const auto claw = fx::order(4, {{1, 4}, {2, 4}, {3, 4}});
  CHECK_THROWS_AS(count_nondecreasing_orders(claw), NotBinaryTree);
  CHECK_THROWS_AS(count_internal_orders(claw), NotBinaryTree);
  CHECK_THROWS_AS(count_ci_orders(claw), NotBinaryTree);
}

TEST_CASE("binary tree orders nondecreasing for the natural order") {
  for (int n = 1; n <= 5; ++n) {
    BigCount by_orders = 0;
    for_each_binary_tree_order(n, [&](const SemilatticeOrder& s) {
      if (is_nondecreasing_for(s, TotalOrder::natural(n))) ++by_orders;
    });
    CHECK(by_orders == alpha(n));
  }
}

TEST_CASE("nondecreasing orders are internal and CI, and closed under reversal") {
  for (int n = 1; n <= 6; ++n)
    for_each_binary_tree_order(n, [&](const SemilatticeOrder& s) {
      const auto nd = as_set(total_orders_nondecreasing(s));
      const auto in = as_set(total_orders_internal(s));
      const auto ci = as_set(total_orders_ci(s));
      for (const auto& t : nd) {
        REQUIRE(in.count(t) == 1);
        REQUIRE(ci.count(t) == 1);
        REQUIRE(nd.count(t.reversed()) == 1);
      }
    });
}

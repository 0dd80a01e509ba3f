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

#include "fixtures.hpp"
#include "oracles.hpp"
#include "semichain/enumeration.hpp"
#include "semichain/errors.hpp"

using namespace semichain;
namespace fx = semichain::fixtures;

namespace {

// Ranks of p along t descend and then ascend.
bool valley(const TotalOrder& p, const TotalOrder& t) {
  int i = 1;
  const int n = t.size();
  while (i < n && p.rank(t.at(i + 1)) < p.rank(t.at(i))) ++i;
  while (i < n && p.rank(t.at(i + 1)) > p.rank(t.at(i))) ++i;
  return i >= n;
}

}  // namespace

TEST_CASE("partial order validation") {
  CHECK_THROWS_AS(PartialOrder::from_pairs(3, {{1, 2}, {2, 1}}), PreconditionViolated);
  CHECK_THROWS_AS(PartialOrder::from_pairs(3, {{1, 4}}), PreconditionViolated);
  std::vector<char> not_transitive{1, 1, 0, 0, 1, 1, 0, 0, 1};
  CHECK_THROWS_AS(PartialOrder::from_matrix(3, not_transitive), PreconditionViolated);
  const auto p = PartialOrder::from_pairs(3, {{1, 2}, {2, 3}});
  CHECK(p.leq(1, 3));
  CHECK(p.is_total());
  CHECK(p.covers() == std::vector<std::pair<int, int>>{{1, 2}, {2, 3}});
  CHECK(p == PartialOrder::from_total(TotalOrder::natural(3)));
}

TEST_CASE("non-semilattices are rejected") {
  // Two maximal elements.
  CHECK_THROWS_AS(fx::order(3, {{1, 2}, {1, 3}}), NotSemilattice);
  // Two minimal upper bounds of {1, 2}.
  CHECK_THROWS_AS(fx::order(4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}), NotSemilattice);
  CHECK_FALSE(SemilatticeOrder::try_from_order(PartialOrder::from_pairs(2, {})).has_value());
}

TEST_CASE("operation and order round trip") {
  for (int n = 1; n <= 5; ++n) {
    for_each_semilattice_order(n, [&](const SemilatticeOrder& s) {
      const auto f = join_op(s);
      CHECK(oracle::semilattice_op(f));
      CHECK(order_from_op(f) == s);
      for (int x = 1; x <= n; ++x)
        for (int y = 1; y <= n; ++y) CHECK(s.leq(x, y) == (f(x, y) == y));
    });
  }
  CHECK_THROWS_AS(order_from_op(fx::four_element_counterexample()), NotSemilattice);
}

TEST_CASE("semilattice counts on small sets") {
  CHECK(oracle::all_semilattices(1).size() == 1);
  CHECK(oracle::all_semilattices(2).size() == 2);
  CHECK(oracle::all_semilattices(3).size() == 9);
  CHECK(oracle::all_semilattices(4).size() == 76);
}

TEST_CASE("ideals and filters") {
  const auto s = fx::five_tree();
  CHECK(principal_ideal(s, fx::kA) == std::vector<int>{1, 2, 3, 4});
  CHECK(principal_ideal(s, fx::kC) == std::vector<int>{3, 4});
  CHECK(principal_filter(s, fx::kD) == std::vector<int>{1, 3, 4, 5});
  CHECK(s.top() == fx::kR);
  CHECK(s.join(fx::kB, fx::kD) == fx::kA);
}

TEST_CASE("the four CI formulations agree") {
  for (int n = 1; n <= 5; ++n) {
    const auto orders = all_total_orders(n);
    for_each_semilattice_order(n, [&](const SemilatticeOrder& s) {
      for (const auto& t : orders) {
        const bool ci = has_ci_property(s, t);
        REQUIRE(ci == oracle::principal_ideals_convex(s, t));
        REQUIRE(ci == oracle::all_ideals_convex(s, t));
        REQUIRE(ci == oracle::outside_elements_bound_ideals(s, t));
      }
    });
  }
}

TEST_CASE("nondecreasing orders have linear filters") {
  for (int n = 1; n <= 5; ++n) {
    const auto orders = all_total_orders(n);
    for_each_semilattice_order(n, [&](const SemilatticeOrder& s) {
      const bool lf = has_linear_filter_property(s);
      for (const auto& t : orders)
        if (is_nondecreasing_for(s, t)) REQUIRE(lf);
    });
  }
}

TEST_CASE("internal orders have no three-way shared join") {
  for (int n = 1; n <= 5; ++n) {
    const auto orders = all_total_orders(n);
    for_each_semilattice_order(n, [&](const SemilatticeOrder& s) {
      bool shared = false;
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b)
          for (int c = b + 1; c <= n; ++c)
            if (s.incomparable(a, b) && s.incomparable(a, c) && s.incomparable(b, c) &&
                s.join(a, b) == s.join(a, c) && s.join(a, c) == s.join(b, c))
              shared = true;
      if (!shared) return;
      for (const auto& t : orders) REQUIRE_FALSE(is_internal_for(s, t));
    });
  }
}

TEST_CASE("internality matches the operation-level definition") {
  for (int n = 1; n <= 4; ++n) {
    const auto orders = all_total_orders(n);
    for (const auto& s : oracle::all_semilattices(n))
      for (const auto& t : orders) {
        CHECK(is_internal_for(s, t) == oracle::join_within_bounds(s, t));
        CHECK(is_internal_for(s, t) == is_internal_op(join_op(s), t));
      }
  }
}

TEST_CASE("linear filter property") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& s : oracle::all_semilattices(n))
      CHECK(has_linear_filter_property(s) == oracle::filters_are_chains(s));
}

TEST_CASE("CI without internality and vice versa") {
  const auto t = TotalOrder::natural(3);
  CHECK(has_ci_property(fx::top_one_cherry(), t));
  CHECK_FALSE(is_internal_for(fx::top_one_cherry(), t));
  CHECK(is_internal_for(fx::chain_132(), t));
  CHECK_FALSE(has_ci_property(fx::chain_132(), t));
}

TEST_CASE("CI does not force strict betweenness") {
  const auto s = fx::order(3, {{1, 2}, {3, 2}});
  const auto t = TotalOrder::natural(3);
  CHECK(has_ci_property(s, t));
  CHECK(s.join(1, 3) == 2);
  CHECK_FALSE(s.less(2, s.join(1, 3)));
}

TEST_CASE("linear filters without CI") {
  const auto s = fx::linear_filter_not_ci();
  CHECK(has_linear_filter_property(s));
  CHECK_FALSE(has_ci_property(s, TotalOrder::natural(4)));
}

TEST_CASE("internal with a shared join") {
  const auto s = fx::internal_shared_join();
  const auto t = TotalOrder::natural(5);
  CHECK(is_internal_for(s, t));
  CHECK(has_linear_filter_property(s));
  // a v b = b v c with a = 1, b = 5, c = 3.
  CHECK(s.join(1, 5) == s.join(5, 3));
  CHECK(s.incomparable(1, 5));
  CHECK(s.incomparable(5, 3));
  CHECK(s.incomparable(1, 3));
}

TEST_CASE("nondecreasing is CI and internal") {
  for (int n = 1; n <= 4; ++n) {
    const auto orders = all_total_orders(n);
    for (const auto& s : oracle::all_semilattices(n))
      for (const auto& t : orders)
        CHECK(is_nondecreasing_for(s, t) == (has_ci_property(s, t) && is_internal_for(s, t)));
  }
}

TEST_CASE("nondecreasing orders are closed under reversing t") {
  for (const auto& s : oracle::all_semilattices(4))
    for (const auto& t : all_total_orders(4))
      CHECK(is_nondecreasing_for(s, t) == is_nondecreasing_for(s, t.reversed()));
}

TEST_CASE("single-peaked chains") {
  for (int n = 1; n <= 6; ++n) {
    const auto orders = all_total_orders(n);
    const auto t = TotalOrder::natural(n);
    int count = 0;
    for (const auto& p : orders) {
      const bool sp = is_single_peaked(p, t);
      CHECK(sp == valley(p, t));
      CHECK(sp == has_ci_property(chain_order(p), t));
      if (sp) ++count;
    }
    CHECK(count == (1 << (n - 1)));
  }
}

TEST_CASE("chain orders") {
  const auto t = TotalOrder::from_chain({2, 3, 1});
  const auto s = chain_order(t);
  CHECK(s.top() == 1);
  CHECK(s.leq(2, 3));
  CHECK(join_op(s) == OpTable::from_function(3, [&](int x, int y) { return t.less(x, y) ? y : x; }));
}

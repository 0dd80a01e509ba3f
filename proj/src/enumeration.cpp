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

#include "semichain/enumeration.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "semichain/errors.hpp"
#include "semichain/hasse.hpp"

namespace semichain {
namespace {

void require_nonnegative(int n) {
  if (n < 0) throw PreconditionViolated("sequence index must be nonnegative");
}

void require_bound(int n, int bound, const char* what) {
  if (n > bound) {
    throw BoundExceeded(std::string(what) + ": n = " + std::to_string(n) +
                        " exceeds bound " + std::to_string(bound));
  }
}

// A nondecreasing order on an interval, as the parent of each element
// (offset by the interval's low end) and its top.
struct IntervalOrder {
  int top = 0;
  std::vector<int> parent;  // parent[x - lo], 0 for the top
};

std::vector<IntervalOrder> orders_on(int lo, int hi) {
  if (hi < lo) return {IntervalOrder{}};
  const int m = hi - lo + 1;
  std::vector<IntervalOrder> out;
  for (int r = lo; r <= hi; ++r) {
    const auto left = orders_on(lo, r - 1);
    const auto right = orders_on(r + 1, hi);
    for (const auto& a : left) {
      for (const auto& b : right) {
        IntervalOrder o;
        o.top = r;
        o.parent.assign(static_cast<std::size_t>(m), 0);
        for (int x = lo; x < r; ++x) {
          const int p = a.parent[x - lo];
          o.parent[x - lo] = p == 0 ? r : p;
        }
        for (int x = r + 1; x <= hi; ++x) {
          const int p = b.parent[x - r - 1];
          o.parent[x - lo] = p == 0 ? r : p;
        }
        out.push_back(std::move(o));
      }
    }
  }
  return out;
}

}  // namespace

BigCount alpha(int n) {
  require_nonnegative(n);
  std::vector<BigCount> a(static_cast<std::size_t>(n) + 1);
  a[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 1; i <= m; ++i) a[m] += a[m - i] * a[i - 1];
  }
  return a[n];
}

BigCount tau(int n) {
  require_nonnegative(n);
  std::vector<BigCount> t(static_cast<std::size_t>(std::max(n, 1)) + 1);
  t[0] = 1;
  t[1] = 1;
  for (int m = 2; m <= n; ++m) {
    const int k = m / 2;
    if (m % 2 == 0) {
      for (int i = 0; i <= k - 1; ++i) t[m] += t[i] * t[m - 1 - i];
    } else {
      for (int i = 0; i <= k - 1; ++i) t[m] += t[i] * t[2 * k - i];
      t[m] += t[k] * (t[k] + 1) / 2;
    }
  }
  return t[n];
}

BigCount beta(int n) {
  require_nonnegative(n);
  std::vector<BigCount> b(static_cast<std::size_t>(std::max(n, 1)) + 1);
  b[0] = 1;
  b[1] = 1;
  for (int m = 2; m <= n; ++m) {
    for (int i = 1; i <= m - 2; ++i) b[m] += b[i] * b[m - i - 1];
    b[m] += m * b[m - 1];
  }
  return b[n];
}

BigCount binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  BigCount c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

BigCount delta(int n) {
  require_nonnegative(n);
  std::vector<BigCount> d(static_cast<std::size_t>(n) + 1);
  d[0] = 1;
  for (int m = 1; m <= n; ++m) {
    for (int i = 1; i <= m; ++i) d[m] += d[i - 1] * d[m - i];
    for (int j = 1; j <= m - 2; ++j) d[m] += binomial(m - 1, j) * d[j] * d[m - j - 1];
  }
  return d[n];
}

void for_each_nondecreasing_order(int n, const std::function<void(const SemilatticeOrder&)>& visit,
                                  int bound) {
  require_nonnegative(n);
  require_bound(n, bound, "nondecreasing order generation");
  for (auto& o : orders_on(1, n)) visit(semilattice_from_tree(RootedTree(std::move(o.parent))));
}

std::vector<SemilatticeOrder> generate_nondecreasing_orders(int n, int bound) {
  std::vector<SemilatticeOrder> out;
  for_each_nondecreasing_order(n, [&](const SemilatticeOrder& s) { out.push_back(s); }, bound);
  return out;
}

void for_each_monotone_idempotent_symmetric_table(
    int n, const std::function<void(const OpTable&)>& visit) {
  require_nonnegative(n);
  require_bound(n, 6, "table enumeration");
  std::vector<int> v(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int x, int y) -> int& { return v[static_cast<std::size_t>(x - 1) * n + (y - 1)]; };
  for (int x = 1; x <= n; ++x) at(x, x) = x;
  std::vector<std::pair<int, int>> cells;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) cells.emplace_back(x, y);
  }
  std::function<void(std::size_t)> fill = [&](std::size_t k) {
    if (k == cells.size()) {
      visit(OpTable(n, v));
      return;
    }
    const auto [x, y] = cells[k];
    // Lower bounds from the left neighbour and the cell above (both set);
    // the value is also trapped in [x, y] by idempotency and monotonicity.
    int lo = std::max(x, at(x, y - 1));
    if (x > 1) lo = std::max(lo, at(x - 1, y));
    for (int val = lo; val <= y; ++val) {
      at(x, y) = val;
      at(y, x) = val;
      fill(k + 1);
    }
  };
  fill(0);
}

void for_each_binary_tree_order(int n, const std::function<void(const SemilatticeOrder&)>& visit) {
  require_nonnegative(n);
  require_bound(n, 7, "labeled binary tree enumeration");
  std::set<std::vector<int>> seen;
  for (const auto& shape : binary_tree_shapes(n)) {
    const RootedTree tree = shape.realize();
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 1);
    do {
      std::vector<int> parents(static_cast<std::size_t>(n), 0);
      for (int v = 1; v <= n; ++v) {
        if (tree.parent(v) != 0) parents[label[v - 1] - 1] = label[tree.parent(v) - 1];
      }
      if (seen.insert(parents).second) visit(semilattice_from_tree(RootedTree(parents)));
    } while (std::next_permutation(label.begin(), label.end()));
  }
}

void for_each_semilattice_order(int n, const std::function<void(const SemilatticeOrder&)>& visit) {
  require_nonnegative(n);
  require_bound(n, 5, "semilattice order enumeration");
  std::vector<std::pair<int, int>> pairs;
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) pairs.emplace_back(x, y);
  }
  std::vector<int> choice(pairs.size(), 0);  // 0: incomparable, 1: x<y, 2: y<x
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int x, int y) -> char& { return m[static_cast<std::size_t>(x - 1) * n + (y - 1)]; };
  while (true) {
    std::fill(m.begin(), m.end(), 0);
    for (int x = 1; x <= n; ++x) at(x, x) = 1;
    for (std::size_t k = 0; k < pairs.size(); ++k) {
      if (choice[k] == 1) at(pairs[k].first, pairs[k].second) = 1;
      if (choice[k] == 2) at(pairs[k].second, pairs[k].first) = 1;
    }
    bool transitive = true;
    for (int x = 1; x <= n && transitive; ++x) {
      for (int y = 1; y <= n && transitive; ++y) {
        if (!at(x, y)) continue;
        for (int z = 1; z <= n; ++z) {
          if (at(y, z) && !at(x, z)) {
            transitive = false;
            break;
          }
        }
      }
    }
    if (transitive) {
      if (auto s = SemilatticeOrder::try_from_order(PartialOrder::from_matrix(n, m))) visit(*s);
    }
    std::size_t k = 0;
    while (k < choice.size() && choice[k] == 2) choice[k++] = 0;
    if (k == choice.size()) break;
    ++choice[k];
  }
}

BigCount brute_count_operations(int n, PropertySet props) {
  BigCount count = 0;
  if (props.has(Property::Associative)) {
    require_bound(n, 5, "table oracle");
    for_each_monotone_idempotent_symmetric_table(n, [&](const OpTable& f) {
      if (is_associative(f)) ++count;
    });
    return count;
  }
  const TotalOrder natural = TotalOrder::natural(n);
  for_each_binary_tree_order(n, [&](const SemilatticeOrder& s) {
    if (props.has(Property::CiProperty) && !has_ci_property(s, natural)) return;
    if (props.has(Property::Internal) && !is_internal_for(s, natural)) return;
    if (props.has(Property::LinearFilter) && !has_linear_filter_property(s)) return;
    if (props.has(Property::Nondecreasing) && !is_nondecreasing_for(s, natural)) return;
    ++count;
  });
  return count;
}

BigCount count_internal_only(int n) {
  require_bound(n, 5, "internal-only count");
  BigCount count = 0;
  const TotalOrder natural = TotalOrder::natural(n);
  for_each_semilattice_order(n, [&](const SemilatticeOrder& s) {
    if (is_internal_for(s, natural)) ++count;
  });
  return count;
}

}  // namespace semichain

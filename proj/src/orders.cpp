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

#include "semichain/orders.hpp"

#include <string>

#include "semichain/errors.hpp"

namespace semichain {

PartialOrder PartialOrder::from_matrix(int n, std::vector<char> leq) {
  if (n < 0 || leq.size() != static_cast<std::size_t>(n) * n) {
    throw PreconditionViolated("partial order: matrix size mismatch");
  }
  PartialOrder p;
  p.n_ = n;
  p.leq_ = std::move(leq);
  for (auto& c : p.leq_) c = c != 0;
  for (int x = 1; x <= n; ++x) {
    if (!p.leq(x, x)) throw PreconditionViolated("partial order: not reflexive");
    for (int y = x + 1; y <= n; ++y) {
      if (p.leq(x, y) && p.leq(y, x)) {
        throw PreconditionViolated("partial order: " + std::to_string(x) + " and " +
                                   std::to_string(y) + " violate antisymmetry");
      }
    }
  }
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      if (!p.leq(x, y)) continue;
      for (int z = 1; z <= n; ++z) {
        if (p.leq(y, z) && !p.leq(x, z)) {
          throw PreconditionViolated("partial order: not transitive");
        }
      }
    }
  }
  return p;
}

PartialOrder PartialOrder::from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
  if (n < 0) throw PreconditionViolated("partial order: negative size");
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  auto at = [&](int x, int y) -> char& { return m[static_cast<std::size_t>(x - 1) * n + (y - 1)]; };
  for (int x = 1; x <= n; ++x) at(x, x) = 1;
  for (auto [x, y] : pairs) {
    if (x < 1 || x > n || y < 1 || y > n) {
      throw PreconditionViolated("partial order: pair (" + std::to_string(x) + "," +
                                 std::to_string(y) + ") outside 1.." + std::to_string(n));
    }
    at(x, y) = 1;
  }
  // Warshall closure.
  for (int k = 1; k <= n; ++k) {
    for (int x = 1; x <= n; ++x) {
      if (!at(x, k)) continue;
      for (int y = 1; y <= n; ++y) {
        if (at(k, y)) at(x, y) = 1;
      }
    }
  }
  return from_matrix(n, std::move(m));
}

PartialOrder PartialOrder::from_total(const TotalOrder& t) {
  const int n = t.size();
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) m[static_cast<std::size_t>(x - 1) * n + (y - 1)] = t.leq(x, y);
  }
  PartialOrder p;
  p.n_ = n;
  p.leq_ = std::move(m);
  return p;
}

bool PartialOrder::is_total() const {
  for (int x = 1; x <= n_; ++x) {
    for (int y = x + 1; y <= n_; ++y) {
      if (incomparable(x, y)) return false;
    }
  }
  return true;
}

std::vector<std::pair<int, int>> PartialOrder::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int x = 1; x <= n_; ++x) {
    for (int y = 1; y <= n_; ++y) {
      if (!less(x, y)) continue;
      bool covered = true;
      for (int z = 1; z <= n_ && covered; ++z) {
        covered = !(less(x, z) && less(z, y));
      }
      if (covered) out.emplace_back(x, y);
    }
  }
  return out;
}

std::optional<SemilatticeOrder> SemilatticeOrder::try_from_order(PartialOrder order) {
  const int n = order.size();
  std::vector<int> join(static_cast<std::size_t>(n) * n, 0);
  for (int x = 1; x <= n; ++x) {
    for (int y = x; y <= n; ++y) {
      // The least upper bound is the upper bound lying below all others.
      int sup = 0;
      for (int z = 1; z <= n; ++z) {
        if (!order.leq(x, z) || !order.leq(y, z)) continue;
        if (sup == 0 || order.leq(z, sup)) sup = z;
      }
      if (sup == 0) return std::nullopt;
      for (int z = 1; z <= n; ++z) {
        if (order.leq(x, z) && order.leq(y, z) && !order.leq(sup, z)) return std::nullopt;
      }
      join[static_cast<std::size_t>(x - 1) * n + (y - 1)] = sup;
      join[static_cast<std::size_t>(y - 1) * n + (x - 1)] = sup;
    }
  }
  SemilatticeOrder s;
  s.order_ = std::move(order);
  s.join_ = std::move(join);
  return s;
}

SemilatticeOrder SemilatticeOrder::from_order(PartialOrder order) {
  auto s = try_from_order(std::move(order));
  if (!s) throw NotSemilattice("partial order: some pair has no join");
  return std::move(*s);
}

int SemilatticeOrder::top() const {
  if (size() == 0) throw PreconditionViolated("top of an empty semilattice");
  int t = 1;
  for (int x = 2; x <= size(); ++x) t = join(t, x);
  return t;
}

SemilatticeOrder order_from_op(const OpTable& f) {
  if (!is_idempotent(f)) throw NotSemilattice("operation is not idempotent");
  if (!is_symmetric(f)) throw NotSemilattice("operation is not symmetric");
  if (!is_associative(f)) throw NotSemilattice("operation is not associative");
  const int n = f.size();
  std::vector<char> m(static_cast<std::size_t>(n) * n, 0);
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) m[static_cast<std::size_t>(x - 1) * n + (y - 1)] = f(x, y) == y;
  }
  return SemilatticeOrder::from_order(PartialOrder::from_matrix(n, std::move(m)));
}

OpTable join_op(const SemilatticeOrder& s) {
  return OpTable::from_function(s.size(), [&](int x, int y) { return s.join(x, y); });
}

std::vector<int> principal_ideal(const SemilatticeOrder& s, int x) {
  std::vector<int> out;
  for (int y = 1; y <= s.size(); ++y) {
    if (s.leq(y, x)) out.push_back(y);
  }
  return out;
}

std::vector<int> principal_filter(const SemilatticeOrder& s, int x) {
  std::vector<int> out;
  for (int y = 1; y <= s.size(); ++y) {
    if (s.leq(x, y)) out.push_back(y);
  }
  return out;
}

bool has_ci_property(const SemilatticeOrder& s, const TotalOrder& t) {
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    const int a = t.at(i);
    for (int k = i; k <= n; ++k) {
      const int c = t.at(k);
      const int ac = s.join(a, c);
      for (int j = i; j <= k; ++j) {
        if (!s.leq(t.at(j), ac)) return false;
      }
    }
  }
  return true;
}

bool is_internal_for(const SemilatticeOrder& s, const TotalOrder& t) {
  const int n = s.size();
  for (int i = 1; i <= n; ++i) {
    const int a = t.at(i);
    for (int j = i + 1; j <= n; ++j) {
      const int b = t.at(j);
      for (int k = j + 1; k <= n; ++k) {
        const int c = t.at(k);
        if (s.join(b, c) == a || s.join(a, b) == c) return false;
      }
    }
  }
  return true;
}

bool is_nondecreasing_for(const SemilatticeOrder& s, const TotalOrder& t) {
  return has_ci_property(s, t) && is_internal_for(s, t);
}

bool has_linear_filter_property(const SemilatticeOrder& s) {
  const int n = s.size();
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (!s.incomparable(a, b)) continue;
      for (int c = 1; c <= n; ++c) {
        if (s.leq(c, a) && s.leq(c, b)) return false;
      }
    }
  }
  return true;
}

bool is_single_peaked(const TotalOrder& p, const TotalOrder& t) {
  if (p.size() != t.size()) throw PreconditionViolated("is_single_peaked: size mismatch");
  const int n = t.size();
  for (int i = 1; i <= n; ++i) {
    for (int k = i; k <= n; ++k) {
      const int a = t.at(i);
      const int c = t.at(k);
      const int peak = p.less(a, c) ? c : a;
      for (int j = i; j <= k; ++j) {
        if (p.less(peak, t.at(j))) return false;
      }
    }
  }
  return true;
}

SemilatticeOrder chain_order(const TotalOrder& t) {
  return SemilatticeOrder::from_order(PartialOrder::from_total(t));
}

}  // namespace semichain

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

#include "semichain/kary.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <string>

#include "semichain/errors.hpp"

namespace semichain {

std::int64_t KaryOpTable::checked_cells(int n, int k) {
  if (k < 2) throw PreconditionViolated("k-ary operation needs arity >= 2");
  if (n < 0) throw PreconditionViolated("k-ary operation: negative size");
  std::int64_t cells = 1;
  for (int i = 0; i < k; ++i) {
    cells *= n;
    if (cells > kMaxKaryCells) {
      throw BoundExceeded("k-ary table with n = " + std::to_string(n) + ", k = " +
                          std::to_string(k) + " is too large");
    }
  }
  return cells;
}

bool KaryOpTable::advance(std::vector<int>& tuple, int n) {
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) {
    if (*it < n) {
      ++*it;
      return true;
    }
    *it = 1;
  }
  return false;
}

KaryOpTable::KaryOpTable(int n, int k, std::vector<int> values)
    : n_(n), k_(k), values_(std::move(values)) {
  const std::int64_t cells = checked_cells(n, k);
  if (static_cast<std::int64_t>(values_.size()) != cells) {
    throw PreconditionViolated("k-ary table: expected " + std::to_string(cells) + " entries, got " +
                               std::to_string(values_.size()));
  }
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw PreconditionViolated("k-ary table: entry " + std::to_string(v) + " outside 1.." +
                                 std::to_string(n));
    }
  }
}

bool is_kary_associative(const KaryOpTable& f) {
  const int n = f.size();
  const int k = f.arity();
  if (n == 0) return true;
  std::int64_t tuples = 1;
  for (int i = 0; i < 2 * k - 1; ++i) {
    tuples *= n;
    if (tuples > kMaxAssociativityTuples) {
      throw BoundExceeded("k-ary associativity check over n^(2k-1) tuples is too large");
    }
  }
  std::vector<int> xs(static_cast<std::size_t>(2 * k - 1), 1);
  std::vector<int> args(static_cast<std::size_t>(k));
  // Value of the outer application with the inner one starting at 0-based
  // position i.
  auto nested = [&](int i) {
    const int inner = f(std::span<const int>(xs).subspan(static_cast<std::size_t>(i), k));
    for (int p = 0; p < k; ++p) {
      if (p < i) {
        args[p] = xs[p];
      } else if (p == i) {
        args[p] = inner;
      } else {
        args[p] = xs[p + k - 1];
      }
    }
    return f(args);
  };
  do {
    const int first = nested(0);
    for (int i = 1; i < k; ++i) {
      if (nested(i) != first) return false;
    }
  } while (KaryOpTable::advance(xs, n));
  return true;
}

bool is_kary_symmetric(const KaryOpTable& f) {
  const int n = f.size();
  if (n == 0) return true;
  std::vector<int> tuple(static_cast<std::size_t>(f.arity()), 1);
  std::vector<int> sorted;
  do {
    sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    if (f(tuple) != f(sorted)) return false;
  } while (KaryOpTable::advance(tuple, n));
  return true;
}

bool is_kary_idempotent(const KaryOpTable& f) {
  for (int x = 1; x <= f.size(); ++x) {
    const std::vector<int> diag(static_cast<std::size_t>(f.arity()), x);
    if (f(diag) != x) return false;
  }
  return true;
}

bool is_kary_preserving(const KaryOpTable& f, const TotalOrder& t) {
  const int n = f.size();
  if (n == 0) return true;
  std::vector<int> tuple(static_cast<std::size_t>(f.arity()), 1);
  std::vector<int> stepped;
  do {
    const int v = f(tuple);
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      const int r = t.rank(tuple[i]);
      if (r == n) continue;
      stepped = tuple;
      stepped[i] = t.at(r + 1);
      if (t.less(f(stepped), v)) return false;
    }
  } while (KaryOpTable::advance(tuple, n));
  return true;
}

KaryOpTable extend(const OpTable& h, int k) {
  if (!is_associative(h)) throw NotAssociative("extend needs an associative binary operation");
  return KaryOpTable::from_function(h.size(), k, [&](std::span<const int> xs) {
    int acc = xs[0];
    for (std::size_t i = 1; i < xs.size(); ++i) acc = h(acc, xs[i]);
    return acc;
  });
}

OpTable reduce(const KaryOpTable& f) {
  const int n = f.size();
  const int k = f.arity();
  if (!is_kary_idempotent(f)) throw PreconditionViolated("reduce: operation is not idempotent");
  if (!is_kary_symmetric(f)) throw PreconditionViolated("reduce: operation is not symmetric");
  if (!is_kary_preserving(f, TotalOrder::natural(n))) {
    throw PreconditionViolated("reduce: operation is not order-preserving");
  }
  if (!is_kary_associative(f)) throw PreconditionViolated("reduce: operation is not associative");
  std::vector<int> args(static_cast<std::size_t>(k));
  const OpTable g = OpTable::from_function(n, [&](int x, int y) {
    std::fill(args.begin(), args.end() - 1, x);
    args.back() = y;
    return f(args);
  });
  try {
    if (extend(g, k) != f) throw ReductionMismatch("reduce: extend(G, k) differs from F");
  } catch (const NotAssociative&) {
    throw ReductionMismatch("reduce: G(x, y) = F(x, ..., x, y) is not associative");
  }
  return g;
}

BigCount count_kary_semilattice_tables(int n, int k) {
  if (k < 2) throw PreconditionViolated("arity must be at least 2");
  if (binomial(n + k - 1, k) > 20) {
    throw BoundExceeded("k-ary table enumeration: too many multisets");
  }
  // Sorted k-tuples (multisets) in lexicographic order; every unit
  // decrement of a multiset is lexicographically smaller, so it is assigned
  // before the multiset itself.
  std::vector<std::vector<int>> multisets;
  if (n > 0) {
    std::vector<int> tuple(static_cast<std::size_t>(k), 1);
    do {
      if (std::is_sorted(tuple.begin(), tuple.end())) multisets.push_back(tuple);
    } while (KaryOpTable::advance(tuple, n));
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < multisets.size(); ++i) index[multisets[i]] = static_cast<int>(i);
  std::vector<std::vector<int>> predecessors(multisets.size());
  for (std::size_t i = 0; i < multisets.size(); ++i) {
    for (std::size_t p = 0; p < multisets[i].size(); ++p) {
      if (multisets[i][p] == 1) continue;
      auto lower = multisets[i];
      --lower[p];
      std::sort(lower.begin(), lower.end());
      predecessors[i].push_back(index.at(lower));
    }
  }
  std::vector<int> value(multisets.size(), 0);
  BigCount count = 0;
  std::function<void(std::size_t)> fill = [&](std::size_t i) {
    if (i == multisets.size()) {
      const KaryOpTable f = KaryOpTable::from_function(n, k, [&](std::span<const int> xs) {
        std::vector<int> key(xs.begin(), xs.end());
        std::sort(key.begin(), key.end());
        return value[index.at(key)];
      });
      if (is_kary_associative(f)) ++count;
      return;
    }
    const auto& m = multisets[i];
    if (m.front() == m.back()) {
      value[i] = m.front();
      fill(i + 1);
      return;
    }
    int lo = m.front();
    for (int p : predecessors[i]) lo = std::max(lo, value[p]);
    for (int v = lo; v <= m.back(); ++v) {
      value[i] = v;
      fill(i + 1);
    }
  };
  fill(0);
  return count;
}

}  // namespace semichain

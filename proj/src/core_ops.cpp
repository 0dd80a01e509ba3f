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

#include "semichain/core_ops.hpp"

#include <algorithm>
#include <string>

#include "semichain/errors.hpp"

namespace semichain {

OpTable::OpTable(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (n < 0) throw PreconditionViolated("operation table: negative size");
  if (values_.size() != static_cast<std::size_t>(n) * n) {
    throw PreconditionViolated("operation table: expected " + std::to_string(n * n) +
                               " entries, got " + std::to_string(values_.size()));
  }
  for (int v : values_) {
    if (v < 1 || v > n) {
      throw PreconditionViolated("operation table: entry " + std::to_string(v) +
                                 " outside 1.." + std::to_string(n));
    }
  }
}

OpTable OpTable::restrict_to(int lo, int hi) const {
  if (hi < lo) return OpTable();
  if (lo < 1 || hi > n_) throw PreconditionViolated("restrict_to: interval out of range");
  const int m = hi - lo + 1;
  std::vector<int> values;
  values.reserve(static_cast<std::size_t>(m) * m);
  for (int x = lo; x <= hi; ++x) {
    for (int y = lo; y <= hi; ++y) {
      const int v = (*this)(x, y);
      if (v < lo || v > hi) {
        throw PreconditionViolated("restrict_to: [" + std::to_string(lo) + "," +
                                   std::to_string(hi) + "] is not closed");
      }
      values.push_back(v - lo + 1);
    }
  }
  return OpTable(m, std::move(values));
}

OpTable max_table(int n) {
  return OpTable::from_function(n, [](int x, int y) { return std::max(x, y); });
}

bool is_associative(const OpTable& f) {
  const int n = f.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const int xy = f(x, y);
      for (int z = 1; z <= n; ++z) {
        if (f(xy, z) != f(x, f(y, z))) return false;
      }
    }
  }
  return true;
}

bool is_symmetric(const OpTable& f) {
  const int n = f.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = x + 1; y <= n; ++y) {
      if (f(x, y) != f(y, x)) return false;
    }
  }
  return true;
}

bool is_idempotent(const OpTable& f) {
  for (int x = 1; x <= f.size(); ++x) {
    if (f(x, x) != x) return false;
  }
  return true;
}

bool is_quasitrivial(const OpTable& f) {
  const int n = f.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const int v = f(x, y);
      if (v != x && v != y) return false;
    }
  }
  return true;
}

bool is_preserving(const OpTable& f, const TotalOrder& t) {
  const int n = f.size();
  // Monotonicity along unit steps of t in each argument implies the full
  // two-argument condition by transitivity.
  for (int p = 1; p < n; ++p) {
    const int lo = t.at(p);
    const int hi = t.at(p + 1);
    for (int y = 1; y <= n; ++y) {
      if (t.less(f(hi, y), f(lo, y))) return false;
      if (t.less(f(y, hi), f(y, lo))) return false;
    }
  }
  return true;
}

bool is_preserving(const OpTable& f) { return is_preserving(f, TotalOrder::natural(f.size())); }

bool is_internal_op(const OpTable& f, const TotalOrder& t) {
  const int n = f.size();
  for (int x = 1; x <= n; ++x) {
    for (int y = 1; y <= n; ++y) {
      const int lo = t.less(x, y) ? x : y;
      const int hi = lo == x ? y : x;
      const int v = f(x, y);
      if (t.less(v, lo) || t.less(hi, v)) return false;
    }
  }
  return true;
}

std::optional<int> zero_element(const OpTable& f) {
  const int n = f.size();
  for (int a = 1; a <= n; ++a) {
    bool absorbing = true;
    for (int x = 1; x <= n && absorbing; ++x) {
      absorbing = f(a, x) == a && f(x, a) == a;
    }
    if (absorbing) return a;
  }
  return std::nullopt;
}

std::optional<int> neutral_element(const OpTable& f) {
  const int n = f.size();
  for (int e = 1; e <= n; ++e) {
    bool neutral = true;
    for (int x = 1; x <= n && neutral; ++x) {
      neutral = f(e, x) == x && f(x, e) == x;
    }
    if (neutral) return e;
  }
  return std::nullopt;
}

DegreeSequence degree_sequence(const OpTable& f) {
  DegreeSequence deg;
  deg.counts.assign(static_cast<std::size_t>(f.size()), 0);
  for (int v : f.values()) ++deg.counts[v - 1];
  return deg;
}

}  // namespace semichain

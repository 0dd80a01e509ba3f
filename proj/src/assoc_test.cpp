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

#include "semichain/assoc_test.hpp"

#include <cassert>
#include <map>
#include <sstream>

#include "semichain/errors.hpp"

namespace semichain {
namespace {

// Degree-formula zero search on the restriction of f to [iv.lo, iv.hi]^2.
// Assumes f idempotent and preserving, so the interval is closed under f.
std::optional<int> zero_in_interval(const OpTable& f, Interval iv) {
  const int m = iv.size();
  std::vector<std::int64_t> deg(static_cast<std::size_t>(m), 0);
  for (int x = iv.lo; x <= iv.hi; ++x) {
    for (int y = iv.lo; y <= iv.hi; ++y) ++deg[f(x, y) - iv.lo];
  }
  std::optional<int> found;
  for (int a = 1; a <= m; ++a) {
    if (deg[a - 1] == 2LL * a * (m - a + 1) - 1) {
      found = iv.lo + a - 1;
      break;
    }
  }
#ifndef NDEBUG
  std::optional<int> scanned;
  for (int a = iv.lo; a <= iv.hi && !scanned; ++a) {
    bool absorbing = true;
    for (int x = iv.lo; x <= iv.hi && absorbing; ++x) absorbing = f(a, x) == a && f(x, a) == a;
    if (absorbing) scanned = a;
  }
  assert(found == scanned);
#endif
  return found;
}

void require_test_domain(const OpTable& f) {
  if (!is_idempotent(f)) throw PreconditionViolated("operation is not idempotent");
  if (!is_symmetric(f)) throw PreconditionViolated("operation is not symmetric");
  if (!is_preserving(f)) throw PreconditionViolated("operation is not order-preserving");
}

// Returns the top of the order built on `iv`, appending cover pairs, or the
// failing interval.
struct Step {
  int top = 0;
  std::optional<Interval> failing;
};

Step peel(const OpTable& f, Interval iv, std::vector<std::pair<int, int>>& covers) {
  const auto r = zero_in_interval(f, iv);
  if (!r) return Step{0, iv};
  std::vector<Interval> parts;
  if (*r == iv.lo) {
    parts.push_back({iv.lo + 1, iv.hi});
  } else if (*r == iv.hi) {
    parts.push_back({iv.lo, iv.hi - 1});
  } else {
    parts.push_back({iv.lo, *r - 1});
    parts.push_back({*r + 1, iv.hi});
  }
  for (const Interval& part : parts) {
    if (part.size() == 0) continue;
    const Step sub = peel(f, part, covers);
    if (sub.failing) return sub;
    covers.emplace_back(sub.top, *r);
  }
  return Step{*r, std::nullopt};
}

}  // namespace

std::optional<int> find_zero_by_degree(const OpTable& f) {
  if (!is_idempotent(f)) throw PreconditionViolated("operation is not idempotent");
  if (!is_preserving(f)) throw PreconditionViolated("operation is not order-preserving");
  return zero_in_interval(f, Interval{1, f.size()});
}

TestTrace fast_associativity_test(const OpTable& f) {
  require_test_domain(f);
  TestTrace trace;
  const int n = f.size();
  std::vector<std::pair<int, int>> covers;
  if (n > 0) {
    const Step step = peel(f, Interval{1, n}, covers);
    if (step.failing) {
      trace.verdict = TestTrace::Verdict::NotAssociative;
      trace.failing = *step.failing;
      return trace;
    }
  }
  trace.order = SemilatticeOrder::from_order(PartialOrder::from_pairs(n, covers));
  return trace;
}

int ContourPlot::component_size(int z) const {
  for (const auto& [value, cells] : level_sets) {
    if (value == z) return static_cast<int>(cells.size());
  }
  return 0;
}

ContourPlot contour_plot(const OpTable& f) {
  if (!is_idempotent(f)) throw PreconditionViolated("contour plot needs an idempotent operation");
  std::map<int, std::vector<std::pair<int, int>>> sets;
  for (int x = 1; x <= f.size(); ++x) {
    for (int y = 1; y <= f.size(); ++y) sets[f(x, y)].emplace_back(x, y);
  }
  ContourPlot plot;
  plot.n = f.size();
  plot.level_sets.assign(sets.begin(), sets.end());
  return plot;
}

std::string render_contour(const ContourPlot& plot, const OpTable& f) {
  std::ostringstream out;
  const int n = plot.n;
  int width = 1;
  for (int v = n; v >= 10; v /= 10) ++width;
  for (int y = n; y >= 1; --y) {
    out.width(width);
    out << y << " |";
    for (int x = 1; x <= n; ++x) {
      out << ' ';
      out.width(width);
      out << f(x, y);
    }
    out << '\n';
  }
  out << std::string(static_cast<std::size_t>(width) + 1, ' ') << '+'
      << std::string(static_cast<std::size_t>(n) * (width + 1), '-') << '\n';
  out << std::string(static_cast<std::size_t>(width) + 2, ' ');
  for (int x = 1; x <= n; ++x) {
    out << ' ';
    out.width(width);
    out << x;
  }
  out << '\n';
  out << "components: " << plot.component_count() << '\n';
  for (const auto& [value, cells] : plot.level_sets) {
    out << "  " << value << ": " << cells.size() << " cells\n";
  }
  return out.str();
}

}  // namespace semichain

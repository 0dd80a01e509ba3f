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

#include "semichain/total_order.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "semichain/errors.hpp"

namespace semichain {

TotalOrder TotalOrder::natural(int n) {
  std::vector<int> chain(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(chain.begin(), chain.end(), 1);
  return from_chain(std::move(chain));
}

TotalOrder TotalOrder::from_chain(std::vector<int> chain) {
  const int n = static_cast<int>(chain.size());
  TotalOrder t;
  t.rank_.assign(chain.size(), 0);
  for (int p = 0; p < n; ++p) {
    const int x = chain[p];
    if (x < 1 || x > n) {
      throw PreconditionViolated("total order: element " + std::to_string(x) +
                                 " outside 1.." + std::to_string(n));
    }
    if (t.rank_[x - 1] != 0) {
      throw PreconditionViolated("total order: element " + std::to_string(x) +
                                 " repeated");
    }
    t.rank_[x - 1] = p + 1;
  }
  t.chain_ = std::move(chain);
  return t;
}

TotalOrder TotalOrder::from_ranks(std::span<const int> ranks) {
  const int n = static_cast<int>(ranks.size());
  std::vector<int> chain(ranks.size(), 0);
  for (int x = 1; x <= n; ++x) {
    const int p = ranks[x - 1];
    if (p < 1 || p > n || chain[p - 1] != 0) {
      throw PreconditionViolated("total order: ranks are not a permutation");
    }
    chain[p - 1] = x;
  }
  return from_chain(std::move(chain));
}

bool TotalOrder::is_natural() const noexcept {
  for (int p = 0; p < size(); ++p) {
    if (chain_[p] != p + 1) return false;
  }
  return true;
}

TotalOrder TotalOrder::reversed() const {
  return from_chain(std::vector<int>(chain_.rbegin(), chain_.rend()));
}

std::vector<TotalOrder> all_total_orders(int n) {
  std::vector<int> chain(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(chain.begin(), chain.end(), 1);
  std::vector<TotalOrder> out;
  do {
    out.push_back(TotalOrder::from_chain(chain));
  } while (std::next_permutation(chain.begin(), chain.end()));
  return out;
}

}  // namespace semichain

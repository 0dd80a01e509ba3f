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

#ifndef SEMICHAIN_IO_HPP
#define SEMICHAIN_IO_HPP

#include <string>
#include <string_view>

#include "semichain/core_ops.hpp"
#include "semichain/kary.hpp"
#include "semichain/orders.hpp"
#include "semichain/total_order.hpp"

// Text and JSON formats. Text inputs may contain blank lines and lines
// starting with '#'; the parse_* functions auto-detect JSON by a leading
// '{'. All parsers throw ParseError carrying the offending line number.
//
//   table:   "n" then n rows of n integers            {"n": 3, "table": [[..],..]}
//   order:   "n" then one "x y" pair (x <= y) per line {"n": 3, "relations": [[x, y],..]}
//   chain:   the elements bottom to top on one line   {"chain": [..]}
//   k-ary:   "n k" then n^k values, last index fastest {"n": 2, "k": 3, "values": [..]}

namespace semichain {

OpTable parse_op_table(std::string_view text);
std::string format_op_table(const OpTable& f);
std::string format_op_table_json(const OpTable& f);

/// Loads the relation, closes it transitively and requires a semilattice.
SemilatticeOrder parse_order(std::string_view text);
/// Cover pairs, one per line, after the size line.
std::string format_order(const SemilatticeOrder& s);
std::string format_order_json(const SemilatticeOrder& s);
/// Cover pairs on one line: "1 3, 2 3".
std::string format_order_line(const SemilatticeOrder& s);

TotalOrder parse_total_order(std::string_view text);
std::string format_total_order(const TotalOrder& t);

KaryOpTable parse_kary_table(std::string_view text);
std::string format_kary_table(const KaryOpTable& f);

}  // namespace semichain

#endif  // SEMICHAIN_IO_HPP

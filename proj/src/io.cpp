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

#include "semichain/io.hpp"

#include <charconv>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "semichain/errors.hpp"

namespace semichain {
namespace {

using nlohmann::json;

struct Line {
  int number = 0;
  std::vector<long long> values;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string_view raw = text.substr(start, end - start);
    start = end + 1;
    std::size_t first = raw.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || raw[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    Line line{number, {}};
    std::size_t pos = 0;
    while (pos < raw.size()) {
      pos = raw.find_first_not_of(" \t\r,", pos);
      if (pos == std::string_view::npos) break;
      std::size_t stop = raw.find_first_of(" \t\r,", pos);
      if (stop == std::string_view::npos) stop = raw.size();
      const std::string_view token = raw.substr(pos, stop - pos);
      long long v = 0;
      auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("expected an integer, got '" + std::string(token) + "'", number);
      }
      line.values.push_back(v);
      pos = stop;
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

bool looks_like_json(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string_view::npos && text[first] == '{';
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what());
  }
}

int read_size(const Line& line, const char* what) {
  if (line.values.size() != 1 || line.values[0] < 0 || line.values[0] > 1000) {
    throw ParseError(std::string("expected a single ") + what, line.number);
  }
  return static_cast<int>(line.values[0]);
}

void check_entry(long long v, int n, int line) {
  if (v < 1 || v > n) {
    throw ParseError("entry " + std::to_string(v) + " outside 1.." + std::to_string(n), line);
  }
}

template <class Fn>
auto json_guard(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed JSON document: ") + e.what());
  }
}

}  // namespace

OpTable parse_op_table(std::string_view text) {
  if (looks_like_json(text)) {
    return json_guard([&] {
      const json doc = parse_json(text);
      const int n = doc.at("n").get<int>();
      if (n < 0) throw ParseError("negative size");
      const auto& rows = doc.at("table");
      if (!rows.is_array() || rows.size() != static_cast<std::size_t>(n)) {
        throw ParseError("table must have n rows");
      }
      std::vector<int> values;
      for (const auto& row : rows) {
        if (!row.is_array() || row.size() != static_cast<std::size_t>(n)) {
          throw ParseError("every table row must have n entries");
        }
        for (const auto& v : row) {
          const long long x = v.get<long long>();
          check_entry(x, n, 0);
          values.push_back(static_cast<int>(x));
        }
      }
      return OpTable(n, std::move(values));
    });
  }
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty table file");
  const int n = read_size(lines[0], "size n");
  if (lines.size() != static_cast<std::size_t>(n) + 1) {
    throw ParseError("expected " + std::to_string(n) + " table rows, got " +
                         std::to_string(lines.size() - 1),
                     lines.back().number);
  }
  std::vector<int> values;
  for (int r = 1; r <= n; ++r) {
    const Line& line = lines[r];
    if (line.values.size() != static_cast<std::size_t>(n)) {
      throw ParseError("expected " + std::to_string(n) + " entries", line.number);
    }
    for (long long v : line.values) {
      check_entry(v, n, line.number);
      values.push_back(static_cast<int>(v));
    }
  }
  return OpTable(n, std::move(values));
}

std::string format_op_table(const OpTable& f) {
  std::ostringstream out;
  out << f.size() << '\n';
  for (int x = 1; x <= f.size(); ++x) {
    for (int y = 1; y <= f.size(); ++y) out << (y > 1 ? " " : "") << f(x, y);
    out << '\n';
  }
  return out.str();
}

std::string format_op_table_json(const OpTable& f) {
  json rows = json::array();
  for (int x = 1; x <= f.size(); ++x) {
    json row = json::array();
    for (int y = 1; y <= f.size(); ++y) row.push_back(f(x, y));
    rows.push_back(std::move(row));
  }
  return json{{"n", f.size()}, {"table", std::move(rows)}}.dump();
}

namespace {

SemilatticeOrder build_order(int n, const std::vector<std::pair<int, int>>& pairs) {
  try {
    return SemilatticeOrder::from_order(PartialOrder::from_pairs(n, pairs));
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what());
  } catch (const NotSemilattice& e) {
    throw ParseError(e.what());
  }
}

}  // namespace

SemilatticeOrder parse_order(std::string_view text) {
  std::vector<std::pair<int, int>> pairs;
  if (looks_like_json(text)) {
    return json_guard([&] {
      const json doc = parse_json(text);
      const int n = doc.at("n").get<int>();
      if (n < 0) throw ParseError("negative size");
      for (const auto& p : doc.value("relations", json::array())) {
        if (!p.is_array() || p.size() != 2) throw ParseError("relations must be [x, y] pairs");
        const long long x = p[0].get<long long>();
        const long long y = p[1].get<long long>();
        check_entry(x, n, 0);
        check_entry(y, n, 0);
        pairs.emplace_back(static_cast<int>(x), static_cast<int>(y));
      }
      return build_order(n, pairs);
    });
  }
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError("empty order file");
  const int n = read_size(lines[0], "size n");
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const Line& line = lines[i];
    if (line.values.size() != 2) throw ParseError("expected a pair 'x y'", line.number);
    check_entry(line.values[0], n, line.number);
    check_entry(line.values[1], n, line.number);
    pairs.emplace_back(static_cast<int>(line.values[0]), static_cast<int>(line.values[1]));
  }
  return build_order(n, pairs);
}

std::string format_order(const SemilatticeOrder& s) {
  std::ostringstream out;
  out << s.size() << '\n';
  for (auto [x, y] : s.order().covers()) out << x << ' ' << y << '\n';
  return out.str();
}

std::string format_order_json(const SemilatticeOrder& s) {
  json rel = json::array();
  for (auto [x, y] : s.order().covers()) rel.push_back({x, y});
  return json{{"n", s.size()}, {"relations", std::move(rel)}}.dump();
}

std::string format_order_line(const SemilatticeOrder& s) {
  std::ostringstream out;
  bool first = true;
  for (auto [x, y] : s.order().covers()) {
    out << (first ? "" : ", ") << x << ' ' << y;
    first = false;
  }
  return out.str();
}

TotalOrder parse_total_order(std::string_view text) {
  std::vector<int> chain;
  if (looks_like_json(text)) {
    json_guard([&] {
      const json doc = parse_json(text);
      for (const auto& v : doc.at("chain")) chain.push_back(v.get<int>());
      return 0;
    });
  } else {
    const auto lines = tokenize(text);
    if (lines.size() > 1) throw ParseError("a total order is a single line", lines[1].number);
    if (!lines.empty()) {
      for (long long v : lines[0].values) chain.push_back(static_cast<int>(v));
    }
  }
  try {
    return TotalOrder::from_chain(std::move(chain));
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what());
  }
}

std::string format_total_order(const TotalOrder& t) {
  std::ostringstream out;
  for (int p = 1; p <= t.size(); ++p) out << (p > 1 ? " " : "") << t.at(p);
  return out.str();
}

KaryOpTable parse_kary_table(std::string_view text) {
  int n = 0;
  int k = 0;
  std::vector<int> values;
  if (looks_like_json(text)) {
    json_guard([&] {
      const json doc = parse_json(text);
      n = doc.at("n").get<int>();
      k = doc.at("k").get<int>();
      for (const auto& v : doc.at("values")) {
        const long long x = v.get<long long>();
        check_entry(x, n, 0);
        values.push_back(static_cast<int>(x));
      }
      return 0;
    });
  } else {
    const auto lines = tokenize(text);
    if (lines.empty()) throw ParseError("empty k-ary table file");
    if (lines[0].values.size() != 2) throw ParseError("expected header 'n k'", lines[0].number);
    n = static_cast<int>(lines[0].values[0]);
    k = static_cast<int>(lines[0].values[1]);
    if (n < 0 || k < 2) throw ParseError("need n >= 0 and k >= 2", lines[0].number);
    for (std::size_t i = 1; i < lines.size(); ++i) {
      for (long long v : lines[i].values) {
        check_entry(v, n, lines[i].number);
        values.push_back(static_cast<int>(v));
      }
    }
  }
  try {
    return KaryOpTable(n, k, std::move(values));
  } catch (const PreconditionViolated& e) {
    throw ParseError(e.what());
  }
}

std::string format_kary_table(const KaryOpTable& f) {
  std::ostringstream out;
  out << f.size() << ' ' << f.arity() << '\n';
  const auto values = f.values();
  const std::size_t row = static_cast<std::size_t>(std::max(f.size(), 1));
  for (std::size_t i = 0; i < values.size(); ++i) {
    out << values[i] << ((i + 1) % row == 0 ? '\n' : ' ');
  }
  return out.str();
}

}  // namespace semichain

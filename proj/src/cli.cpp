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

#include "semichain/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "semichain/assoc_test.hpp"
#include "semichain/construction.hpp"
#include "semichain/enumeration.hpp"
#include "semichain/errors.hpp"
#include "semichain/hasse.hpp"
#include "semichain/io.hpp"
#include "semichain/kary.hpp"

namespace semichain {
namespace {

using nlohmann::json;

class UsageError : public Error {
 public:
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

int generation_bound() {
  if (const char* env = std::getenv("SEMICHAIN_MAX_N")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw UsageError("SEMICHAIN_MAX_N must be an integer");
    }
  }
  return kDefaultGenerationBound;
}

std::string opt_str(const std::optional<int>& v) { return v ? std::to_string(*v) : "none"; }
json opt_json(const std::optional<int>& v) { return v ? json(*v) : json(nullptr); }
const char* yes_no(bool b) { return b ? "true" : "false"; }

json big_json(const BigCount& c) {
  if (c <= BigCount(std::numeric_limits<std::int64_t>::max())) {
    return json(static_cast<std::int64_t>(c));
  }
  return json(c.str());
}

// --- check -----------------------------------------------------------------

int cmd_check(const std::string& file, bool as_json, std::ostream& out) {
  const OpTable f = parse_op_table(read_file(file));
  const TotalOrder natural = TotalOrder::natural(f.size());
  const bool assoc = is_associative(f);
  const bool idem = is_idempotent(f);
  const bool sym = is_symmetric(f);
  const bool mono = is_preserving(f, natural);
  const auto deg = degree_sequence(f);

  std::optional<TestTrace> trace;
  std::string not_applicable;
  if (!idem) {
    not_applicable = "not idempotent";
  } else if (!sym) {
    not_applicable = "not symmetric";
  } else if (!mono) {
    not_applicable = "not monotone";
  } else {
    trace = fast_associativity_test(f);
  }
  std::optional<SemilatticeOrder> order;
  if (trace && trace->associative()) {
    order = trace->order;
  } else if (assoc && idem && sym) {
    order = order_from_op(f);
  }

  if (as_json) {
    json doc{{"n", f.size()},
             {"associative", assoc},
             {"idempotent", idem},
             {"symmetric", sym},
             {"monotone", mono},
             {"quasitrivial", is_quasitrivial(f)},
             {"smooth", is_smooth(f)},
             {"internal", is_internal_op(f, natural)},
             {"zero", opt_json(zero_element(f))},
             {"neutral", opt_json(neutral_element(f))},
             {"degrees", deg.counts}};
    if (trace) {
      doc["fast_test"] = trace->associative() ? "associative" : "not associative";
      if (!trace->associative()) doc["failing_interval"] = {trace->failing.lo, trace->failing.hi};
    } else {
      doc["fast_test"] = "not applicable: " + not_applicable;
    }
    if (order) {
      json rel = json::array();
      for (auto [x, y] : order->order().covers()) rel.push_back({x, y});
      doc["order"] = std::move(rel);
    }
    out << doc.dump() << '\n';
  } else {
    out << "n: " << f.size() << '\n'
        << "associative: " << yes_no(assoc) << '\n'
        << "idempotent: " << yes_no(idem) << '\n'
        << "symmetric: " << yes_no(sym) << '\n'
        << "monotone: " << yes_no(mono) << '\n'
        << "quasitrivial: " << yes_no(is_quasitrivial(f)) << '\n'
        << "smooth: " << yes_no(is_smooth(f)) << '\n'
        << "internal: " << yes_no(is_internal_op(f, natural)) << '\n'
        << "zero: " << opt_str(zero_element(f)) << '\n'
        << "neutral: " << opt_str(neutral_element(f)) << '\n'
        << "degrees:";
    for (auto d : deg.counts) out << ' ' << d;
    out << '\n';
    if (!trace) {
      out << "fast test: not applicable (" << not_applicable << ")\n";
    } else if (trace->associative()) {
      out << "fast test: associative\n";
    } else {
      out << "fast test: not associative, failing interval [" << trace->failing.lo << ","
          << trace->failing.hi << "]\n";
    }
    if (order) out << "order: " << format_order_line(*order) << '\n';
  }
  return assoc ? kExitOk : kExitFalse;
}

// --- count -----------------------------------------------------------------

BigCount sequence_value(const std::string& seq, int n) {
  if (seq == "alpha") return alpha(n);
  if (seq == "tau") return tau(n);
  if (seq == "beta") return beta(n);
  if (seq == "delta") return delta(n);
  if (seq == "internal") return count_internal_only(n);
  throw UsageError("unknown sequence '" + seq + "'");
}

int cmd_count(const std::string& seq, int n, bool table, int upto, bool as_json, std::ostream& out) {
  if (table) {
    if (upto < 0) throw UsageError("--upto must be nonnegative");
    if (as_json) {
      json rows = json::array();
      for (int m = 0; m <= upto; ++m) {
        rows.push_back({{"n", m},
                        {"alpha", big_json(alpha(m))},
                        {"tau", big_json(tau(m))},
                        {"beta", big_json(beta(m))},
                        {"delta", big_json(delta(m))}});
      }
      out << rows.dump() << '\n';
    } else {
      out << "n alpha tau beta delta\n";
      for (int m = 0; m <= upto; ++m) {
        out << m << ' ' << alpha(m) << ' ' << tau(m) << ' ' << beta(m) << ' ' << delta(m) << '\n';
      }
    }
    return kExitOk;
  }
  if (seq.empty()) throw UsageError("count needs --seq or --table");
  if (n < 0) throw UsageError("--n must be nonnegative");
  const BigCount value = sequence_value(seq, n);
  if (as_json) {
    out << json{{"seq", seq}, {"n", n}, {"value", big_json(value)}}.dump() << '\n';
  } else {
    out << value << '\n';
  }
  return kExitOk;
}

// --- gen -------------------------------------------------------------------

int cmd_gen(int n, bool as_json, std::ostream& out) {
  if (n < 0) throw UsageError("--n must be nonnegative");
  for_each_nondecreasing_order(
      n,
      [&](const SemilatticeOrder& s) {
        out << (as_json ? format_order_json(s) : format_order_line(s)) << '\n';
      },
      generation_bound());
  return kExitOk;
}

// --- orders ----------------------------------------------------------------

int cmd_orders(const std::string& file, const std::string& mode, bool count_only, bool as_json,
               std::ostream& out) {
  const SemilatticeOrder s = parse_order(read_file(file));
  std::vector<TotalOrder> orders;
  BigCount count;
  if (mode == "nondecreasing") {
    count = count_nondecreasing_orders(s);
    if (!count_only) orders = total_orders_nondecreasing(s);
  } else if (mode == "internal") {
    count = count_internal_orders(s);
    if (!count_only) orders = total_orders_internal(s);
  } else if (mode == "ci") {
    count = count_ci_orders(s);
    if (!count_only) orders = total_orders_ci(s);
  } else {
    throw UsageError("unknown mode '" + mode + "'");
  }
  if (as_json) {
    json doc{{"mode", mode}, {"count", big_json(count)}};
    if (!count_only) {
      json list = json::array();
      for (const auto& t : orders) list.push_back(t.chain());
      doc["orders"] = std::move(list);
    }
    out << doc.dump() << '\n';
  } else if (count_only) {
    out << count << '\n';
  } else {
    for (const auto& t : orders) out << format_total_order(t) << '\n';
  }
  return kExitOk;
}

// --- plot / hasse ----------------------------------------------------------

int emit_hasse(const SemilatticeOrder& s, bool dot, bool as_json, std::ostream& out) {
  if (dot) {
    out << hasse_dot(s);
  } else if (as_json) {
    json edges = json::array();
    for (auto [x, y] : hasse(s).edges) edges.push_back({x, y});
    out << json{{"n", s.size()}, {"edges", std::move(edges)},
                {"binary_tree", is_binary_tree_semilattice(s)}}
               .dump()
        << '\n';
  } else {
    out << format_order(s);
  }
  return kExitOk;
}

int cmd_plot(const std::string& file, bool dot, bool as_json, std::ostream& out) {
  const OpTable f = parse_op_table(read_file(file));
  if (dot) {
    if (!is_idempotent(f) || !is_symmetric(f) || !is_associative(f)) {
      throw NotSemilattice("--dot needs a semilattice operation");
    }
    return emit_hasse(order_from_op(f), true, false, out);
  }
  const ContourPlot plot = contour_plot(f);
  if (as_json) {
    json sets = json::array();
    for (const auto& [value, cells] : plot.level_sets) {
      json c = json::array();
      for (auto [x, y] : cells) c.push_back({x, y});
      sets.push_back({{"value", value}, {"cells", std::move(c)}});
    }
    out << json{{"n", plot.n}, {"components", plot.component_count()}, {"level_sets", std::move(sets)}}
               .dump()
        << '\n';
  } else {
    out << render_contour(plot, f);
  }
  return kExitOk;
}

int cmd_hasse(const std::string& file, bool dot, bool as_json, std::ostream& out) {
  return emit_hasse(parse_order(read_file(file)), dot, as_json, out);
}

// --- classify --------------------------------------------------------------

int cmd_classify(const std::string& file, const std::string& chain_file, bool as_json,
                 std::ostream& out) {
  const SemilatticeOrder s = parse_order(read_file(file));
  const TotalOrder t =
      chain_file.empty() ? TotalOrder::natural(s.size()) : parse_total_order(read_file(chain_file));
  if (t.size() != s.size()) throw UsageError("order and chain sizes differ");
  const bool binary = is_binary_tree_semilattice(s);
  const bool nondecreasing = is_nondecreasing_for(s, t);
  const std::vector<std::pair<const char*, bool>> flags{
      {"ci_property", has_ci_property(s, t)},
      {"internal", is_internal_for(s, t)},
      {"nondecreasing", nondecreasing},
      {"linear_filter", has_linear_filter_property(s)},
      {"binary_tree", binary},
      {"structure_condition", binary && satisfies_structure_condition(s, t)},
      {"join_preserving", is_preserving(join_op(s), t)},
  };
  if (as_json) {
    json doc{{"n", s.size()}, {"chain", t.chain()}};
    for (auto [name, v] : flags) doc[name] = v;
    out << doc.dump() << '\n';
  } else {
    out << "chain: " << format_total_order(t) << '\n';
    for (auto [name, v] : flags) out << name << ": " << yes_no(v) << '\n';
  }
  return nondecreasing ? kExitOk : kExitFalse;
}

// --- reduce ----------------------------------------------------------------

int cmd_reduce(const std::string& file, bool as_json, std::ostream& out) {
  const OpTable g = reduce(parse_kary_table(read_file(file)));
  out << (as_json ? format_op_table_json(g) + "\n" : format_op_table(g));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semilattice operations on finite chains", "semichain"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Machine-readable output");

  std::string file;
  std::string mode = "nondecreasing";
  std::string seq;
  std::string chain_file;
  int n = -1;
  int upto = 8;
  bool table = false;
  bool count_only = false;
  bool dot = false;

  auto* check = app.add_subcommand("check", "Property panel and fast associativity test for a table");
  check->add_option("--file", file, "Table file")->required();

  auto* count = app.add_subcommand("count", "Exact values of alpha, tau, beta, delta, internal");
  count->add_option("--seq", seq, "alpha|tau|beta|delta|internal");
  count->add_option("--n", n, "Index");
  count->add_flag("--table", table, "Print the n, alpha, tau, beta, delta table");
  count->add_option("--upto", upto, "Last row of --table");

  auto* gen = app.add_subcommand("gen", "Stream the nondecreasing semilattice orders on {1..n}");
  gen->add_option("--n", n, "Ground set size")->required();

  auto* orders = app.add_subcommand("orders", "Total orders attached to a binary-tree semilattice");
  orders->add_option("--file", file, "Order file")->required();
  orders->add_option("--mode", mode, "nondecreasing|internal|ci");
  orders->add_flag("--count-only", count_only, "Print the count only");

  auto* plot = app.add_subcommand("plot", "ASCII contour plot of a table, or its Hasse diagram");
  plot->add_option("--file", file, "Table file")->required();
  plot->add_flag("--dot", dot, "Graphviz Hasse diagram of the associated order");

  auto* hasse_cmd = app.add_subcommand("hasse", "Cover relation of an order");
  hasse_cmd->add_option("--file", file, "Order file")->required();
  hasse_cmd->add_flag("--dot", dot, "Graphviz output");

  auto* classify = app.add_subcommand("classify", "Order predicates against a chain");
  classify->add_option("--file", file, "Order file")->required();
  classify->add_option("--chain", chain_file, "Total order file (default: natural order)");

  auto* reduce_cmd = app.add_subcommand("reduce", "Reduce a k-ary table to its binary operation");
  reduce_cmd->add_option("--file", file, "k-ary table file")->required();

  for (auto* sub : app.get_subcommands({})) sub->add_flag("--json", as_json, "Machine-readable output");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*check) return cmd_check(file, as_json, out);
    if (*count) return cmd_count(seq, n, table, upto, as_json, out);
    if (*gen) return cmd_gen(n, as_json, out);
    if (*orders) return cmd_orders(file, mode, count_only, as_json, out);
    if (*plot) return cmd_plot(file, dot, as_json, out);
    if (*hasse_cmd) return cmd_hasse(file, dot, as_json, out);
    if (*classify) return cmd_classify(file, chain_file, as_json, out);
    if (*reduce_cmd) return cmd_reduce(file, as_json, out);
  } catch (const ParseError& e) {
    err << "error: " << file << ": " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitFalse;
  }
  return kExitUsage;
}

}  // namespace semichain

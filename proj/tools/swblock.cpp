// swblock: Steiner k-Wiener indices of block graphs.
//
// Subcommands:
//   compute   one graph, one k, one method (or auto with an oracle check)
//   compare   one graph, every applicable method for k = 2..kmax
//   scan      every graph with a given block order sequence, min/max summary
//   problems  every tree with a given degree sequence, greedy/caterpillar verdicts
//
// Exit codes: 0 success, 1 input error, 2 guard exceeded, 3 agreement failure.

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "swb/blocks.hpp"
#include "swb/closed_forms.hpp"
#include "swb/combinatorics.hpp"
#include "swb/constructions.hpp"
#include "swb/decompositions.hpp"
#include "swb/extremal.hpp"
#include "swb/graph_io.hpp"
#include "swb/oracle.hpp"

namespace {

using swb::BigInt;
using swb::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitInput = 1;
constexpr int kExitGuard = 2;
constexpr int kExitDisagree = 3;

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string item;
  std::stringstream ss(text);
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    size_t pos = 0;
    int v = std::stoi(item, &pos);
    if (pos != item.size()) throw std::invalid_argument("bad integer list entry: " + item);
    out.push_back(v);
  }
  if (out.empty()) throw std::invalid_argument("empty integer list");
  return out;
}

struct Timed {
  BigInt value;
  double ms = 0.0;
};

template <typename F>
Timed timed(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  BigInt v = f();
  auto t1 = std::chrono::steady_clock::now();
  return {std::move(v), std::chrono::duration<double, std::milli>(t1 - t0).count()};
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  out << j.dump(2) << '\n';
}

void write_csv_file(const std::string& path, const std::vector<std::string>& lines) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open " + path);
  for (const auto& line : lines) out << line << '\n';
}

json input_descriptor(const std::string& path, const Graph& g) {
  return {{"path", path}, {"n", g.vertex_count()}, {"m", g.edge_count()}};
}

// End-to-end block orders of a path-like graph: walk the chain from one
// pendant block, crossing one cut vertex per step.
std::vector<int> chain_orders(const swb::BlockCutDecomposition& d) {
  int t = static_cast<int>(d.blocks.size());
  int start = -1;
  for (int b = 0; b < t; ++b)
    if (d.is_pendant_block(b)) {
      start = b;
      break;
    }
  std::vector<int> orders;
  int prev = -1, cur = start;
  while (true) {
    orders.push_back(static_cast<int>(d.blocks[cur].size()));
    int next = -1;
    for (swb::Vertex v : d.blocks[cur]) {
      if (!d.is_cut_vertex(v)) continue;
      for (int b : d.blocks_of_vertex[v])
        if (b != cur && b != prev) next = b;
    }
    if (next < 0) break;
    prev = cur;
    cur = next;
  }
  return orders;
}

// ---------------------------------------------------------------- compute --

int cmd_compute(const std::string& graph_file, int k, const std::string& method,
                const std::string& json_path, long long oracle_guard,
                unsigned long long seed) {
  Graph g = swb::load_graph(graph_file);
  swb::require_block_graph(g, "compute");
  if (k < 2 || k > g.vertex_count())
    throw std::invalid_argument("compute: k must lie in 2..n");
  if (method == "edge3" && k != 3)
    throw std::invalid_argument("compute: method edge3 requires k = 3");

  swb::OracleLimits limits;
  if (oracle_guard > 0) limits.max_subsets = oracle_guard;

  json methods = json::object();
  std::vector<std::string> notes;
  std::vector<std::pair<std::string, Timed>> runs;

  auto run = [&](const std::string& name) {
    if (name == "block")
      runs.emplace_back(name, timed([&] { return swb::sw_block_decomposition(g, k); }));
    else if (name == "vertex")
      runs.emplace_back(name, timed([&] { return swb::sw_vertex_decomposition(g, k); }));
    else if (name == "hamming")
      runs.emplace_back(name, timed([&] { return swb::sw_hamming(g, k, limits); }));
    else if (name == "edge3")
      runs.emplace_back(name, timed([&] { return swb::sw3_edge(g); }));
    else if (name == "oracle")
      runs.emplace_back(name, timed([&] { return swb::sw_bruteforce(g, k, limits); }));
    else
      throw std::invalid_argument("compute: unknown method " + name);
  };

  if (method == "auto") {
    run("vertex");
    try {
      run("oracle");
      notes.push_back("oracle cross-check ran");
    } catch (const swb::guard_error&) {
      notes.push_back("oracle cross-check skipped (guard)");
    }
  } else {
    run(method);
  }

  bool agree = true;
  for (const auto& [name, r] : runs)
    if (r.value != runs.front().second.value) agree = false;
  for (const auto& [name, r] : runs)
    methods[name] = {{"value", r.value.str()}, {"ms", r.ms}};

  json report = {{"command", "compute"},
                 {"input", input_descriptor(graph_file, g)},
                 {"k", k},
                 {"method", method},
                 {"seed", seed},
                 {"methods", methods},
                 {"agreement", agree},
                 {"notes", notes}};
  if (!json_path.empty()) write_json_file(json_path, report);

  std::cout << "graph " << graph_file << "  n=" << g.vertex_count()
            << " m=" << g.edge_count() << "  k=" << k << '\n';
  for (const auto& [name, r] : runs)
    std::cout << "  " << std::left << std::setw(8) << name << ' ' << r.value.str()
              << "  (" << std::fixed << std::setprecision(2) << r.ms << " ms)\n";
  if (!agree) {
    std::cout << "agreement: FAILED\n";
    return kExitDisagree;
  }
  std::cout << "SW_" << k << " = " << runs.front().second.value.str() << '\n';
  return kExitOk;
}

// ---------------------------------------------------------------- compare --

int cmd_compare(const std::string& graph_file, int kmax, const std::string& json_path,
                const std::string& csv_path, long long oracle_guard,
                unsigned long long seed) {
  Graph g = swb::load_graph(graph_file);
  swb::require_block_graph(g, "compare");
  int n = g.vertex_count();
  if (kmax < 2 || kmax > n)
    throw std::invalid_argument("compare: kmax must lie in 2..n");

  swb::OracleLimits limits;
  if (oracle_guard > 0) limits.max_subsets = oracle_guard;

  auto d = swb::decompose(g);
  auto cls = swb::classify(g, d);
  std::vector<int> orders_end_to_end;
  if (cls.is_path_like) orders_end_to_end = chain_orders(d);

  json rows = json::array();
  json notes = json::array();
  std::vector<std::string> csv;
  csv.push_back("k,block,vertex,hamming,edge,oracle,agree");

  bool all_agree = true;
  bool any_row_computed = false;
  std::cout << std::left << std::setw(4) << "k" << std::setw(14) << "block"
            << std::setw(14) << "vertex" << std::setw(14) << "hamming"
            << std::setw(14) << "edge" << std::setw(14) << "oracle"
            << "agree" << '\n';

  for (int k = 2; k <= kmax; ++k) {
    std::vector<std::pair<std::string, std::optional<Timed>>> cells;
    cells.emplace_back("block", timed([&] { return swb::sw_block_decomposition(g, k); }));
    cells.emplace_back("vertex", timed([&] { return swb::sw_vertex_decomposition(g, k); }));
    try {
      cells.emplace_back("hamming", timed([&] { return swb::sw_hamming(g, k, limits); }));
    } catch (const swb::guard_error&) {
      cells.emplace_back("hamming", std::nullopt);
      notes.push_back({{"kind", "skipped"}, {"method", "hamming"}, {"k", k}});
    }
    if (k == 2)
      cells.emplace_back("edge", timed([&] { return swb::wiener_edge(g); }));
    else if (k == 3)
      cells.emplace_back("edge", timed([&] { return swb::sw3_edge(g); }));
    else
      cells.emplace_back("edge", std::nullopt);
    try {
      cells.emplace_back("oracle", timed([&] { return swb::sw_bruteforce(g, k, limits); }));
    } catch (const swb::guard_error&) {
      cells.emplace_back("oracle", std::nullopt);
      notes.push_back({{"kind", "skipped"}, {"method", "oracle"}, {"k", k}});
    }

    std::optional<BigInt> first;
    bool row_agree = true;
    for (const auto& [name, cell] : cells)
      if (cell) {
        if (!first)
          first = cell->value;
        else if (cell->value != *first)
          row_agree = false;
      }
    if (first) any_row_computed = true;
    if (!row_agree) all_agree = false;

    json jvalues = json::object(), jms = json::object();
    std::string csv_line = std::to_string(k);
    std::cout << std::left << std::setw(4) << k;
    for (const auto& [name, cell] : cells) {
      std::string text = cell ? cell->value.str() : "-";
      std::cout << std::setw(14) << text;
      csv_line += "," + text;
      if (cell) {
        jvalues[name] = cell->value.str();
        jms[name] = cell->ms;
      }
    }
    std::cout << (row_agree ? "yes" : "NO") << '\n';
    csv_line += row_agree ? ",yes" : ",no";
    csv.push_back(csv_line);
    rows.push_back({{"k", k}, {"values", jvalues}, {"ms", jms}, {"agree", row_agree}});

    // Discrepancy columns for the formulas kept in their published shape.
    if (k == 3 && first) {
      BigInt lit = swb::sw3_edge_literal(g);
      BigInt delta = lit - *first;
      notes.push_back({{"kind", "sw3_edge_literal"},
                       {"k", 3},
                       {"value", lit.str()},
                       {"delta", delta.str()}});
    }
    if (cls.is_path_like && k <= n - 1 && first) {
      BigInt lit = swb::sw_path_like(orders_end_to_end, k, swb::PathLikeVariant::literal);
      BigInt delta = lit - *first;
      notes.push_back({{"kind", "path_like_literal"},
                       {"k", k},
                       {"value", lit.str()},
                       {"delta", delta.str()}});
    }
  }

  for (const auto& note : notes)
    if (note["kind"] != "skipped")
      std::cout << "note: " << note["kind"].get<std::string>() << " k="
                << note["k"].get<int>() << " value=" << note["value"].get<std::string>()
                << " delta=" << note["delta"].get<std::string>() << '\n';

  json report = {{"command", "compare"},
                 {"input", input_descriptor(graph_file, g)},
                 {"k_range", {2, kmax}},
                 {"seed", seed},
                 {"rows", rows},
                 {"agreement", all_agree},
                 {"notes", notes}};
  if (!json_path.empty()) write_json_file(json_path, report);
  if (!csv_path.empty()) write_csv_file(csv_path, csv);

  if (!any_row_computed) {
    std::cerr << "compare: every method exceeded its guard\n";
    return kExitGuard;
  }
  if (!all_agree) {
    std::cout << "agreement: FAILED\n";
    return kExitDisagree;
  }
  std::cout << "agreement: yes\n";
  return kExitOk;
}

// ------------------------------------------------------------------- scan --

int cmd_scan(const std::string& orders_text, int k, const std::string& json_path,
             const std::string& csv_path, int max_vertices, unsigned long long seed) {
  swb::BlockOrderSequence seq(parse_int_list(orders_text));
  swb::FamilyLimits limits;
  if (max_vertices > 0) limits.max_vertices = max_vertices;
  if (k < 2 || k > seq.implied_order())
    throw std::invalid_argument("scan: k must lie in 2..n");

  auto rep = swb::extremal_scan(seq, k, limits);

  std::vector<std::string> csv;
  csv.push_back("index,canonical,sw_k,star_like,path_like");
  json rows = json::array();
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    csv.push_back(std::to_string(i) + ",\"" + r.canonical + "\"," + r.value.str() +
                  "," + (r.star_like ? "1" : "0") + "," + (r.path_like ? "1" : "0"));
    rows.push_back({{"canonical", r.canonical},
                    {"value", r.value.str()},
                    {"star_like", r.star_like},
                    {"path_like", r.path_like}});
  }

  bool min_is_star = true, max_has_path = false;
  for (size_t i : rep.min_indices)
    if (!rep.rows[i].star_like) min_is_star = false;
  for (size_t i : rep.max_indices)
    if (rep.rows[i].path_like) max_has_path = true;

  json report = {{"command", "scan"},
                 {"orders", seq.orders},
                 {"k", k},
                 {"seed", seed},
                 {"members", rep.rows.size()},
                 {"rows", rows},
                 {"min", {{"value", rep.min_value.str()},
                          {"indices", rep.min_indices},
                          {"star_like", min_is_star}}},
                 {"max", {{"value", rep.max_value.str()},
                          {"indices", rep.max_indices},
                          {"path_like", max_has_path}}}};
  if (!json_path.empty()) write_json_file(json_path, report);
  if (!csv_path.empty()) write_csv_file(csv_path, csv);

  std::cout << "family of " << rep.rows.size() << " graphs, k=" << k << '\n';
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& r = rep.rows[i];
    std::cout << "  [" << i << "] SW=" << r.value.str()
              << (r.star_like ? " star-like" : "") << (r.path_like ? " path-like" : "")
              << "  " << r.canonical << '\n';
  }
  std::cout << "min=" << rep.min_value.str() << (min_is_star ? " (star-like)" : "")
            << ", max=" << rep.max_value.str() << (max_has_path ? " (path-like)" : "")
            << '\n';
  return kExitOk;
}

// --------------------------------------------------------------- problems --

int cmd_problems(const std::string& degrees_text, int k, const std::string& mode_text,
                 const std::string& json_path, const std::string& csv_path,
                 unsigned long long seed) {
  swb::DegreeSequence ds(parse_int_list(degrees_text));
  swb::ProblemMode mode;
  if (mode_text == "trees")
    mode = swb::ProblemMode::trees;
  else if (mode_text == "line_graphs")
    mode = swb::ProblemMode::line_graphs;
  else
    throw std::invalid_argument("problems: mode must be trees or line_graphs");
  if (k < 2) throw std::invalid_argument("problems: k must be at least 2");

  auto rep = swb::problem_scan(ds, k, mode);

  std::vector<std::string> csv;
  csv.push_back("index,canonical,value,caterpillar,is_min,is_max");
  json rows = json::array();
  for (size_t i = 0; i < rep.trees.size(); ++i) {
    bool cat = swb::is_caterpillar(rep.trees[i]);
    bool is_min = rep.values[i] == rep.min_value;
    bool is_max = rep.values[i] == rep.max_value;
    std::string canon = swb::canonical_form(rep.trees[i]);
    csv.push_back(std::to_string(i) + ",\"" + canon + "\"," + rep.values[i].str() +
                  "," + (cat ? "1" : "0") + "," + (is_min ? "1" : "0") + "," +
                  (is_max ? "1" : "0"));
    rows.push_back({{"canonical", canon},
                    {"value", rep.values[i].str()},
                    {"caterpillar", cat},
                    {"is_min", is_min},
                    {"is_max", is_max}});
  }

  json report = {{"command", "problems"},
                 {"degrees", ds.degrees},
                 {"k", k},
                 {"mode", mode_text},
                 {"seed", seed},
                 {"tree_count", rep.trees.size()},
                 {"rows", rows},
                 {"min", rep.min_value.str()},
                 {"max", rep.max_value.str()},
                 {"greedy", rep.greedy_value.str()},
                 {"greedy_is_min", rep.greedy_is_min},
                 {"caterpillar_is_max", rep.caterpillar_is_max}};
  if (rep.counterexample)
    report["counterexample"] = *rep.counterexample;
  else
    report["counterexample"] = nullptr;
  if (!json_path.empty()) write_json_file(json_path, report);
  if (!csv_path.empty()) write_csv_file(csv_path, csv);

  std::cout << rep.trees.size() << " trees, k=" << k << ", mode=" << mode_text << '\n'
            << "min=" << rep.min_value.str() << " max=" << rep.max_value.str()
            << " greedy=" << rep.greedy_value.str() << '\n'
            << "greedy_is_min=" << (rep.greedy_is_min ? "true" : "false")
            << " caterpillar_is_max=" << (rep.caterpillar_is_max ? "true" : "false")
            << '\n';
  if (rep.counterexample)
    std::cout << "counterexample: tree index " << *rep.counterexample << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Steiner k-Wiener indices of block graphs"};
  app.require_subcommand(1);

  std::string graph_file, method = "auto", json_path, csv_path;
  std::string orders_text, degrees_text, mode_text = "trees";
  int k = 2, kmax = 2, max_vertices = 0;
  long long oracle_guard = 0;
  unsigned long long seed = 0;

  auto* compute = app.add_subcommand("compute", "One graph, one k, one method");
  compute->add_option("graph", graph_file, "graph file (JSON or edge list)")->required();
  compute->add_option("--k", k, "subset size")->required();
  compute->add_option("--method", method,
                      "block|vertex|hamming|edge3|oracle|auto (default auto)");
  compute->add_option("--json", json_path, "write JSON report here");
  compute->add_option("--oracle-guard", oracle_guard, "max k-subsets for the oracle");
  compute->add_option("--seed", seed, "seed recorded in the report");

  auto* compare = app.add_subcommand(
      "compare", "All methods for k = 2..kmax. CSV columns: "
                 "k,block,vertex,hamming,edge,oracle,agree");
  compare->add_option("graph", graph_file, "graph file (JSON or edge list)")->required();
  compare->add_option("--kmax", kmax, "largest subset size")->required();
  compare->add_option("--json", json_path, "write JSON report here");
  compare->add_option("--csv", csv_path, "write CSV table here");
  compare->add_option("--oracle-guard", oracle_guard, "max k-subsets for the oracle");
  compare->add_option("--seed", seed, "seed recorded in the report");

  auto* scan = app.add_subcommand(
      "scan", "Every graph with a block order sequence. CSV columns: "
              "index,canonical,sw_k,star_like,path_like");
  scan->add_option("--orders", orders_text, "block orders, e.g. 3,2,2")->required();
  scan->add_option("--k", k, "subset size (default 2)");
  scan->add_option("--json", json_path, "write JSON report here");
  scan->add_option("--csv", csv_path, "write CSV table here");
  scan->add_option("--max-vertices", max_vertices, "enumeration size guard");
  scan->add_option("--seed", seed, "seed recorded in the report");

  auto* problems = app.add_subcommand(
      "problems", "Every tree with a degree sequence. CSV columns: "
                  "index,canonical,value,caterpillar,is_min,is_max");
  problems->add_option("--degrees", degrees_text, "degree sequence, e.g. 3,2,1,1,1")
      ->required();
  problems->add_option("--k", k, "subset size (default 2)");
  problems->add_option("--mode", mode_text, "trees|line_graphs (default trees)");
  problems->add_option("--json", json_path, "write JSON report here");
  problems->add_option("--csv", csv_path, "write CSV table here");
  problems->add_option("--seed", seed, "seed recorded in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return kExitInput;
  }

  try {
    if (compute->parsed())
      return cmd_compute(graph_file, k, method, json_path, oracle_guard, seed);
    if (compare->parsed())
      return cmd_compare(graph_file, kmax, json_path, csv_path, oracle_guard, seed);
    if (scan->parsed())
      return cmd_scan(orders_text, k, json_path, csv_path, max_vertices, seed);
    return cmd_problems(degrees_text, k, mode_text, json_path, csv_path, seed);
  } catch (const swb::guard_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
}

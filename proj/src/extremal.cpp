#include "swb/extremal.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>

#include "swb/combinatorics.hpp"
#include "swb/decompositions.hpp"
#include "swb/oracle.hpp"

namespace swb {

namespace {

std::vector<Vertex> shortest_path(const Graph& g, Vertex x, Vertex y) {
  std::vector<Vertex> parent(g.vertex_count(), -1);
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[x] = 0;
  q.push(x);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        parent[w] = u;
        q.push(w);
      }
  }
  std::vector<Vertex> path;
  for (Vertex v = y; v != -1; v = parent[v]) path.push_back(v);
  std::reverse(path.begin(), path.end());
  return path;
}

// Vertices cut off from `far` when `gate` is removed (excluding gate itself).
std::vector<Vertex> behind_gate(const Graph& g, Vertex gate, Vertex far) {
  int n = g.vertex_count();
  std::vector<bool> seen(n, false);
  seen[gate] = true;
  std::vector<Vertex> stack{far};
  seen[far] = true;
  while (!stack.empty()) {
    Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u))
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < n; ++v)
    if (!seen[v]) out.push_back(v);
  return out;
}

Graph rewire(const Graph& g, Vertex from, Vertex to, const std::vector<Vertex>& moved) {
  std::set<Vertex> m(moved.begin(), moved.end());
  std::vector<Edge> edges;
  for (const auto& [a, b] : g.edges()) {
    if (a == from && m.count(b))
      edges.push_back({std::min(to, b), std::max(to, b)});
    else if (b == from && m.count(a))
      edges.push_back({std::min(to, a), std::max(to, a)});
    else
      edges.push_back({a, b});
  }
  return Graph(g.vertex_count(), edges);
}

// Tree center(s) of an adjacency-list tree.
std::vector<int> tree_centers(const std::vector<std::vector<int>>& adj) {
  int n = static_cast<int>(adj.size());
  if (n == 1) return {0};
  std::vector<int> deg(n), order;
  std::queue<int> q;
  for (int v = 0; v < n; ++v) {
    deg[v] = static_cast<int>(adj[v].size());
    if (deg[v] <= 1) q.push(v);
  }
  int remaining = n;
  while (remaining > 2) {
    int layer = static_cast<int>(q.size());
    remaining -= layer;
    for (int i = 0; i < layer; ++i) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (--deg[w] == 1) q.push(w);
    }
  }
  std::vector<int> centers;
  while (!q.empty()) {
    centers.push_back(q.front());
    q.pop();
  }
  return centers;
}

std::string ahu_encode(const std::vector<std::vector<int>>& adj,
                       const std::vector<std::string>& label, int root) {
  // Iterative post-order to keep deep chains off the stack.
  int n = static_cast<int>(adj.size());
  std::vector<int> parent(n, -2), order;
  std::vector<std::string> enc(n);
  std::vector<std::vector<std::string>> child_encs(n);
  std::vector<int> stack{root};
  parent[root] = -1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (int w : adj[v])
      if (parent[w] == -2) {
        parent[w] = v;
        stack.push_back(w);
      }
  }
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    int v = *it;
    auto& cs = child_encs[v];
    std::sort(cs.begin(), cs.end());
    std::string s = "(" + label[v];
    for (const auto& c : cs) s += c;
    s += ")";
    enc[v] = std::move(s);
    if (parent[v] >= 0) child_encs[parent[v]].push_back(enc[v]);
  }
  return enc[root];
}

struct BcTree {
  std::vector<std::vector<int>> adj;
  std::vector<std::string> label;
};

BcTree block_cut_tree(const BlockCutDecomposition& d) {
  int t = static_cast<int>(d.blocks.size());
  int c = static_cast<int>(d.cut_vertices.size());
  BcTree bt;
  bt.adj.assign(t + c, {});
  bt.label.assign(t + c, "c");
  for (int b = 0; b < t; ++b)
    bt.label[b] = "b" + std::to_string(d.blocks[b].size());
  std::map<Vertex, int> cut_node;
  for (int i = 0; i < c; ++i) cut_node[d.cut_vertices[i]] = t + i;
  for (const auto& [b, v] : d.block_cut_tree_edges) {
    int cn = cut_node.at(v);
    bt.adj[b].push_back(cn);
    bt.adj[cn].push_back(b);
  }
  return bt;
}

BigInt family_value(const Graph& g, int k) { return sw_vertex_decomposition(g, k); }

}  // namespace

std::optional<GbsMove> gbs_move(const Graph& g, Vertex x, Vertex y) {
  require_block_graph(g, "gbs_move");
  require_vertex(g, x, "gbs_move");
  require_vertex(g, y, "gbs_move");
  if (x == y) return std::nullopt;

  auto d = decompose(g);
  auto path = shortest_path(g, x, y);

  // Every path block must be a bridge: a larger clique leaves interior
  // vertices outside A, B and the path, and their subsets change by amounts
  // the (|A|, |B|, q) data cannot express. Internal path vertices must not
  // branch for the same reason.
  for (size_t i = 0; i + 1 < path.size(); ++i)
    if (d.blocks[d.block_of_edge(path[i], path[i + 1])].size() != 2)
      return std::nullopt;
  for (size_t i = 1; i + 1 < path.size(); ++i)
    if (d.blocks_of_vertex[path[i]].size() != 2) return std::nullopt;

  GbsMove move;
  move.beneficiary = x;
  move.candidate = y;
  move.path_cut_vertices = path;
  move.set_a = behind_gate(g, x, y);
  move.set_b = behind_gate(g, y, x);
  move.proper = !d.is_leaf(x) && !d.is_leaf(y);
  return move;
}

Graph gbs_apply(const Graph& g, const GbsMove& move) {
  auto checked = gbs_move(g, move.beneficiary, move.candidate);
  if (!checked || checked->path_cut_vertices != move.path_cut_vertices ||
      checked->set_a != move.set_a || checked->set_b != move.set_b)
    throw std::invalid_argument("gbs_apply: move is not valid for this graph");

  const auto& path = checked->path_cut_vertices;
  Vertex x = checked->beneficiary, y = checked->candidate;
  auto d = decompose(g);
  int last_block = d.block_of_edge(path[path.size() - 2], y);
  std::set<Vertex> keep(d.blocks[last_block].begin(), d.blocks[last_block].end());
  std::vector<Vertex> moved;
  for (Vertex w : g.neighbors(y))
    if (!keep.count(w)) moved.push_back(w);

  Graph image = rewire(g, y, x, moved);
  auto di = decompose(image);
  if (!is_block_graph(image) || di.block_order_sequence != d.block_order_sequence)
    throw std::logic_error("gbs_apply: image left the family");
  return image;
}

BigInt gbs_difference(int a_size, int b_size, int q, int k) {
  if (a_size < 0 || b_size < 0 || q < 2 || k < 2)
    throw std::invalid_argument("gbs_difference: invalid parameters");
  BigInt sum = 0;
  for (int l1 = 1; l1 < k; ++l1)
    for (int l2 = 1; l1 + l2 <= k; ++l2) {
      int l3 = k - l1 - l2;
      BigInt path_ways = 0;
      for (int i = 1; i < q; ++i) path_ways += binomial(i, l3);
      sum += binomial(a_size, l1) * binomial(b_size, l2) * path_ways;
    }
  return sum;
}

BigInt gbs_difference_literal(int a_size, int b_size, int q, int k) {
  if (a_size < 0 || b_size < 0 || q < 2 || k < 2)
    throw std::invalid_argument("gbs_difference_literal: invalid parameters");
  BigInt sum = 0;
  for (int l = 1; l < k; ++l) sum += binomial(a_size, l) * binomial(b_size, k - l);
  return BigInt(q - 1) * sum;
}

std::optional<GbsWitness> gbs_preimage(const Graph& g) {
  require_block_graph(g, "gbs_preimage");
  auto d = decompose(g);
  if (d.blocks.size() < 2) return std::nullopt;

  std::vector<Vertex> branch_cuts;
  for (Vertex v : d.cut_vertices)
    if (d.blocks_of_vertex[v].size() >= 3) branch_cuts.push_back(v);
  if (branch_cuts.empty()) return std::nullopt;

  std::string target = canonical_form(g);
  for (Vertex leaf = 0; leaf < g.vertex_count(); ++leaf) {
    if (!d.is_leaf(leaf)) continue;
    auto dist = bfs_distances(g, leaf);
    std::vector<Vertex> candidates = branch_cuts;
    std::sort(candidates.begin(), candidates.end(),
              [&](Vertex u, Vertex v) { return dist[u] < dist[v]; });

    for (Vertex w : candidates) {
      // w keeps its path block and one more block; the rest hang on the
      // leaf, and the shift that moves them back reproduces g.
      auto path = shortest_path(g, w, leaf);
      int path_block = d.block_of_edge(path[0], path[1]);
      std::vector<int> others;
      for (int b : d.blocks_of_vertex[w])
        if (b != path_block) others.push_back(b);
      if (others.size() < 2) continue;

      std::vector<Vertex> moved;
      for (size_t oi = 1; oi < others.size(); ++oi)
        for (Vertex v : d.blocks[others[oi]])
          if (v != w) moved.push_back(v);

      Graph source = rewire(g, w, leaf, moved);
      if (!is_block_graph(source)) continue;
      auto move = gbs_move(source, w, leaf);
      if (!move || !move->proper) continue;
      Graph image = gbs_apply(source, *move);
      if (canonical_form(image) != target) continue;
      return GbsWitness{std::move(source), *move};
    }
  }
  return std::nullopt;
}

std::string canonical_form(const Graph& g) {
  require_block_graph(g, "canonical_form");
  auto d = decompose(g);
  if (d.blocks.empty()) return "(b1)";  // single vertex
  auto bt = block_cut_tree(d);
  std::string best;
  for (int root : tree_centers(bt.adj)) {
    std::string enc = ahu_encode(bt.adj, bt.label, root);
    if (best.empty() || enc < best) best = enc;
  }
  return best;
}

std::vector<Graph> enumerate_family(const BlockOrderSequence& seq,
                                    const FamilyLimits& limits) {
  if (seq.implied_order() > limits.max_vertices)
    throw guard_error("enumerate_family: implied order exceeds guard");

  std::map<std::string, Graph> found;
  long long visited = 0;

  // Grow a member block by block; each new clique glues at one existing
  // vertex. All attachment orders over distinct remaining sizes are tried.
  struct State {
    std::vector<Edge> edges;
    int n;
    std::vector<int> remaining;
  };
  auto rec = [&](auto&& self, const State& st) -> void {
    if (++visited > limits.max_graphs)
      throw guard_error("enumerate_family: search exceeds guard");
    if (st.remaining.empty()) {
      Graph g(st.n, st.edges);
      found.emplace(canonical_form(g), std::move(g));
      return;
    }
    std::set<int> tried_sizes;
    for (size_t i = 0; i < st.remaining.size(); ++i) {
      int b = st.remaining[i];
      if (!tried_sizes.insert(b).second) continue;
      std::vector<int> rest = st.remaining;
      rest.erase(rest.begin() + i);
      for (Vertex at = 0; at < st.n; ++at) {
        State next;
        next.edges = st.edges;
        next.n = st.n + b - 1;
        next.remaining = rest;
        std::vector<Vertex> block{at};
        for (int j = 0; j < b - 1; ++j) block.push_back(st.n + j);
        for (size_t p = 0; p < block.size(); ++p)
          for (size_t r = p + 1; r < block.size(); ++r)
            next.edges.push_back({block[p], block[r]});
        self(self, next);
      }
    }
  };

  State start;
  start.remaining = seq.orders;
  int first = start.remaining.front();
  start.remaining.erase(start.remaining.begin());
  start.n = first;
  for (int i = 0; i < first; ++i)
    for (int j = i + 1; j < first; ++j) start.edges.push_back({i, j});
  rec(rec, start);

  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

ExtremalReport extremal_scan(const BlockOrderSequence& seq, int k,
                             const FamilyLimits& limits) {
  ExtremalReport rep;
  rep.members = enumerate_family(seq, limits);
  for (const auto& g : rep.members) {
    ExtremalRow row;
    row.canonical = canonical_form(g);
    row.value = family_value(g, k);
    auto cls = classify(g);
    row.star_like = cls.is_star_like;
    row.path_like = cls.is_path_like;
    rep.rows.push_back(std::move(row));
  }
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const auto& v = rep.rows[i].value;
    if (i == 0 || v < rep.min_value) rep.min_value = v;
    if (i == 0 || v > rep.max_value) rep.max_value = v;
  }
  for (size_t i = 0; i < rep.rows.size(); ++i) {
    if (rep.rows[i].value == rep.min_value) rep.min_indices.push_back(i);
    if (rep.rows[i].value == rep.max_value) rep.max_indices.push_back(i);
  }
  return rep;
}

BuckleyResult buckley_check(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("buckley_check: input is not a tree");
  BuckleyResult r;
  r.w_tree = wiener_bfs(t);
  r.w_line_graph = t.vertex_count() >= 2 ? wiener_bfs(line_graph(t)) : BigInt(0);
  r.identity_holds = (r.w_line_graph == r.w_tree - binomial(t.vertex_count(), 2));
  return r;
}

std::vector<Graph> enumerate_trees_with_degrees(const DegreeSequence& ds,
                                                const FamilyLimits& limits) {
  int n = ds.size();
  if (n > limits.max_vertices)
    throw guard_error("enumerate_trees_with_degrees: order exceeds guard");
  if (!ds.tree_realizable())
    throw std::invalid_argument("enumerate_trees_with_degrees: not tree-realizable");
  if (n == 2) return {Graph(2, {{0, 1}})};

  // Prufer content: vertex i appears degrees[i] - 1 times.
  std::vector<int> content;
  for (int i = 0; i < n; ++i)
    for (int c = 0; c < ds.degrees[i] - 1; ++c) content.push_back(i);

  std::map<std::string, Graph> found;
  long long visited = 0;
  std::sort(content.begin(), content.end());
  do {
    if (++visited > limits.max_graphs)
      throw guard_error("enumerate_trees_with_degrees: search exceeds guard");
    // Prufer decode.
    std::vector<int> deg(n, 1);
    for (int v : content) ++deg[v];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
      if (deg[v] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int v : content) {
      int leaf = *leaves.begin();
      leaves.erase(leaves.begin());
      edges.push_back({std::min(leaf, v), std::max(leaf, v)});
      if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin(), b = *std::next(leaves.begin());
    edges.push_back({std::min(a, b), std::max(a, b)});
    Graph t(n, edges);
    found.emplace(canonical_form(t), std::move(t));
  } while (std::next_permutation(content.begin(), content.end()));

  std::vector<Graph> out;
  for (auto& [key, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> enumerate_trees(int n, const FamilyLimits& limits) {
  if (n < 1) throw std::invalid_argument("enumerate_trees: order must be positive");
  if (n == 1) return {Graph(1, {})};
  if (n == 2) return {Graph(2, {{0, 1}})};

  std::vector<Graph> out;
  // All non-increasing degree sequences with sum 2(n-1), entries in [1, n-1].
  std::vector<int> ds;
  auto rec = [&](auto&& self, int remaining, int slots, int cap) -> void {
    if (slots == 0) {
      if (remaining == 0)
        for (auto& t : enumerate_trees_with_degrees(DegreeSequence(ds), limits))
          out.push_back(std::move(t));
      return;
    }
    for (int d = std::min(cap, remaining - (slots - 1)); d >= 1; --d) {
      ds.push_back(d);
      self(self, remaining - d, slots - 1, d);
      ds.pop_back();
    }
  };
  rec(rec, 2 * (n - 1), n, n - 1);
  return out;
}

ProblemReport problem_scan(const DegreeSequence& ds, int k, ProblemMode mode,
                           const FamilyLimits& limits) {
  ProblemReport rep;
  rep.mode = mode;
  rep.k = k;
  rep.trees = enumerate_trees_with_degrees(ds, limits);

  auto evaluate = [&](const Graph& t) {
    return mode == ProblemMode::trees ? family_value(t, k) : family_value(line_graph(t), k);
  };
  for (const auto& t : rep.trees) rep.values.push_back(evaluate(t));
  for (size_t i = 0; i < rep.values.size(); ++i) {
    if (i == 0 || rep.values[i] < rep.min_value) rep.min_value = rep.values[i];
    if (i == 0 || rep.values[i] > rep.max_value) rep.max_value = rep.values[i];
  }
  for (size_t i = 0; i < rep.values.size(); ++i) {
    if (rep.values[i] == rep.min_value) rep.min_indices.push_back(i);
    if (rep.values[i] == rep.max_value) rep.max_indices.push_back(i);
  }

  rep.greedy_value = evaluate(greedy_tree(ds).graph);
  rep.greedy_is_min = (rep.greedy_value == rep.min_value);
  if (!rep.greedy_is_min) rep.counterexample = rep.min_indices.front();
  for (size_t i : rep.max_indices)
    if (is_caterpillar(rep.trees[i])) rep.caterpillar_is_max = true;
  return rep;
}

}  // namespace swb

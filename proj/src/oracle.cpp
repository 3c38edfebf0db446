#include "swb/oracle.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>

#include "swb/combinatorics.hpp"

namespace swb {

namespace {

constexpr int kInf = std::numeric_limits<int>::max() / 4;

std::vector<Vertex> checked_terminals(const Graph& g, const std::vector<Vertex>& terminals,
                                      const char* op) {
  std::vector<Vertex> t = terminals;
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  if (t.size() != terminals.size())
    throw std::invalid_argument(std::string(op) + ": repeated terminal");
  if (t.size() < 2)
    throw std::invalid_argument(std::string(op) + ": need at least two terminals");
  for (Vertex v : t) require_vertex(g, v, op);
  return t;
}

std::vector<std::vector<int>> all_pairs_distances(const Graph& g) {
  std::vector<std::vector<int>> d;
  d.reserve(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) d.push_back(bfs_distances(g, v));
  return d;
}

// dp[S][v] = least edge count of a tree containing terminal subset S plus v.
// Merge step joins two subtrees at v, then a Dijkstra pass lets the tree
// reach v over a path.
int dreyfus_wagner(const Graph& g, const std::vector<Vertex>& t,
                   const std::vector<std::vector<int>>& dist) {
  int n = g.vertex_count();
  int k = static_cast<int>(t.size());
  std::vector<std::vector<int>> dp(1u << k, std::vector<int>(n, kInf));
  for (int i = 0; i < k; ++i)
    for (Vertex v = 0; v < n; ++v) dp[1u << i][v] = dist[t[i]][v];

  using Entry = std::pair<int, Vertex>;
  for (unsigned s = 1; s < (1u << k); ++s) {
    if ((s & (s - 1)) == 0) continue;  // singletons are seeded above
    auto& row = dp[s];
    for (Vertex v = 0; v < n; ++v)
      for (unsigned sub = (s - 1) & s; sub > (s ^ sub); sub = (sub - 1) & s)
        row[v] = std::min(row[v], dp[sub][v] + dp[s ^ sub][v]);
    std::priority_queue<Entry, std::vector<Entry>, std::greater<>> pq;
    for (Vertex v = 0; v < n; ++v)
      if (row[v] < kInf) pq.push({row[v], v});
    while (!pq.empty()) {
      auto [du, u] = pq.top();
      pq.pop();
      if (du > row[u]) continue;
      for (Vertex w : g.neighbors(u))
        if (du + 1 < row[w]) {
          row[w] = du + 1;
          pq.push({row[w], w});
        }
    }
  }
  return dp[(1u << k) - 1][t[0]];
}

void guard_subsets(const BigInt& count, long long max_subsets, const char* op) {
  if (count > max_subsets)
    throw guard_error(std::string(op) + ": subset count exceeds guard of " +
                      std::to_string(max_subsets));
}

// Visits all k-subsets of {0..n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<Vertex> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

struct DisjointSet {
  std::vector<int> parent;
  explicit DisjointSet(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

// Enumerates spanning trees of the graph on `nu` vertices given by `edges`,
// calling fn once per tree. Classic include/exclude recursion over the edge
// list with union-find pruning.
template <typename Fn>
void for_each_spanning_tree(int nu, const std::vector<Edge>& edges, Fn&& fn) {
  int need = nu - 1;
  std::vector<Edge> chosen;
  auto rec = [&](auto&& self, size_t from, DisjointSet dsu) -> void {
    int picked = static_cast<int>(chosen.size());
    if (picked == need) {
      fn(chosen);
      return;
    }
    if (static_cast<int>(edges.size() - from) < need - picked) return;
    for (size_t i = from; i < edges.size(); ++i) {
      if (static_cast<int>(edges.size() - i) < need - picked) break;
      DisjointSet next = dsu;
      if (!next.unite(edges[i].first, edges[i].second)) continue;
      chosen.push_back(edges[i]);
      self(self, i + 1, std::move(next));
      chosen.pop_back();
    }
  };
  rec(rec, 0, DisjointSet(nu));
}

}  // namespace

int steiner_distance(const Graph& g, const std::vector<Vertex>& terminals,
                     const OracleLimits& limits) {
  require_connected(g, "steiner_distance");
  auto t = checked_terminals(g, terminals, "steiner_distance");
  if (static_cast<int>(t.size()) > limits.max_terminals)
    throw guard_error("steiner_distance: terminal set larger than guard of " +
                      std::to_string(limits.max_terminals));
  if (g.vertex_count() > limits.max_vertices)
    throw guard_error("steiner_distance: graph larger than guard of " +
                      std::to_string(limits.max_vertices));
  return dreyfus_wagner(g, t, all_pairs_distances(g));
}

BigInt sw_bruteforce(const Graph& g, int k, const OracleLimits& limits) {
  require_connected(g, "sw_bruteforce");
  int n = g.vertex_count();
  if (k < 2 || k > n) throw std::invalid_argument("sw_bruteforce: k out of range");
  guard_subsets(binomial(n, k), limits.max_subsets, "sw_bruteforce");
  if (k > limits.max_terminals)
    throw guard_error("sw_bruteforce: k exceeds terminal guard of " +
                      std::to_string(limits.max_terminals));
  if (n > limits.max_vertices)
    throw guard_error("sw_bruteforce: graph larger than guard of " +
                      std::to_string(limits.max_vertices));

  auto dist = all_pairs_distances(g);
  BigInt total = 0;
  for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
    total += dreyfus_wagner(g, s, dist);
  });
  return total;
}

SteinerResult enumerate_steiner_trees(const Graph& g, const std::vector<Vertex>& terminals,
                                      const OracleLimits& limits) {
  require_connected(g, "enumerate_steiner_trees");
  int n = g.vertex_count();
  if (n > limits.max_enum_vertices)
    throw guard_error("enumerate_steiner_trees: graph larger than guard of " +
                      std::to_string(limits.max_enum_vertices));
  SteinerResult res;
  res.terminals = checked_terminals(g, terminals, "enumerate_steiner_trees");
  res.distance = dreyfus_wagner(g, res.terminals, all_pairs_distances(g));
  res.inner_counts.assign(n, 0);

  std::vector<bool> in_terminals(n, false);
  for (Vertex v : res.terminals) in_terminals[v] = true;
  std::vector<Vertex> others;
  for (Vertex v = 0; v < n; ++v)
    if (!in_terminals[v]) others.push_back(v);

  int extra = res.distance + 1 - static_cast<int>(res.terminals.size());
  std::vector<Vertex> u_set;
  auto process_u = [&]() {
    // Induced subgraph on u_set, locally reindexed.
    int nu = static_cast<int>(u_set.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < nu; ++i) local[u_set[i]] = i;
    std::vector<Edge> sub_edges;
    for (int i = 0; i < nu; ++i)
      for (Vertex w : g.neighbors(u_set[i]))
        if (local[w] > i) sub_edges.push_back({i, local[w]});
    if (static_cast<int>(sub_edges.size()) < nu - 1) return;
    {
      DisjointSet dsu(nu);
      int comps = nu;
      for (const auto& [a, b] : sub_edges)
        if (dsu.unite(a, b)) --comps;
      if (comps != 1) return;
    }
    long long here = 0;
    for_each_spanning_tree(nu, sub_edges, [&](const std::vector<Edge>& tree) {
      std::vector<int> deg(nu, 0);
      for (const auto& [a, b] : tree) {
        ++deg[a];
        ++deg[b];
      }
      for (int i = 0; i < nu; ++i)
        if (deg[i] == 1 && !in_terminals[u_set[i]]) return;
      ++here;
    });
    res.tree_count += here;
    for (Vertex v : u_set)
      if (!in_terminals[v]) res.inner_counts[v] += here;
  };

  std::vector<Vertex> chosen;
  auto rec = [&](auto&& self, size_t from, int remaining) -> void {
    if (remaining == 0) {
      u_set = res.terminals;
      u_set.insert(u_set.end(), chosen.begin(), chosen.end());
      process_u();
      return;
    }
    for (size_t i = from; i < others.size(); ++i) {
      if (others.size() - i < static_cast<size_t>(remaining)) break;
      chosen.push_back(others[i]);
      self(self, i + 1, remaining - 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, extra);
  return res;
}

Rational betweenness_bruteforce(const Graph& g, Vertex v, int k, const OracleLimits& limits) {
  require_vertex(g, v, "betweenness_bruteforce");
  return betweenness_bruteforce_all(g, k, limits)[v];
}

std::vector<Rational> betweenness_bruteforce_all(const Graph& g, int k,
                                                 const OracleLimits& limits) {
  require_connected(g, "betweenness_bruteforce");
  int n = g.vertex_count();
  if (k < 2 || k > n - 1)
    throw std::invalid_argument("betweenness_bruteforce: k out of range");
  guard_subsets(binomial(n, k), limits.max_subsets, "betweenness_bruteforce");

  std::vector<Rational> b(n, Rational(0));
  for_each_subset(n, k, [&](const std::vector<Vertex>& a) {
    SteinerResult r = enumerate_steiner_trees(g, a, limits);
    for (Vertex v = 0; v < n; ++v)
      if (r.inner_counts[v] > 0)
        b[v] += Rational(r.inner_counts[v], r.tree_count);
  });
  return b;
}

}  // namespace swb

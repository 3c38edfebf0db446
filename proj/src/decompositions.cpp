#include "swb/decompositions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "swb/combinatorics.hpp"

namespace swb {

namespace {

void check_k_range(const Graph& g, int k, const char* op) {
  if (k < 2 || k > g.vertex_count())
    throw std::invalid_argument(std::string(op) + ": k out of range");
}

// Component profile of g after deleting the edges of the given block.
ComponentProfile profile_without_block_edges(const Graph& g,
                                             const std::vector<Vertex>& block) {
  std::set<Edge> removed;
  for (size_t i = 0; i < block.size(); ++i)
    for (size_t j = i + 1; j < block.size(); ++j)
      removed.insert({std::min(block[i], block[j]), std::max(block[i], block[j])});
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (!removed.count(e)) kept.push_back(e);
  return ComponentProfile::of_components(Graph(g.vertex_count(), kept));
}

// Component profile of g after deleting vertex v (ids are compacted).
ComponentProfile profile_without_vertex(const Graph& g, Vertex v) {
  int n = g.vertex_count();
  std::vector<int> id(n, -1);
  int next = 0;
  for (Vertex u = 0; u < n; ++u)
    if (u != v) id[u] = next++;
  std::vector<Edge> kept;
  for (const auto& [a, b] : g.edges())
    if (a != v && b != v) kept.push_back({id[a], id[b]});
  return ComponentProfile::of_components(Graph(n - 1, kept));
}

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

}  // namespace

HammingLabeling hamming_labeling(const Graph& g, const BlockCutDecomposition& d) {
  require_block_graph(g, "hamming_labeling");
  int n = g.vertex_count();
  int t = static_cast<int>(d.blocks.size());
  HammingLabeling lab;
  lab.blocks = d.blocks;
  lab.coords.assign(n, std::vector<int>(t, 0));
  for (int i = 0; i < t; ++i) {
    const auto& block = d.blocks[i];
    // Remove the block's edges, then label every component by the value of
    // the block vertex it retains. Block vertices take 0..b-1 by ascending id.
    std::set<Edge> removed;
    for (size_t a = 0; a < block.size(); ++a)
      for (size_t b = a + 1; b < block.size(); ++b)
        removed.insert({block[a], block[b]});
    std::vector<Edge> kept;
    for (const auto& e : g.edges())
      if (!removed.count(e)) kept.push_back(e);
    Graph residue(n, kept);
    for (int val = 0; val < static_cast<int>(block.size()); ++val) {
      auto dist = bfs_distances(residue, block[val]);
      for (Vertex v = 0; v < n; ++v)
        if (dist[v] >= 0) lab.coords[v][i] = val;
    }
  }
  return lab;
}

HammingLabeling hamming_labeling(const Graph& g) {
  return hamming_labeling(g, decompose(g));
}

int steiner_distance_hamming(const HammingLabeling& lab, const std::vector<Vertex>& s) {
  if (s.size() < 2)
    throw std::invalid_argument("steiner_distance_hamming: need at least two vertices");
  int t = static_cast<int>(lab.blocks.size());
  int sum = 0;
  std::set<int> seen;
  for (int i = 0; i < t; ++i) {
    seen.clear();
    for (Vertex v : s) seen.insert(lab.coords[v][i]);
    sum += static_cast<int>(seen.size());
  }
  return sum - t;
}

BigInt sw_hamming(const Graph& g, int k, const OracleLimits& limits) {
  check_k_range(g, k, "sw_hamming");
  int n = g.vertex_count();
  if (binomial(n, k) > limits.max_subsets)
    throw guard_error("sw_hamming: subset count exceeds guard");
  auto lab = hamming_labeling(g);
  BigInt total = 0;
  for_each_subset(n, k, [&](const std::vector<Vertex>& s) {
    total += steiner_distance_hamming(lab, s);
  });
  return total;
}

BigInt sw_block_decomposition(const Graph& g, int k) {
  require_block_graph(g, "sw_block_decomposition");
  check_k_range(g, k, "sw_block_decomposition");
  auto d = decompose(g);
  BigInt total = 0;
  for (const auto& block : d.blocks)
    total += n_prime_k(profile_without_block_edges(g, block), k);
  return total;
}

BigInt sw_vertex_decomposition(const Graph& g, int k) {
  require_block_graph(g, "sw_vertex_decomposition");
  check_k_range(g, k, "sw_vertex_decomposition");
  auto d = decompose(g);
  BigInt total = (k - 1) * binomial(g.vertex_count(), k);
  for (Vertex v : d.cut_vertices) total += n_k(profile_without_vertex(g, v), k);
  return total;
}

BigInt steiner_betweenness_blockgraph(const Graph& g, Vertex v, int k) {
  require_block_graph(g, "steiner_betweenness_blockgraph");
  require_vertex(g, v, "steiner_betweenness_blockgraph");
  check_k_range(g, k, "steiner_betweenness_blockgraph");
  return n_k(profile_without_vertex(g, v), k);
}

EdgePartition edge_partition(const Graph& g, Vertex a, Vertex b) {
  require_connected(g, "edge_partition");
  require_vertex(g, a, "edge_partition");
  require_vertex(g, b, "edge_partition");
  if (!g.has_edge(a, b))
    throw std::invalid_argument("edge_partition: (a, b) is not an edge");
  EdgePartition p;
  p.a = a;
  p.b = b;
  auto da = bfs_distances(g, a);
  auto db = bfs_distances(g, b);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (da[v] < db[v])
      ++p.n_ab;
    else if (db[v] < da[v])
      ++p.n_ba;
    else
      ++p.a_n_b;
  }
  return p;
}

BigInt wiener_edge(const Graph& g) {
  require_block_graph(g, "wiener_edge");
  BigInt total = 0;
  for (const auto& [a, b] : g.edges()) {
    auto p = edge_partition(g, a, b);
    total += BigInt(p.n_ab) * p.n_ba;
  }
  return total;
}

BigInt sw3_edge(const Graph& g) {
  require_block_graph(g, "sw3_edge");
  int n = g.vertex_count();
  if (n < 3) throw std::invalid_argument("sw3_edge: need at least three vertices");
  BigInt binom_sum = 0, product_sum = 0;
  for (const auto& [a, b] : g.edges()) {
    auto p = edge_partition(g, a, b);
    // Triples meeting both strict sides, by inclusion-exclusion: subtracting the
    // subsets that avoid either side removes the all-equidistant ones twice.
    binom_sum += binomial(n, 3) - binomial(n - p.n_ab, 3) - binomial(n - p.n_ba, 3) +
                 binomial(p.a_n_b, 3);
    product_sum += BigInt(p.n_ab) * p.n_ba * p.a_n_b;
  }
  Rational result = Rational(binom_sum) - Rational(product_sum, 3);
  if (!is_integral(result)) throw std::logic_error("sw3_edge: non-integral result");
  return numerator(result);
}

BigInt sw3_edge_literal(const Graph& g) {
  require_block_graph(g, "sw3_edge_literal");
  if (g.vertex_count() < 3)
    throw std::invalid_argument("sw3_edge_literal: need at least three vertices");
  BigInt pair_sum = 0, product_sum = 0;
  for (const auto& [a, b] : g.edges()) {
    auto p = edge_partition(g, a, b);
    pair_sum += BigInt(p.n_ab) * p.n_ba;
    product_sum += BigInt(p.n_ab) * p.n_ba * p.a_n_b;
  }
  Rational result = Rational(pair_sum) + Rational(2 * product_sum, 3);
  if (!is_integral(result)) throw std::logic_error("sw3_edge_literal: non-integral result");
  return numerator(result);
}

}  // namespace swb

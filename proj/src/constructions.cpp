#include "swb/constructions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace swb {

DegreeSequence::DegreeSequence(std::vector<int> ds) : degrees(std::move(ds)) {
  if (degrees.empty()) throw std::invalid_argument("degree sequence must be non-empty");
  for (int d : degrees)
    if (d < 1) throw std::invalid_argument("degree sequence entries must be positive");
  if (!std::is_sorted(degrees.rbegin(), degrees.rend()))
    throw std::invalid_argument("degree sequence must be non-increasing");
}

bool DegreeSequence::tree_realizable() const {
  if (size() < 2) return false;
  long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
  return sum == 2LL * (size() - 1);
}

bool is_tree(const Graph& g) {
  return g.edge_count() == g.vertex_count() - 1 && g.is_connected();
}

bool is_caterpillar(const Graph& g) {
  if (!is_tree(g)) return false;
  // After removing leaves, every remaining vertex may keep at most two
  // non-leaf neighbours, and the survivors must be connected in a path.
  int n = g.vertex_count();
  std::vector<bool> spine(n, false);
  for (Vertex v = 0; v < n; ++v) spine[v] = g.degree(v) >= 2;
  int ends = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (!spine[v]) continue;
    int spine_neighbors = 0;
    for (Vertex w : g.neighbors(v))
      if (spine[w]) ++spine_neighbors;
    if (spine_neighbors > 2) return false;
    if (spine_neighbors <= 1) ++ends;
  }
  // A path has two endpoints (or one isolated spine vertex); trees P_1, P_2
  // have no spine at all and count as caterpillars.
  return ends <= 2;
}

Graph line_graph(const Graph& t) {
  if (!is_tree(t)) throw std::invalid_argument("line_graph: input is not a tree");
  auto es = t.edges();
  int ln = static_cast<int>(es.size());
  if (ln == 0) throw std::invalid_argument("line_graph: tree has no edges");
  std::vector<Edge> ledges;
  for (int i = 0; i < ln; ++i)
    for (int j = i + 1; j < ln; ++j) {
      const auto& [a, b] = es[i];
      const auto& [c, d] = es[j];
      if (a == c || a == d || b == c || b == d) ledges.push_back({i, j});
    }
  return Graph(ln, ledges);
}

GreedyTree greedy_tree(const DegreeSequence& ds) {
  if (!ds.tree_realizable())
    throw std::invalid_argument("greedy_tree: degree sequence is not realizable as a tree");

  int n = ds.size();
  std::vector<Edge> edges;
  std::vector<std::vector<Vertex>> levels;
  int next_degree = 0;  // index of the next unassigned (largest remaining) degree
  std::vector<int> assigned(n, 0);

  Vertex root = 0;
  assigned[root] = ds.degrees[next_degree++];
  levels.push_back({root});
  int next_vertex = 1;

  while (next_vertex < n) {
    const auto& parents = levels.back();
    std::vector<Vertex> level;
    for (Vertex p : parents) {
      int children = assigned[p] - (p == root ? 0 : 1);
      for (int c = 0; c < children; ++c) {
        Vertex child = next_vertex++;
        assigned[child] = ds.degrees[next_degree++];
        edges.push_back({p, child});
        level.push_back(child);
      }
    }
    if (level.empty())
      throw std::invalid_argument("greedy_tree: degree sequence exhausted early");
    levels.push_back(std::move(level));
  }
  return GreedyTree{Graph(n, edges), std::move(levels)};
}

Graph caterpillar(const std::vector<int>& backbone_degrees) {
  if (backbone_degrees.empty())
    throw std::invalid_argument("caterpillar: backbone must be non-empty");
  for (int d : backbone_degrees)
    if (d < 2) throw std::invalid_argument("caterpillar: backbone degrees must be >= 2");

  int m = static_cast<int>(backbone_degrees.size());
  std::vector<Edge> edges;
  int n = m;
  for (int i = 0; i + 1 < m; ++i) edges.push_back({i, i + 1});
  for (int i = 0; i < m; ++i) {
    int path_neighbors = (m == 1) ? 0 : (i == 0 || i == m - 1 ? 1 : 2);
    for (int leaf = 0; leaf < backbone_degrees[i] - path_neighbors; ++leaf)
      edges.push_back({i, n++});
  }
  return Graph(n, edges);
}

}  // namespace swb

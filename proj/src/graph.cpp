#include "swb/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <string>

namespace swb {

Graph::Graph(int n, const std::vector<Edge>& edges) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  adj_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u < 0 || u >= n || v < 0 || v >= n)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + ", " + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
      throw std::invalid_argument("duplicate edge in input");
  }
  m_ = static_cast<int>(edges.size());
}

bool Graph::has_edge(Vertex u, Vertex v) const {
  const auto& nb = adj_[u];
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

bool Graph::is_connected() const {
  auto dist = bfs_distances(*this, 0);
  return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

Graph build_graph(int n, const std::vector<Edge>& edges) { return Graph(n, edges); }

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.vertex_count(), -1);
  std::queue<Vertex> q;
  dist[source] = 0;
  q.push(source);
  while (!q.empty()) {
    Vertex u = q.front();
    q.pop();
    for (Vertex w : g.neighbors(u))
      if (dist[w] < 0) {
        dist[w] = dist[u] + 1;
        q.push(w);
      }
  }
  return dist;
}

int geodesic_distance(const Graph& g, Vertex u, Vertex v) {
  require_vertex(g, u, "geodesic_distance");
  require_vertex(g, v, "geodesic_distance");
  int d = bfs_distances(g, u)[v];
  if (d < 0) throw std::invalid_argument("geodesic_distance: vertices not connected");
  return d;
}

BigInt wiener_bfs(const Graph& g) {
  require_connected(g, "wiener_bfs");
  BigInt sum = 0;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = u + 1; v < g.vertex_count(); ++v) sum += dist[v];
  }
  return sum;
}

void require_connected(const Graph& g, const char* operation) {
  if (!g.is_connected())
    throw std::invalid_argument(std::string(operation) + ": graph must be connected");
}

void require_vertex(const Graph& g, Vertex v, const char* operation) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument(std::string(operation) + ": vertex " + std::to_string(v) +
                                " out of range");
}

}  // namespace swb

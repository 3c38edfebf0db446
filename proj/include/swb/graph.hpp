#pragma once

#include <utility>
#include <vector>

#include "swb/bigint.hpp"

namespace swb {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertex ids 0..n-1, immutable once built.
// Construction rejects loops, duplicate edges and out-of-range endpoints.
class Graph {
 public:
  Graph(int n, const std::vector<Edge>& edges);

  int vertex_count() const { return static_cast<int>(adj_.size()); }
  int edge_count() const { return m_; }
  const std::vector<Vertex>& neighbors(Vertex v) const { return adj_[v]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
  bool has_edge(Vertex u, Vertex v) const;

  // Edge list with u < v, lexicographically sorted.
  std::vector<Edge> edges() const;

  bool is_connected() const;

 private:
  std::vector<std::vector<Vertex>> adj_;
  int m_ = 0;
};

Graph build_graph(int n, const std::vector<Edge>& edges);

// BFS distances from source; -1 marks unreachable vertices.
std::vector<int> bfs_distances(const Graph& g, Vertex source);

// Distance between two vertices of a connected graph.
int geodesic_distance(const Graph& g, Vertex u, Vertex v);

// Sum of pairwise distances, computed by n BFS sweeps. This is the ordinary
// Wiener index and serves as a reference independent of the k-subset code.
BigInt wiener_bfs(const Graph& g);

void require_connected(const Graph& g, const char* operation);
void require_vertex(const Graph& g, Vertex v, const char* operation);

}  // namespace swb

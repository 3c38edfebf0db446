#pragma once

// Shared fixtures for the unit and acceptance suites.

#include <cstdint>
#include <random>
#include <vector>

#include "swb/closed_forms.hpp"
#include "swb/graph.hpp"

namespace swbtest {

using swb::BlockOrderSequence;
using swb::Edge;
using swb::Graph;
using swb::Vertex;

// Triangle {0,1,2}, bridge 2-3, K4 on {3,4,5,6}. Small enough to check by
// hand, rich enough to exercise blocks of three different orders.
inline Graph triangle_bridge_k4() {
  return Graph(7, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}, {3, 6},
                   {4, 5}, {4, 6}, {5, 6}});
}

// Two triangles sharing vertex 2.
inline Graph bowtie() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

inline Graph path_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
  return Graph(n, e);
}

// Center 0, leaves 1..n-1.
inline Graph star_graph(int n) {
  std::vector<Edge> e;
  for (int i = 1; i < n; ++i) e.push_back({0, i});
  return Graph(n, e);
}

inline Graph complete_graph(int n) {
  std::vector<Edge> e;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) e.push_back({i, j});
  return Graph(n, e);
}

// Connected block graph grown by gluing cliques of order 2..4 at existing
// vertices. Fully determined by the seed; modular draws keep the sequence
// identical across standard library implementations.
inline Graph random_block_graph(std::uint64_t seed, int target_n) {
  std::mt19937_64 rng(seed);
  int n = 1;
  std::vector<Edge> edges;
  while (n < target_n) {
    int room = target_n - n;                      // new vertices we may add
    int b = 2 + static_cast<int>(rng() % 3);      // clique order 2..4
    if (b - 1 > room) b = room + 1;
    Vertex at = static_cast<Vertex>(rng() % n);
    std::vector<Vertex> block{at};
    for (int j = 0; j < b - 1; ++j) block.push_back(n + j);
    for (std::size_t p = 0; p < block.size(); ++p)
      for (std::size_t r = p + 1; r < block.size(); ++r)
        edges.push_back({std::min(block[p], block[r]), std::max(block[p], block[r])});
    n += b - 1;
  }
  return Graph(n, edges);
}

// Every non-increasing block order sequence with at most `max_blocks`
// blocks, orders in [2, max_order], and implied graph order at most `max_n`.
inline std::vector<BlockOrderSequence> small_families(int max_blocks, int max_order,
                                                      int max_n) {
  std::vector<BlockOrderSequence> out;
  std::vector<int> cur;
  // `order` tracks the implied graph order sum(b_i - 1) + 1.
  auto rec = [&](auto&& self, int cap, int order) -> void {
    if (!cur.empty()) out.emplace_back(cur);
    if (static_cast<int>(cur.size()) == max_blocks) return;
    for (int b = cap; b >= 2; --b) {
      if (order + b - 1 > max_n) continue;
      cur.push_back(b);
      self(self, b, order + b - 1);
      cur.pop_back();
    }
  };
  rec(rec, max_order, 1);
  return out;
}

}  // namespace swbtest

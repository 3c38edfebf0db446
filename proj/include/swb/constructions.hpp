#pragma once

#include <vector>

#include "swb/graph.hpp"

namespace swb {

// Non-increasing positive degree list. Realizable as a tree iff n >= 2 and
// the sum is 2(n-1).
struct DegreeSequence {
  std::vector<int> degrees;

  explicit DegreeSequence(std::vector<int> ds);
  int size() const { return static_cast<int>(degrees.size()); }
  bool tree_realizable() const;
};

bool is_tree(const Graph& g);

// Every vertex of degree >= 2 lies on a single path after leaves are removed.
bool is_caterpillar(const Graph& g);

// Line graph of a tree: one vertex per edge, adjacency iff edges share an
// endpoint. Vertex i corresponds to the i-th edge of t.edges().
Graph line_graph(const Graph& t);

struct GreedyTree {
  Graph graph;
  std::vector<std::vector<Vertex>> levels;  // root level first
};

// Rooted level-by-level construction: the root takes the largest degree, and
// remaining degrees are handed out in non-increasing order across each level
// from left to right, children of earlier parents first.
GreedyTree greedy_tree(const DegreeSequence& ds);

// Caterpillar with the given backbone (spine) degrees, each >= 2. Backbone
// vertex i keeps its path neighbours and receives pendant leaves up to its
// prescribed degree. A single backbone vertex of degree d yields a star.
Graph caterpillar(const std::vector<int>& backbone_degrees);

}  // namespace swb

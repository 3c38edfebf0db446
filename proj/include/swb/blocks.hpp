#pragma once

#include <vector>

#include "swb/graph.hpp"

namespace swb {

// Block structure of a connected graph. Blocks are the maximal 2-connected
// subgraphs; a bridge forms a two-vertex block. In a block graph every block
// induces a clique, the block orders b_1 >= ... >= b_t satisfy
// sum(b_i - 1) = n - 1, and every edge lies in exactly one block.
struct BlockCutDecomposition {
  // Vertex lists, each sorted ascending. Blocks are ordered by size
  // descending, ties broken lexicographically, so the layout is canonical.
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;      // sorted
  std::vector<Vertex> pendant_vertices;  // sorted; vertices lying in <= 1 block
  std::vector<int> block_order_sequence; // block sizes, non-increasing
  std::vector<std::vector<int>> blocks_of_vertex;  // block indices per vertex

  // Bipartite tree on block nodes and cut vertices: (block index, cut vertex).
  std::vector<std::pair<int, Vertex>> block_cut_tree_edges;

  bool is_cut_vertex(Vertex v) const { return blocks_of_vertex[v].size() >= 2; }
  int cut_count_of_block(int b) const;
  // A pendant block touches at most one cut vertex (a leaf of the block-cut tree).
  bool is_pendant_block(int b) const { return cut_count_of_block(b) <= 1; }
  int pendant_block_count() const;
  // A leaf is a pendant vertex lying in a pendant block.
  bool is_leaf(Vertex v) const;
  // Index of the unique block containing edge (u, v).
  int block_of_edge(Vertex u, Vertex v) const;
};

BlockCutDecomposition decompose(const Graph& g);

// True iff every block of the connected graph g induces a clique.
bool is_block_graph(const Graph& g);

// Throws naming the first offending block when g is not a block graph.
void require_block_graph(const Graph& g, const char* operation);

struct Classification {
  bool is_star_like;   // some vertex is adjacent to all others
  bool is_path_like;   // exactly two pendant blocks
  bool is_claw_free;   // every cut vertex lies in exactly two blocks
  int pendant_blocks;
};

Classification classify(const Graph& g, const BlockCutDecomposition& d);
Classification classify(const Graph& g);

}  // namespace swb

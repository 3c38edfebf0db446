#pragma once

#include <vector>

#include "swb/bigint.hpp"
#include "swb/blocks.hpp"
#include "swb/graph.hpp"
#include "swb/oracle.hpp"

namespace swb {

// Isometric clique-labeling of a block graph with blocks B_1..B_t: vertices
// of B_i receive distinct values in coordinate i (ascending vertex id), and
// any other vertex inherits the value of the B_i vertex whose component it
// joins once the edges of B_i are removed. Steiner distances then reduce to
// per-coordinate distinct counts.
struct HammingLabeling {
  std::vector<std::vector<int>> coords;     // coords[v][i]
  std::vector<std::vector<Vertex>> blocks;  // block i labels coordinate i
};

HammingLabeling hamming_labeling(const Graph& g, const BlockCutDecomposition& d);
HammingLabeling hamming_labeling(const Graph& g);

// Sum over coordinates of (distinct values among s) minus the block count.
int steiner_distance_hamming(const HammingLabeling& lab, const std::vector<Vertex>& s);

// SW_k summed over all k-subsets through the labeling.
BigInt sw_hamming(const Graph& g, int k, const OracleLimits& limits = {});

// SW_k as a sum over blocks: delete the edges of each block (vertices stay,
// isolated vertices count as components of size one) and accumulate N'_k of
// the resulting component profile.
BigInt sw_block_decomposition(const Graph& g, int k);

// SW_k as a sum over cut vertices v of N_k of the component profile of g
// minus v, plus (k-1) * C(n, k).
BigInt sw_vertex_decomposition(const Graph& g, int k);

// Steiner betweenness of a vertex of a block graph, via the vertex-deletion
// profile. Pendant vertices give zero.
BigInt steiner_betweenness_blockgraph(const Graph& g, Vertex v, int k);

// Distance-based tripartition of the vertex set around edge (a, b):
// closer to a, closer to b, equidistant. The three parts cover all n vertices.
struct EdgePartition {
  Vertex a = 0, b = 0;
  int n_ab = 0;   // strictly closer to a
  int n_ba = 0;   // strictly closer to b
  int a_n_b = 0;  // equidistant
};

EdgePartition edge_partition(const Graph& g, Vertex a, Vertex b);

// Wiener index of a block graph as sum over edges of n_ab * n_ba.
BigInt wiener_edge(const Graph& g);

// Edge-based SW_3. The first form subtracts binomials of the part
// complements and a third of the product sum; it matches the oracle.
BigInt sw3_edge(const Graph& g);

// Companion formula stated with the product sum added at weight 2/3 instead;
// kept verbatim because it disagrees with the oracle already on K_3 and P_3.
// Do not use it for computation.
BigInt sw3_edge_literal(const Graph& g);

}  // namespace swb

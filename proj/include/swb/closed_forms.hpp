#pragma once

#include <vector>

#include "swb/bigint.hpp"
#include "swb/graph.hpp"

namespace swb {

// Non-increasing block order sequence b_1 >= ... >= b_t >= 2. The block graph
// it describes has n = sum(b_i - 1) + 1 vertices.
struct BlockOrderSequence {
  std::vector<int> orders;

  explicit BlockOrderSequence(std::vector<int> o);
  int block_count() const { return static_cast<int>(orders.size()); }
  int implied_order() const;
};

// SW_k of the unique member whose blocks all share one vertex:
// (n-1) C(n-1, k-1) - sum C(b_i - 1, k).
BigInt sw_star_like(const BlockOrderSequence& seq, int k);

// SW_k of the windmill: t blocks of order r at a common hub.
BigInt sw_windmill(int r, int t, int k);

// The path-like closed form ships in two variants. The corrected variant
// uses C(n + i - 1 - sum_{j<=i} b_j, k) for the trailing binomial and agrees
// with the oracle; the literal variant keeps C(n + i - sum_{j<=i} b_j, k),
// which overcounts (already on the two-triangle chain: 12 vs 14).
enum class PathLikeVariant { corrected, literal };

// SW_k of the chain whose blocks appear in the given end-to-end order.
// Requires 2 <= k <= n - 1 and at least two blocks.
BigInt sw_path_like(const std::vector<int>& orders_end_to_end, int k, PathLikeVariant v);

// SW_{n-1} of any block graph with n vertices and p pendant vertices.
BigInt sw_n_minus_1(int n, int pendant_count);

// SW_n: a spanning tree, n - 1 edges.
BigInt sw_full(int n);

// Realization builders for the formulas above.
Graph star_like_realization(const BlockOrderSequence& seq);
Graph path_like_realization(const std::vector<int>& orders_end_to_end);
Graph windmill(int r, int t);

}  // namespace swb

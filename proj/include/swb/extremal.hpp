#pragma once

#include <optional>
#include <string>
#include <vector>

#include "swb/bigint.hpp"
#include "swb/blocks.hpp"
#include "swb/closed_forms.hpp"
#include "swb/constructions.hpp"
#include "swb/graph.hpp"

namespace swb {

struct FamilyLimits {
  int max_vertices = 12;
  long long max_graphs = 200000;  // enumeration work guard
};

// A generalized block shift. The candidate y hands every block not touching
// the x-y path over to the beneficiary x; afterwards y sits at the end of
// the chain. Valid only when every block along the path is a single edge and
// no internal path vertex carries a branch: exactly the class on which the
// drop of SW_k is a function of |A|, |B|, q and k alone. A pair crossing a
// larger clique is rejected (the drop then depends on the clique interior).
struct GbsMove {
  Vertex beneficiary = 0;                 // x
  Vertex candidate = 0;                   // y
  std::vector<Vertex> path_cut_vertices;  // c_1 = x, ..., c_q = y
  std::vector<Vertex> set_a;              // reachable from y only through x
  std::vector<Vertex> set_b;              // reachable from x only through y
  bool proper = false;                    // neither endpoint is a leaf
  int q() const { return static_cast<int>(path_cut_vertices.size()); }
};

// Analyzes the pair (x, y); returns the move when it is valid.
std::optional<GbsMove> gbs_move(const Graph& g, Vertex x, Vertex y);

// Applies the move; throws on an invalid one. The image keeps the block
// order sequence of the source.
Graph gbs_apply(const Graph& g, const GbsMove& move);

// Exact drop of SW_k under a valid shift with |A| = a_size, |B| = b_size and
// path vertex count q. A k-subset S changes its Steiner distance iff it meets
// both A and B, and then by (path edges above its highest path vertex), so
//
//   drop = sum_{l1,l2 >= 1} C(a, l1) C(b, l2) * sum_{i=1}^{q-1} C(i, k-l1-l2).
//
// At k = 2 this collapses to (q - 1) * a * b.
BigInt gbs_difference(int a_size, int b_size, int q, int k);

// Companion formula restricted to subsets inside A and B only:
// (q - 1) * sum_{l1+l2=k} C(a, l1) C(b, l2). It matches gbs_difference at
// k = 2 but undercounts for k >= 3: already on the P4 -> K_{1,3} shift the
// SW_3 drop is 1 while this form gives 0. Kept for reference; do not use it
// for computation.
BigInt gbs_difference_literal(int a_size, int b_size, int q, int k);

struct GbsWitness {
  Graph source;
  GbsMove move;
};

// Searches for a proper shift whose image is g: picks a leaf, walks to a cut
// vertex in >= 3 blocks, and re-hangs all but one of its off-path blocks on
// the leaf. Returns none for path-like graphs and single blocks, and also
// for graphs where no leaf reaches such a cut vertex over a clean chain of
// bridges (e.g. a windmill of triangles), since only those chains admit a
// valid shift.
std::optional<GbsWitness> gbs_preimage(const Graph& g);

// Canonical encoding of a connected block graph: the AHU string of its
// block-cut tree rooted at the tree center, block nodes labelled by order.
// Two block graphs are isomorphic iff their encodings are equal.
std::string canonical_form(const Graph& g);

// All non-isomorphic connected block graphs with the given block order
// sequence, sorted by canonical form.
std::vector<Graph> enumerate_family(const BlockOrderSequence& seq,
                                    const FamilyLimits& limits = {});

struct ExtremalRow {
  std::string canonical;
  BigInt value;
  bool star_like = false;
  bool path_like = false;
};

struct ExtremalReport {
  std::vector<Graph> members;
  std::vector<ExtremalRow> rows;   // parallel to members
  BigInt min_value, max_value;
  std::vector<size_t> min_indices, max_indices;
};

ExtremalReport extremal_scan(const BlockOrderSequence& seq, int k,
                             const FamilyLimits& limits = {});

struct BuckleyResult {
  BigInt w_tree;
  BigInt w_line_graph;
  bool identity_holds = false;  // W(L(T)) == W(T) - C(n, 2)
};

BuckleyResult buckley_check(const Graph& t);

// All non-isomorphic trees with the given degree sequence (multiset
// permutations of the Prufer content, deduplicated canonically).
std::vector<Graph> enumerate_trees_with_degrees(const DegreeSequence& ds,
                                                const FamilyLimits& limits = {});

// All non-isomorphic trees on n vertices.
std::vector<Graph> enumerate_trees(int n, const FamilyLimits& limits = {});

enum class ProblemMode { trees, line_graphs };

// Exhaustive scan of the trees with a degree sequence (or their line
// graphs): does the greedy tree attain the minimum SW_k, does a caterpillar
// attain the maximum? Verdicts are reported, not assumed.
struct ProblemReport {
  ProblemMode mode = ProblemMode::trees;
  int k = 2;
  std::vector<Graph> trees;        // the underlying trees
  std::vector<BigInt> values;      // SW_k of tree or of its line graph
  BigInt min_value, max_value;
  BigInt greedy_value;
  bool greedy_is_min = false;
  bool caterpillar_is_max = false;
  std::vector<size_t> min_indices, max_indices;
  std::optional<size_t> counterexample;  // a min attainer when greedy is beaten
};

ProblemReport problem_scan(const DegreeSequence& ds, int k, ProblemMode mode,
                           const FamilyLimits& limits = {});

}  // namespace swb

#pragma once

#include <stdexcept>
#include <vector>

#include "swb/bigint.hpp"
#include "swb/graph.hpp"

namespace swb {

// Raised when a request exceeds the configured size envelope. Callers that
// want to push further pass their own limits; the defaults keep every
// operation comfortably interactive.
class guard_error : public std::runtime_error {
 public:
  explicit guard_error(const std::string& what) : std::runtime_error(what) {}
};

struct OracleLimits {
  int max_terminals = 8;            // terminal set size for the subset DP
  int max_vertices = 20;            // graph order for the subset DP
  int max_enum_vertices = 14;       // graph order for explicit tree enumeration
  long long max_subsets = 1000000;  // number of k-subsets a sweep may touch
};

// Minimum number of edges of a connected subgraph containing all terminals,
// by the Dreyfus-Wagner dynamic program over terminal subsets.
int steiner_distance(const Graph& g, const std::vector<Vertex>& terminals,
                     const OracleLimits& limits = {});

// Sum of steiner_distance over every k-subset of vertices.
BigInt sw_bruteforce(const Graph& g, int k, const OracleLimits& limits = {});

struct SteinerResult {
  std::vector<Vertex> terminals;
  int distance = 0;
  long long tree_count = 0;               // number of minimum Steiner trees
  std::vector<long long> inner_counts;    // trees containing v as a non-terminal
};

// Counts every minimum Steiner tree for the terminal set: candidate vertex
// supersets of the right cardinality, connectivity check, then explicit
// spanning-tree enumeration keeping trees whose leaves are all terminals.
SteinerResult enumerate_steiner_trees(const Graph& g, const std::vector<Vertex>& terminals,
                                      const OracleLimits& limits = {});

// Steiner betweenness: sum over k-subsets A avoiding v of the fraction of
// minimum Steiner trees for A that use v as an inner vertex. Exact rational.
Rational betweenness_bruteforce(const Graph& g, Vertex v, int k,
                                const OracleLimits& limits = {});

// All betweenness values at once; one subset sweep shared by every vertex.
std::vector<Rational> betweenness_bruteforce_all(const Graph& g, int k,
                                                 const OracleLimits& limits = {});

}  // namespace swb

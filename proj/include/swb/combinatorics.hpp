#pragma once

#include <vector>

#include "swb/bigint.hpp"
#include "swb/graph.hpp"

namespace swb {

// Exact C(n, k); zero for k < 0 or k > n. Small arguments hit a memoized
// Pascal table, larger ones fall back to the multiplicative formula.
BigInt binomial(long long n, long long k);

// Multiset of component orders of a (possibly disconnected) graph.
struct ComponentProfile {
  std::vector<int> sizes;  // positive, non-increasing
  int total = 0;

  explicit ComponentProfile(std::vector<int> sz);
  static ComponentProfile of_components(const Graph& g);
  int part_count() const { return static_cast<int>(sizes.size()); }
};

// N_k: number of k-subsets of the vertex union meeting at least two
// components. N'_k weights each such subset by (number of components met - 1).
// Each value is provided twice: a closed identity used on the hot path and a
// direct composition enumeration used to cross-check it.
BigInt n_k(const ComponentProfile& p, int k);
BigInt n_k_enumerated(const ComponentProfile& p, int k);
BigInt n_prime_k(const ComponentProfile& p, int k);
BigInt n_prime_k_enumerated(const ComponentProfile& p, int k);

}  // namespace swb

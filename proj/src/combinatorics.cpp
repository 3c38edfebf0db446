#include "swb/combinatorics.hpp"

#include <algorithm>
#include <stdexcept>

namespace swb {

namespace {

constexpr long long kPascalCap = 256;

// Pascal rows grown lazily to the largest n seen; thread-local so no locking.
const BigInt& pascal(long long n, long long k) {
  thread_local std::vector<std::vector<BigInt>> rows{{1}};
  while (static_cast<long long>(rows.size()) <= n) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(prev.size() + 1, 1);
    for (size_t j = 1; j < prev.size(); ++j) row[j] = prev[j - 1] + prev[j];
    rows.push_back(std::move(row));
  }
  return rows[n][k];
}

void check_k(int k) {
  if (k < 2) throw std::invalid_argument("subset size k must be at least 2");
}

// Sum of f over all compositions (l_1,...,l_p) of k with 0 <= l_i < k,
// weighted by the product of C(sizes[i], l_i); f receives the number of
// nonzero parts.
template <typename Weight>
BigInt composition_sum(const ComponentProfile& p, int k, Weight&& weight) {
  BigInt acc = 0;
  int parts = p.part_count();
  std::vector<int> l(parts, 0);
  auto rec = [&](auto&& self, int idx, int remaining, int nonzero, BigInt prod) -> void {
    if (prod == 0) return;
    if (idx == parts) {
      if (remaining == 0) acc += prod * weight(nonzero);
      return;
    }
    int hi = std::min(remaining, k - 1);
    for (int li = 0; li <= hi; ++li)
      self(self, idx + 1, remaining - li, nonzero + (li > 0), prod * binomial(p.sizes[idx], li));
  };
  rec(rec, 0, k, 0, 1);
  return acc;
}

}  // namespace

BigInt binomial(long long n, long long k) {
  if (k < 0 || k > n || n < 0) return 0;
  if (n <= kPascalCap) return pascal(n, k);
  k = std::min(k, n - k);
  BigInt r = 1;
  for (long long i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

ComponentProfile::ComponentProfile(std::vector<int> sz) {
  for (int s : sz) {
    if (s < 0) throw std::invalid_argument("component sizes must be non-negative");
    if (s > 0) sizes.push_back(s);  // empty components are a no-op
  }
  std::sort(sizes.rbegin(), sizes.rend());
  for (int s : sizes) total += s;
  if (sizes.empty()) throw std::invalid_argument("component profile must be non-empty");
}

ComponentProfile ComponentProfile::of_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> comp(n, -1), sizes;
  for (Vertex s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::vector<Vertex> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      ++sizes[id];
      for (Vertex w : g.neighbors(u))
        if (comp[w] < 0) {
          comp[w] = id;
          stack.push_back(w);
        }
    }
  }
  return ComponentProfile(std::move(sizes));
}

BigInt n_k(const ComponentProfile& p, int k) {
  check_k(k);
  BigInt r = binomial(p.total, k);
  for (int s : p.sizes) r -= binomial(s, k);
  return r;
}

BigInt n_k_enumerated(const ComponentProfile& p, int k) {
  check_k(k);
  return composition_sum(p, k, [](int) { return 1; });
}

BigInt n_prime_k(const ComponentProfile& p, int k) {
  check_k(k);
  BigInt r = -binomial(p.total, k);
  for (int s : p.sizes) r += binomial(p.total, k) - binomial(p.total - s, k);
  return r;
}

BigInt n_prime_k_enumerated(const ComponentProfile& p, int k) {
  check_k(k);
  return composition_sum(p, k, [](int nonzero) { return nonzero - 1; });
}

}  // namespace swb

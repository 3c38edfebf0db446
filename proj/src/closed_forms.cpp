#include "swb/closed_forms.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "swb/combinatorics.hpp"

namespace swb {

namespace {

void check_orders(const std::vector<int>& orders, const char* op) {
  if (orders.empty())
    throw std::invalid_argument(std::string(op) + ": need at least one block");
  for (int b : orders)
    if (b < 2) throw std::invalid_argument(std::string(op) + ": block orders must be >= 2");
}

int implied_n(const std::vector<int>& orders) {
  int n = 1;
  for (int b : orders) n += b - 1;
  return n;
}

}  // namespace

BlockOrderSequence::BlockOrderSequence(std::vector<int> o) : orders(std::move(o)) {
  check_orders(orders, "BlockOrderSequence");
  std::sort(orders.rbegin(), orders.rend());
}

int BlockOrderSequence::implied_order() const { return implied_n(orders); }

BigInt sw_star_like(const BlockOrderSequence& seq, int k) {
  int n = seq.implied_order();
  if (k < 2 || k > n) throw std::invalid_argument("sw_star_like: k out of range");
  BigInt r = BigInt(n - 1) * binomial(n - 1, k - 1);
  for (int b : seq.orders) r -= binomial(b - 1, k);
  return r;
}

BigInt sw_windmill(int r, int t, int k) {
  if (r < 2 || t < 1) throw std::invalid_argument("sw_windmill: need r >= 2 and t >= 1");
  int n = t * (r - 1) + 1;
  if (k < 2 || k > n) throw std::invalid_argument("sw_windmill: k out of range");
  return BigInt(n - 1) * binomial(n - 1, k - 1) - BigInt(t) * binomial(r - 1, k);
}

BigInt sw_path_like(const std::vector<int>& orders_end_to_end, int k, PathLikeVariant v) {
  check_orders(orders_end_to_end, "sw_path_like");
  int t = static_cast<int>(orders_end_to_end.size());
  if (t < 2) throw std::invalid_argument("sw_path_like: need at least two blocks");
  int n = implied_n(orders_end_to_end);
  if (k < 2 || k > n - 1) throw std::invalid_argument("sw_path_like: k out of range");

  BigInt r = BigInt(k - 1) * binomial(n, k) + BigInt(t - 1) * binomial(n - 1, k);
  long long prefix = 0;
  for (int i = 1; i <= t - 1; ++i) {
    prefix += orders_end_to_end[i - 1];
    r -= binomial(prefix - i, k);
    long long tail = n + i - prefix;
    if (v == PathLikeVariant::corrected) tail -= 1;
    r -= binomial(tail, k);
  }
  return r;
}

BigInt sw_n_minus_1(int n, int pendant_count) {
  if (n < 2 || pendant_count < 1 || pendant_count > n)
    throw std::invalid_argument("sw_n_minus_1: invalid parameters");
  return BigInt(n) * n - n - pendant_count;
}

BigInt sw_full(int n) {
  if (n < 1) throw std::invalid_argument("sw_full: invalid order");
  return n - 1;
}

Graph star_like_realization(const BlockOrderSequence& seq) {
  int n = seq.implied_order();
  std::vector<Edge> edges;
  int next = 1;
  for (int b : seq.orders) {
    std::vector<Vertex> block{0};
    for (int i = 0; i < b - 1; ++i) block.push_back(next++);
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j) edges.push_back({block[i], block[j]});
  }
  return Graph(n, edges);
}

Graph path_like_realization(const std::vector<int>& orders_end_to_end) {
  check_orders(orders_end_to_end, "path_like_realization");
  int n = implied_n(orders_end_to_end);
  std::vector<Edge> edges;
  int next = 1;
  Vertex shared = 0;
  for (int b : orders_end_to_end) {
    std::vector<Vertex> block{shared};
    for (int i = 0; i < b - 1; ++i) block.push_back(next++);
    for (size_t i = 0; i < block.size(); ++i)
      for (size_t j = i + 1; j < block.size(); ++j) edges.push_back({block[i], block[j]});
    shared = block.back();  // chain continues from the last new vertex
  }
  return Graph(n, edges);
}

Graph windmill(int r, int t) {
  if (r < 2 || t < 1) throw std::invalid_argument("windmill: need r >= 2 and t >= 1");
  return star_like_realization(BlockOrderSequence(std::vector<int>(t, r)));
}

}  // namespace swb

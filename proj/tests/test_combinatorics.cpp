#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "swb/combinatorics.hpp"

using namespace swb;

TEST_CASE("binomial values and edge cases") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 0) == 1);
  CHECK(binomial(5, 5) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(5, 6) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(50, 25) == BigInt("126410606437752"));
  CHECK(binomial(100, 50) == BigInt("100891344545564193334812497256"));
}

TEST_CASE("binomial satisfies the Pascal recurrence") {
  for (int n = 1; n <= 40; ++n)
    for (int k = 0; k <= n; ++k)
      CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("component profile of a disconnected graph") {
  Graph g(6, {{0, 1}, {1, 2}, {3, 4}});
  auto p = ComponentProfile::of_components(g);
  CHECK(p.total == 6);
  CHECK(p.part_count() == 3);
  std::vector<int> want{3, 2, 1};
  CHECK(p.sizes == want);
}

TEST_CASE("profile constructor rejects junk") {
  CHECK_THROWS_AS(ComponentProfile({}), std::invalid_argument);
  CHECK_THROWS_AS(ComponentProfile({2, -1}), std::invalid_argument);
  CHECK(ComponentProfile({2, 0}).part_count() == 1);  // empty parts drop out
  CHECK_NOTHROW(ComponentProfile({2, 2, 1}));
}

TEST_CASE("subset counts reject k below two") {
  ComponentProfile p({2, 1});
  CHECK_THROWS_AS(n_k(p, 1), std::invalid_argument);
  CHECK_THROWS_AS(n_prime_k(p, 0), std::invalid_argument);
}

TEST_CASE("subset counts against direct enumeration") {
  std::vector<std::vector<int>> profiles{
      {1, 1, 1}, {2, 1}, {3}, {2, 2, 1}, {3, 2, 2}, {4, 3, 1, 1}, {5, 4, 3, 2, 1}};
  for (const auto& sizes : profiles) {
    ComponentProfile p(sizes);
    for (int k = 2; k <= p.total + 1; ++k) {
      CHECK(n_k(p, k) == n_k_enumerated(p, k));
      CHECK(n_prime_k(p, k) == n_prime_k_enumerated(p, k));
    }
  }
}

TEST_CASE("subset counts, hand-checked") {
  ComponentProfile three_singletons({1, 1, 1});
  CHECK(n_k(three_singletons, 2) == 3);        // every pair crosses
  CHECK(n_prime_k(three_singletons, 2) == 3);  // each meets 2 parts
  CHECK(n_k(three_singletons, 3) == 1);
  CHECK(n_prime_k(three_singletons, 3) == 2);  // meets 3 parts, weight 2

  ComponentProfile two_one({2, 1});
  CHECK(n_k(two_one, 2) == 2);
  CHECK(n_k(two_one, 3) == 1);

  ComponentProfile single({4});
  CHECK(n_k(single, 2) == 0);  // nothing to cross
  CHECK(n_prime_k(single, 3) == 0);
}

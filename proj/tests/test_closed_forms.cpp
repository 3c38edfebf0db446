#include <doctest.h>

#include <algorithm>
#include <vector>

#include "support.hpp"
#include "swb/blocks.hpp"
#include "swb/closed_forms.hpp"
#include "swb/combinatorics.hpp"
#include "swb/oracle.hpp"

using namespace swb;

TEST_CASE("block order sequences normalize and validate") {
  BlockOrderSequence seq({2, 4, 3});
  std::vector<int> want{4, 3, 2};
  CHECK(seq.orders == want);
  CHECK(seq.block_count() == 3);
  CHECK(seq.implied_order() == 7);
  CHECK_THROWS_AS(BlockOrderSequence({}), std::invalid_argument);
  CHECK_THROWS_AS(BlockOrderSequence({2, 1}), std::invalid_argument);
}

TEST_CASE("star-like closed form against the oracle") {
  for (const std::vector<int>& orders :
       {std::vector<int>{2, 2, 2}, {3, 2}, {3, 3, 2}, {4, 3}, {4, 2, 2}, {3, 3, 3}}) {
    BlockOrderSequence seq(orders);
    Graph g = star_like_realization(seq);
    CHECK(classify(g).is_star_like);
    for (int k = 2; k <= std::min(seq.implied_order(), 6); ++k)
      CHECK(sw_star_like(seq, k) == sw_bruteforce(g, k));
  }
  // Stars are the all-bridge case: the subtracted binomials vanish at k >= 2.
  BlockOrderSequence star({2, 2, 2, 2});
  CHECK(sw_star_like(star, 2) == BigInt(4) * binomial(4, 1));
}

TEST_CASE("windmill closed form, pinned and against the oracle") {
  CHECK(sw_windmill(3, 2, 2) == 14);  // two triangles at a hub
  CHECK(sw_windmill(3, 2, 3) == 24);
  CHECK(sw_windmill(3, 3, 2) == 33);
  CHECK(sw_windmill(3, 3, 3) == 90);
  for (int r = 2; r <= 4; ++r)
    for (int t = 1; t <= 3; ++t) {
      Graph g = windmill(r, t);
      int n = g.vertex_count();
      CHECK(n == t * (r - 1) + 1);
      for (int k = 2; k <= std::min(n, 6); ++k)
        CHECK(sw_windmill(r, t, k) == sw_bruteforce(g, k));
    }
}

TEST_CASE("path-like closed form: corrected matches the oracle, literal does not") {
  CHECK(sw_path_like({3, 3}, 2, PathLikeVariant::corrected) == 14);
  CHECK(sw_path_like({3, 3}, 2, PathLikeVariant::literal) == 12);

  for (const std::vector<int>& orders :
       {std::vector<int>{2, 2}, {2, 2, 2}, {3, 2}, {2, 3, 2}, {3, 2, 3}, {4, 2, 3}}) {
    Graph g = path_like_realization(orders);
    int n = g.vertex_count();
    CHECK(classify(g).is_path_like);
    for (int k = 2; k <= std::min(n - 1, 6); ++k)
      CHECK(sw_path_like(orders, k, PathLikeVariant::corrected) == sw_bruteforce(g, k));
  }

  CHECK(sw_path_like({2, 2}, 2, PathLikeVariant::corrected) == 4);   // P3
  CHECK(sw_path_like({2, 2, 2}, 2, PathLikeVariant::corrected) == 10);  // P4
  CHECK_THROWS_AS(sw_path_like({3}, 2, PathLikeVariant::corrected), std::invalid_argument);
  CHECK_THROWS_AS(sw_path_like({2, 2}, 3, PathLikeVariant::corrected),
                  std::invalid_argument);  // k must stay below n
}

TEST_CASE("top-end subset sizes") {
  CHECK(sw_n_minus_1(5, 4) == 16);
  Graph star = swbtest::star_graph(5);
  CHECK(sw_n_minus_1(5, 4) == sw_bruteforce(star, 4));
  Graph b = swbtest::bowtie();
  CHECK(sw_n_minus_1(5, 4) == sw_bruteforce(b, 4));  // same n and pendant count
  Graph p = swbtest::path_graph(6);
  CHECK(sw_n_minus_1(6, 2) == sw_bruteforce(p, 5));
  CHECK(sw_full(7) == 6);
  CHECK(sw_full(1) == 0);
  for (const Graph& g : {star, b, p})
    CHECK(sw_full(g.vertex_count()) == sw_bruteforce(g, g.vertex_count()));
}

TEST_CASE("realization builders deliver the advertised shapes") {
  Graph w = windmill(4, 2);
  auto dw = decompose(w);
  std::vector<int> worders{4, 4};
  CHECK(dw.block_order_sequence == worders);
  CHECK(classify(w).is_star_like);

  Graph p = path_like_realization({3, 2, 4});
  auto dp = decompose(p);
  std::vector<int> porders{4, 3, 2};
  CHECK(dp.block_order_sequence == porders);
  CHECK(classify(p).is_path_like);
  CHECK(p.vertex_count() == 7);

  Graph s = star_like_realization(BlockOrderSequence({3, 2, 2}));
  CHECK(classify(s).is_star_like);
  CHECK(s.vertex_count() == 5);
}

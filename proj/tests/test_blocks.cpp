#include <doctest.h>

#include <vector>

#include "support.hpp"
#include "swb/blocks.hpp"

using namespace swb;
using swbtest::bowtie;
using swbtest::complete_graph;
using swbtest::path_graph;
using swbtest::star_graph;
using swbtest::triangle_bridge_k4;

TEST_CASE("block structure of the mixed-block instance") {
  Graph g = triangle_bridge_k4();
  auto d = decompose(g);
  std::vector<int> orders{4, 3, 2};
  CHECK(d.block_order_sequence == orders);
  std::vector<Vertex> cuts{2, 3};
  CHECK(d.cut_vertices == cuts);
  std::vector<Vertex> pendants{0, 1, 4, 5, 6};
  CHECK(d.pendant_vertices == pendants);
  CHECK(d.pendant_block_count() == 2);
  CHECK(d.is_leaf(0));
  CHECK(d.is_leaf(6));
  CHECK(!d.is_leaf(2));
  CHECK(d.blocks[d.block_of_edge(2, 3)] == std::vector<Vertex>{2, 3});
  CHECK(d.blocks_of_vertex[3].size() == 2);
  CHECK(d.block_cut_tree_edges.size() == 4);  // 3 blocks, 2 cuts, tree on 5 nodes
}

TEST_CASE("block orders sum to n - 1 over the corpus") {
  for (std::uint64_t seed = 1; seed <= 30; ++seed) {
    Graph g = swbtest::random_block_graph(seed, 3 + static_cast<int>(seed % 7));
    auto d = decompose(g);
    int sum = 0;
    for (int b : d.block_order_sequence) sum += b - 1;
    CHECK(sum == g.vertex_count() - 1);
    CHECK(is_block_graph(g));
  }
}

TEST_CASE("a path is all bridges, a clique one block") {
  auto dp = decompose(path_graph(5));
  CHECK(dp.blocks.size() == 4);
  CHECK(dp.cut_vertices.size() == 3);
  auto dk = decompose(complete_graph(4));
  CHECK(dk.blocks.size() == 1);
  CHECK(dk.cut_vertices.empty());
  CHECK(dk.is_pendant_block(0));
  auto d1 = decompose(Graph(1, {}));
  CHECK(d1.blocks.empty());
  CHECK(d1.pendant_vertices == std::vector<Vertex>{0});
}

TEST_CASE("cycles with chords are flagged") {
  Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  CHECK(!is_block_graph(c4));
  CHECK_THROWS_AS(require_block_graph(c4, "test"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(require_block_graph(c4, "test"),
                       doctest::Contains("is not a clique"), std::invalid_argument);
  CHECK(is_block_graph(bowtie()));
  Graph diamond(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {0, 2}});
  CHECK(!is_block_graph(diamond));  // one 2-connected block, not complete
}

TEST_CASE("classification of the standard shapes") {
  auto cs = classify(star_graph(5));
  CHECK(cs.is_star_like);
  CHECK(!cs.is_path_like);  // four pendant blocks
  CHECK(cs.pendant_blocks == 4);

  auto cp = classify(path_graph(5));
  CHECK(cp.is_path_like);
  CHECK(!cp.is_star_like);
  CHECK(cp.is_claw_free);

  auto cb = classify(bowtie());
  CHECK(cb.is_star_like);
  CHECK(cb.is_path_like);  // both triangles pendant
  CHECK(cb.is_claw_free);

  auto cm = classify(triangle_bridge_k4());
  CHECK(!cm.is_star_like);
  CHECK(cm.is_path_like);
  CHECK(cm.is_claw_free);

  auto ck = classify(complete_graph(3));
  CHECK(ck.is_star_like);
  CHECK(ck.is_claw_free);
}

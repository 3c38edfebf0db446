#include "swb/blocks.hpp"

#include <algorithm>
#include <set>
#include <stack>
#include <stdexcept>
#include <string>

namespace swb {

namespace {

// Iterative lowpoint DFS collecting biconnected components from an edge stack.
std::vector<std::vector<Vertex>> biconnected_components(const Graph& g) {
  int n = g.vertex_count();
  std::vector<int> disc(n, -1), low(n, 0), parent(n, -1), next_child(n, 0);
  std::vector<Edge> edge_stack;
  std::vector<std::vector<Vertex>> comps;
  int timer = 0;

  auto pop_component = [&](Edge until) {
    std::set<Vertex> verts;
    while (true) {
      Edge e = edge_stack.back();
      edge_stack.pop_back();
      verts.insert(e.first);
      verts.insert(e.second);
      if (e == until) break;
    }
    comps.emplace_back(verts.begin(), verts.end());
  };

  for (Vertex root = 0; root < n; ++root) {
    if (disc[root] >= 0) continue;
    std::stack<Vertex> st;
    disc[root] = low[root] = timer++;
    st.push(root);
    while (!st.empty()) {
      Vertex u = st.top();
      const auto& nb = g.neighbors(u);
      if (next_child[u] < static_cast<int>(nb.size())) {
        Vertex w = nb[next_child[u]++];
        if (disc[w] < 0) {
          parent[w] = u;
          disc[w] = low[w] = timer++;
          edge_stack.push_back({u, w});
          st.push(w);
        } else if (w != parent[u] && disc[w] < disc[u]) {
          edge_stack.push_back({u, w});
          low[u] = std::min(low[u], disc[w]);
        }
      } else {
        st.pop();
        Vertex p = parent[u];
        if (p >= 0) {
          low[p] = std::min(low[p], low[u]);
          if (low[u] >= disc[p]) pop_component({p, u});
        }
      }
    }
  }
  return comps;
}

}  // namespace

int BlockCutDecomposition::cut_count_of_block(int b) const {
  int c = 0;
  for (Vertex v : blocks[b])
    if (is_cut_vertex(v)) ++c;
  return c;
}

int BlockCutDecomposition::pendant_block_count() const {
  int c = 0;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (is_pendant_block(b)) ++c;
  return c;
}

bool BlockCutDecomposition::is_leaf(Vertex v) const {
  if (is_cut_vertex(v) || blocks_of_vertex[v].empty()) return false;
  return is_pendant_block(blocks_of_vertex[v].front());
}

int BlockCutDecomposition::block_of_edge(Vertex u, Vertex v) const {
  for (int b : blocks_of_vertex[u]) {
    const auto& blk = blocks[b];
    if (std::binary_search(blk.begin(), blk.end(), v)) return b;
  }
  throw std::invalid_argument("block_of_edge: no block contains the pair");
}

BlockCutDecomposition decompose(const Graph& g) {
  require_connected(g, "decompose");
  BlockCutDecomposition d;
  d.blocks = biconnected_components(g);
  std::sort(d.blocks.begin(), d.blocks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() > b.size();
    return a < b;
  });

  int n = g.vertex_count();
  d.blocks_of_vertex.assign(n, {});
  for (int b = 0; b < static_cast<int>(d.blocks.size()); ++b)
    for (Vertex v : d.blocks[b]) d.blocks_of_vertex[v].push_back(b);

  for (Vertex v = 0; v < n; ++v) {
    if (d.blocks_of_vertex[v].size() >= 2)
      d.cut_vertices.push_back(v);
    else
      d.pendant_vertices.push_back(v);
  }
  for (const auto& blk : d.blocks)
    d.block_order_sequence.push_back(static_cast<int>(blk.size()));
  for (Vertex c : d.cut_vertices)
    for (int b : d.blocks_of_vertex[c]) d.block_cut_tree_edges.push_back({b, c});
  return d;
}

bool is_block_graph(const Graph& g) {
  require_connected(g, "is_block_graph");
  for (const auto& blk : decompose(g).blocks)
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j)
        if (!g.has_edge(blk[i], blk[j])) return false;
  return true;
}

void require_block_graph(const Graph& g, const char* operation) {
  require_connected(g, operation);
  for (const auto& blk : decompose(g).blocks) {
    for (size_t i = 0; i < blk.size(); ++i)
      for (size_t j = i + 1; j < blk.size(); ++j)
        if (!g.has_edge(blk[i], blk[j])) {
          std::string desc = "{";
          for (size_t t = 0; t < blk.size(); ++t)
            desc += (t ? ", " : "") + std::to_string(blk[t]);
          desc += "}";
          throw std::invalid_argument(std::string(operation) + ": block " + desc +
                                      " is not a clique");
        }
  }
}

Classification classify(const Graph& g, const BlockCutDecomposition& d) {
  Classification c{};
  int n = g.vertex_count();
  c.is_star_like = false;
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) == n - 1) c.is_star_like = true;
  c.pendant_blocks = d.pendant_block_count();
  c.is_path_like = (c.pendant_blocks == 2);
  c.is_claw_free = true;
  for (Vertex v : d.cut_vertices)
    if (d.blocks_of_vertex[v].size() != 2) c.is_claw_free = false;
  return c;
}

Classification classify(const Graph& g) { return classify(g, decompose(g)); }

}  // namespace swb

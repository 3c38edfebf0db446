#include "swb/graph_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace swb {

namespace {

Graph read_json(std::istream& in) {
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("read_graph: bad JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("read_graph: expected {\"n\": ..., \"edges\": [...]}");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("read_graph: \"n\" must be an integer");
  int n = j["n"].get<int>();
  std::vector<Edge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument("read_graph: each edge must be a pair of integers");
    edges.push_back({e[0].get<int>(), e[1].get<int>()});
  }
  return Graph(n, edges);
}

Graph read_edge_list(std::istream& in) {
  int n, m;
  if (!(in >> n >> m))
    throw std::invalid_argument("read_graph: expected header line \"n m\"");
  if (m < 0) throw std::invalid_argument("read_graph: negative edge count");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (int i = 0; i < m; ++i) {
    int u, v;
    if (!(in >> u >> v))
      throw std::invalid_argument("read_graph: truncated edge list");
    edges.push_back({u, v});
  }
  return Graph(n, edges);
}

}  // namespace

Graph read_graph(std::istream& in) {
  in >> std::ws;
  if (!in.good()) throw std::invalid_argument("read_graph: empty input");
  return in.peek() == '{' ? read_json(in) : read_edge_list(in);
}

Graph load_graph(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("load_graph: cannot open " + path);
  return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g, GraphFormat format) {
  auto edges = g.edges();
  if (format == GraphFormat::json) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["edges"] = nlohmann::json::array();
    for (const auto& [u, v] : edges) j["edges"].push_back({u, v});
    out << j.dump(2) << '\n';
  } else {
    out << g.vertex_count() << ' ' << edges.size() << '\n';
    for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  }
}

void save_graph(const std::string& path, const Graph& g, GraphFormat format) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("save_graph: cannot open " + path);
  write_graph(out, g, format);
}

}  // namespace swb

#include "graphent/graph_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace graphent {

namespace {

std::size_t as_index(const nlohmann::json& value, const char* what) {
  if (!value.is_number_integer() || value.get<std::int64_t>() < 0) {
    throw GraphError(std::string(what) + " must be a non-negative integer");
  }
  return value.get<std::size_t>();
}

}  // namespace

std::string serialize_graph(const DirectedGraph& g) {
  nlohmann::ordered_json doc;
  doc["num_vertices"] = g.num_vertices();
  auto edges = nlohmann::ordered_json::array();
  for (const Edge& e : g.edges()) {
    edges.push_back({e.from, e.to});
  }
  doc["edges"] = std::move(edges);
  return doc.dump();
}

DirectedGraph parse_graph(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw GraphError(std::string("graph JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("num_vertices") ||
      !doc.contains("edges")) {
    throw GraphError(
        "graph JSON must be an object with \"num_vertices\" and \"edges\"");
  }
  const std::size_t m = as_index(doc["num_vertices"], "num_vertices");
  const auto& list = doc["edges"];
  if (!list.is_array()) throw GraphError("\"edges\" must be an array");
  std::vector<Edge> edges;
  edges.reserve(list.size());
  for (const auto& pair : list) {
    if (!pair.is_array() || pair.size() != 2) {
      throw GraphError("each edge must be a two-element array");
    }
    edges.push_back({as_index(pair[0], "edge endpoint"),
                     as_index(pair[1], "edge endpoint")});
  }
  return DirectedGraph::from_edge_list(m, std::move(edges));
}

DirectedGraph read_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_graph(buffer.str());
}

void write_graph_file(const std::filesystem::path& path,
                      const DirectedGraph& g) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << serialize_graph(g) << '\n';
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace graphent

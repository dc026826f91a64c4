#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "graphent/graph.hpp"

namespace graphent {

// Graph files are UTF-8 JSON:
//   {"num_vertices": M, "edges": [[a, b], ...]}
// with 0-based integer indices.

/// Canonical single-line encoding; keys in the order shown above.
std::string serialize_graph(const DirectedGraph& g);

/// Throws GraphError on malformed JSON, wrong field types, or an invalid graph.
DirectedGraph parse_graph(std::string_view text);

DirectedGraph read_graph_file(const std::filesystem::path& path);
void write_graph_file(const std::filesystem::path& path, const DirectedGraph& g);

}  // namespace graphent

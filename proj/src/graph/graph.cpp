#include "graphent/graph.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <sstream>
#include <utility>

namespace graphent {

DirectedGraph DirectedGraph::from_edge_list(std::size_t num_vertices,
                                            std::vector<Edge> edges) {
  if (num_vertices == 0) {
    throw GraphError("graph must have at least one vertex");
  }
  std::set<std::pair<Vertex, Vertex>> seen;
  for (const Edge& e : edges) {
    if (e.from >= num_vertices || e.to >= num_vertices) {
      throw GraphError("edge (" + std::to_string(e.from) + ", " +
                       std::to_string(e.to) + ") has an index outside [0, " +
                       std::to_string(num_vertices) + ")");
    }
    if (e.from == e.to) {
      throw GraphError("self-loop at vertex " + std::to_string(e.from));
    }
    auto key = std::minmax(e.from, e.to);
    if (!seen.insert(key).second) {
      throw GraphError("vertices " + std::to_string(key.first) + " and " +
                       std::to_string(key.second) +
                       " are joined by more than one edge");
    }
  }
  return DirectedGraph(num_vertices, std::move(edges));
}

DirectedGraph::DirectedGraph(std::size_t num_vertices, std::vector<Edge> edges)
    : num_vertices_(num_vertices),
      edges_(std::move(edges)),
      out_(num_vertices),
      in_(num_vertices) {
  for (const Edge& e : edges_) {
    out_[e.from].push_back(e.to);
    in_[e.to].push_back(e.from);
  }
  for (auto& list : out_) std::sort(list.begin(), list.end());
  for (auto& list : in_) std::sort(list.begin(), list.end());
}

void DirectedGraph::check_vertex(Vertex v) const {
  if (v >= num_vertices_) {
    throw GraphError("vertex " + std::to_string(v) + " outside [0, " +
                     std::to_string(num_vertices_) + ")");
  }
}

std::span<const Vertex> DirectedGraph::out_neighbors(Vertex v) const {
  check_vertex(v);
  return out_[v];
}

std::span<const Vertex> DirectedGraph::in_neighbors(Vertex v) const {
  check_vertex(v);
  return in_[v];
}

std::size_t DirectedGraph::degree(Vertex v) const {
  check_vertex(v);
  return out_[v].size() + in_[v].size();
}

bool DirectedGraph::has_edge(Vertex a, Vertex b) const {
  check_vertex(a);
  check_vertex(b);
  return std::binary_search(out_[a].begin(), out_[a].end(), b);
}

DegreeDistribution DegreeDistribution::from_counts(Counts counts) {
  if (counts.empty()) {
    throw GraphError("degree distribution is empty");
  }
  std::uint64_t total = 0;
  for (const auto& [k, n] : counts) {
    if (n == 0) {
      throw GraphError("degree " + std::to_string(k) + " has a zero count");
    }
    total += n;
  }
  if (counts.rbegin()->first >= total) {
    throw GraphError("degree " + std::to_string(counts.rbegin()->first) +
                     " impossible with " + std::to_string(total) +
                     " vertices");
  }
  return DegreeDistribution(std::move(counts), total);
}

std::uint64_t DegreeDistribution::count(std::size_t degree) const {
  auto it = counts_.find(degree);
  return it == counts_.end() ? 0 : it->second;
}

std::string DegreeDistribution::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, n] : counts_) {
    if (!first) os << ' ';
    os << k << ':' << n;
    first = false;
  }
  return os.str();
}

DegreeDistribution degree_distribution(const DirectedGraph& g) {
  DegreeDistribution::Counts counts;
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    ++counts[g.degree(v)];
  }
  return DegreeDistribution::from_counts(std::move(counts));
}

DirectedGraph permute_vertices(const DirectedGraph& g,
                               std::span<const Vertex> permutation) {
  const std::size_t m = g.num_vertices();
  if (permutation.size() != m) {
    throw GraphError("permutation has " + std::to_string(permutation.size()) +
                     " entries for " + std::to_string(m) + " vertices");
  }
  std::vector<bool> hit(m, false);
  for (Vertex target : permutation) {
    if (target >= m || hit[target]) {
      throw GraphError("permutation is not a bijection");
    }
    hit[target] = true;
  }
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const Edge& e : g.edges()) {
    edges.push_back({permutation[e.from], permutation[e.to]});
  }
  return DirectedGraph::from_edge_list(m, std::move(edges));
}

DirectedGraph flip_edge(const DirectedGraph& g, std::size_t edge_index) {
  if (edge_index >= g.num_edges()) {
    throw GraphError("edge index " + std::to_string(edge_index) +
                     " out of range");
  }
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::swap(edges[edge_index].from, edges[edge_index].to);
  // Simplicity guarantees the reversed pair is absent.
  assert(!g.has_edge(edges[edge_index].from, edges[edge_index].to));
  return DirectedGraph::from_edge_list(g.num_vertices(), std::move(edges));
}

}  // namespace graphent

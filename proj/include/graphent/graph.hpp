#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace graphent {

using Vertex = std::size_t;

/// Thrown for any structurally invalid graph, permutation or degree table.
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An oriented edge. `from` is the control vertex, `to` the target.
struct Edge {
  Vertex from = 0;
  Vertex to = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A directed simple graph on vertices 0..M-1.
///
/// No self-loops, and each unordered pair {a, b} carries at most one edge in
/// at most one orientation. The edge list keeps insertion order; that order
/// is what serialization writes and what state construction iterates.
/// Instances are immutable once built.
class DirectedGraph {
 public:
  /// Validates and builds. Throws GraphError on an out-of-range index, a
  /// self-loop, or a duplicate / anti-parallel edge.
  static DirectedGraph from_edge_list(std::size_t num_vertices,
                                      std::vector<Edge> edges);

  std::size_t num_vertices() const { return num_vertices_; }
  std::size_t num_edges() const { return edges_.size(); }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }
  /// Total degree, orientation ignored.
  std::size_t degree(Vertex v) const;

  /// Oriented adjacency: true iff (a, b) is an edge.
  bool has_edge(Vertex a, Vertex b) const;

  /// Equal vertex count and identical edge sequence.
  friend bool operator==(const DirectedGraph& a, const DirectedGraph& b) {
    return a.num_vertices_ == b.num_vertices_ && a.edges_ == b.edges_;
  }

 private:
  DirectedGraph(std::size_t num_vertices, std::vector<Edge> edges);
  void check_vertex(Vertex v) const;

  std::size_t num_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
};

/// Vertex count per total degree: k -> n_k, with n_k > 0 for stored keys.
class DegreeDistribution {
 public:
  using Counts = std::map<std::size_t, std::uint64_t>;

  DegreeDistribution() = default;

  /// Throws GraphError if a count is zero, the table is empty, or some
  /// degree k exceeds M - 1 (M being the summed counts).
  static DegreeDistribution from_counts(Counts counts);

  std::uint64_t num_vertices() const { return num_vertices_; }
  std::uint64_t count(std::size_t degree) const;
  bool empty() const { return counts_.empty(); }
  const Counts& counts() const { return counts_; }

  auto begin() const { return counts_.begin(); }
  auto end() const { return counts_.end(); }

  /// "k:n_k" pairs separated by spaces, ascending in k.
  std::string to_string() const;

  friend bool operator==(const DegreeDistribution&,
                         const DegreeDistribution&) = default;

 private:
  explicit DegreeDistribution(Counts counts, std::uint64_t total)
      : counts_(std::move(counts)), num_vertices_(total) {}

  Counts counts_;
  std::uint64_t num_vertices_ = 0;
};

DegreeDistribution degree_distribution(const DirectedGraph& g);

/// Relabels vertex i as permutation[i]. Throws GraphError unless
/// `permutation` is a bijection on [0, M).
DirectedGraph permute_vertices(const DirectedGraph& g,
                               std::span<const Vertex> permutation);

/// Reverses the orientation of edge `edge_index`, keeping its list position.
DirectedGraph flip_edge(const DirectedGraph& g, std::size_t edge_index);

}  // namespace graphent

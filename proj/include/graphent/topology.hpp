#pragma once

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

// Generators number layers from the top/input/left and vertices
// left-to-right within a layer. Every edge points downstream.

/// Triangular lattice with N layers; layer i holds i vertices and vertex j of
/// a layer feeds vertices j and j+1 of the next. Requires N >= 2.
DirectedGraph gen_young_fibonacci(std::size_t layers);

/// Complete bipartite wiring between consecutive layers. Requires at least
/// two layers, all non-empty.
DirectedGraph gen_ffnn(const std::vector<std::size_t>& layer_sizes);

/// Full binary tree of the given depth (2^depth - 1 vertices), edges
/// parent -> child, vertices in breadth-first order. Requires depth >= 1.
DirectedGraph gen_full_binary_tree(std::size_t depth);

/// Where the bridge between cycle i and cycle i+1 lands.
enum class BridgePlacement {
  /// vertex 0 of cycle i -> vertex floor(M_{i+1}/2) of cycle i+1
  kHalfway,
  /// vertex M_i - 1 of cycle i -> vertex 1 of cycle i+1
  kAdjacent,
};

/// A chain of directed cycles joined by single bridge edges. Requires at
/// least two cycles, each of length >= 3.
DirectedGraph gen_bridged_cycles(
    const std::vector<std::size_t>& cycle_sizes,
    BridgePlacement placement = BridgePlacement::kHalfway);

struct YoungFibonacciSpec {
  std::size_t layers = 0;
};
struct FfnnSpec {
  std::vector<std::size_t> layer_sizes;
};
struct BinaryTreeSpec {
  std::size_t depth = 0;
};
struct BridgedCyclesSpec {
  std::vector<std::size_t> cycle_sizes;
};

using TopologySpec =
    std::variant<YoungFibonacciSpec, FfnnSpec, BinaryTreeSpec,
                 BridgedCyclesSpec>;

DirectedGraph generate(const TopologySpec& spec);

/// Short human-readable label, e.g. "yf(N=3)" or "ffnn(3,4,4,2)".
std::string describe(const TopologySpec& spec);

}  // namespace graphent

#include "graphent/topology.hpp"

#include <numeric>
#include <sstream>

namespace graphent {

namespace {

std::string join(const std::vector<std::size_t>& values) {
  std::ostringstream os;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) os << ',';
    os << values[i];
  }
  return os.str();
}

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

}  // namespace

DirectedGraph gen_young_fibonacci(std::size_t layers) {
  if (layers < 2) {
    throw GraphError("Young-Fibonacci graph needs at least 2 layers");
  }
  // Layer i (1-based) starts at index i(i-1)/2.
  auto first = [](std::size_t layer) { return layer * (layer - 1) / 2; };
  std::vector<Edge> edges;
  edges.reserve(layers * (layers - 1));
  for (std::size_t layer = 1; layer < layers; ++layer) {
    for (std::size_t j = 0; j < layer; ++j) {
      const Vertex v = first(layer) + j;
      edges.push_back({v, first(layer + 1) + j});
      edges.push_back({v, first(layer + 1) + j + 1});
    }
  }
  return DirectedGraph::from_edge_list(layers * (layers + 1) / 2,
                                       std::move(edges));
}

DirectedGraph gen_ffnn(const std::vector<std::size_t>& layer_sizes) {
  if (layer_sizes.size() < 2) {
    throw GraphError("feed-forward network needs at least 2 layers");
  }
  for (std::size_t size : layer_sizes) {
    if (size == 0) throw GraphError("feed-forward layer of size 0");
  }
  std::vector<Edge> edges;
  std::size_t offset = 0;
  for (std::size_t i = 0; i + 1 < layer_sizes.size(); ++i) {
    const std::size_t next = offset + layer_sizes[i];
    for (std::size_t u = 0; u < layer_sizes[i]; ++u) {
      for (std::size_t v = 0; v < layer_sizes[i + 1]; ++v) {
        edges.push_back({offset + u, next + v});
      }
    }
    offset = next;
  }
  const std::size_t total =
      std::accumulate(layer_sizes.begin(), layer_sizes.end(), std::size_t{0});
  return DirectedGraph::from_edge_list(total, std::move(edges));
}

DirectedGraph gen_full_binary_tree(std::size_t depth) {
  if (depth < 1) throw GraphError("binary tree depth must be >= 1");
  if (depth >= 8 * sizeof(std::size_t)) {
    throw GraphError("binary tree depth " + std::to_string(depth) +
                     " too large");
  }
  const std::size_t m = (std::size_t{1} << depth) - 1;
  std::vector<Edge> edges;
  edges.reserve(m - 1);
  for (Vertex v = 0; 2 * v + 1 < m; ++v) {
    edges.push_back({v, 2 * v + 1});
    edges.push_back({v, 2 * v + 2});
  }
  return DirectedGraph::from_edge_list(m, std::move(edges));
}

DirectedGraph gen_bridged_cycles(const std::vector<std::size_t>& cycle_sizes,
                                 BridgePlacement placement) {
  if (cycle_sizes.size() < 2) {
    throw GraphError("bridged cycle graph needs at least 2 cycles");
  }
  for (std::size_t size : cycle_sizes) {
    if (size < 3) throw GraphError("every cycle needs at least 3 vertices");
  }
  std::vector<std::size_t> offsets(cycle_sizes.size() + 1, 0);
  std::partial_sum(cycle_sizes.begin(), cycle_sizes.end(),
                   offsets.begin() + 1);

  std::vector<Edge> edges;
  for (std::size_t c = 0; c < cycle_sizes.size(); ++c) {
    const std::size_t size = cycle_sizes[c];
    for (std::size_t k = 0; k < size; ++k) {
      edges.push_back({offsets[c] + k, offsets[c] + (k + 1) % size});
    }
  }
  // Within a middle cycle the incoming and outgoing bridge endpoints differ
  // whenever the cycle has >= 3 vertices.
  for (std::size_t c = 0; c + 1 < cycle_sizes.size(); ++c) {
    const std::size_t next = c + 1;
    if (placement == BridgePlacement::kHalfway) {
      edges.push_back({offsets[c], offsets[next] + cycle_sizes[next] / 2});
    } else {
      edges.push_back({offsets[c] + cycle_sizes[c] - 1, offsets[next] + 1});
    }
  }
  return DirectedGraph::from_edge_list(offsets.back(), std::move(edges));
}

DirectedGraph generate(const TopologySpec& spec) {
  return std::visit(
      Overloaded{
          [](const YoungFibonacciSpec& s) {
            return gen_young_fibonacci(s.layers);
          },
          [](const FfnnSpec& s) { return gen_ffnn(s.layer_sizes); },
          [](const BinaryTreeSpec& s) { return gen_full_binary_tree(s.depth); },
          [](const BridgedCyclesSpec& s) {
            return gen_bridged_cycles(s.cycle_sizes);
          },
      },
      spec);
}

std::string describe(const TopologySpec& spec) {
  return std::visit(
      Overloaded{
          [](const YoungFibonacciSpec& s) {
            return "yf(N=" + std::to_string(s.layers) + ")";
          },
          [](const FfnnSpec& s) { return "ffnn(" + join(s.layer_sizes) + ")"; },
          [](const BinaryTreeSpec& s) {
            return "btree(N=" + std::to_string(s.depth) + ")";
          },
          [](const BridgedCyclesSpec& s) {
            return "bridged(" + join(s.cycle_sizes) + ")";
          },
      },
      spec);
}

}  // namespace graphent

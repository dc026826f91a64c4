#include "graphent/random.hpp"

#include <numeric>
#include <stdexcept>
#include <utility>

namespace graphent {

std::uint64_t Rng::below(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("Rng::below(0)");
  const std::uint64_t limit = engine_.max() - engine_.max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

DirectedGraph random_graph(std::size_t num_vertices, double edge_probability,
                           Rng& rng) {
  std::vector<Edge> edges;
  for (Vertex a = 0; a < num_vertices; ++a) {
    for (Vertex b = a + 1; b < num_vertices; ++b) {
      if (!rng.bernoulli(edge_probability)) continue;
      if (rng.bernoulli(0.5)) {
        edges.push_back({a, b});
      } else {
        edges.push_back({b, a});
      }
    }
  }
  return DirectedGraph::from_edge_list(num_vertices, std::move(edges));
}

std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), Vertex{0});
  for (std::size_t i = n; i > 1; --i) {
    std::swap(perm[i - 1], perm[rng.below(i)]);
  }
  return perm;
}

}  // namespace graphent

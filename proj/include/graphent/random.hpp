#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

/// Seeded generator whose derived draws are bit-reproducible across standard
/// library implementations (the std distributions are not).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  /// Uniform integer in [0, n), n > 0, by rejection.
  std::uint64_t below(std::uint64_t n);
  bool bernoulli(double probability) { return uniform() < probability; }

 private:
  std::mt19937_64 engine_;
};

/// Each unordered pair {a, b} becomes an edge with the given probability,
/// oriented a->b or b->a with equal odds.
DirectedGraph random_graph(std::size_t num_vertices, double edge_probability,
                           Rng& rng);

/// Uniform random permutation of [0, n) (Fisher-Yates).
std::vector<Vertex> random_permutation(std::size_t n, Rng& rng);

}  // namespace graphent

#include "graphent/topology_ed.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "graphent/entanglement.hpp"

namespace graphent {

namespace {

void add(DegreeDistribution::Counts& counts, std::size_t degree,
         std::uint64_t n) {
  if (n) counts[degree] += n;
}

void check_ffnn(const std::vector<std::size_t>& sizes) {
  if (sizes.size() < 2) {
    throw GraphError("feed-forward network needs at least 2 layers");
  }
  for (std::size_t s : sizes) {
    if (s == 0) throw GraphError("feed-forward layer of size 0");
  }
}

}  // namespace

DegreeDistribution young_fibonacci_degrees(std::size_t layers) {
  if (layers < 2) {
    throw GraphError("Young-Fibonacci graph needs at least 2 layers");
  }
  const std::uint64_t n = layers;
  DegreeDistribution::Counts counts;
  add(counts, 1, 2);
  add(counts, 2, n - 1);
  add(counts, 3, 2 * (n - 2));
  add(counts, 4, (n - 2) * (n >= 3 ? n - 3 : 0) / 2);
  return DegreeDistribution::from_counts(std::move(counts));
}

DegreeDistribution ffnn_degrees(const std::vector<std::size_t>& layer_sizes) {
  check_ffnn(layer_sizes);
  const std::size_t last = layer_sizes.size() - 1;
  DegreeDistribution::Counts counts;
  add(counts, layer_sizes[1], layer_sizes[0]);
  for (std::size_t i = 1; i < last; ++i) {
    add(counts, layer_sizes[i - 1] + layer_sizes[i + 1], layer_sizes[i]);
  }
  add(counts, layer_sizes[last - 1], layer_sizes[last]);
  return DegreeDistribution::from_counts(std::move(counts));
}

DegreeDistribution binary_tree_degrees(std::size_t depth) {
  if (depth < 1) throw GraphError("binary tree depth must be >= 1");
  if (depth > 63) throw GraphError("binary tree depth above 63");
  if (depth == 1) return DegreeDistribution::from_counts({{0, 1}});
  const std::uint64_t leaves = std::uint64_t{1} << (depth - 1);
  DegreeDistribution::Counts counts;
  add(counts, 1, leaves);
  add(counts, 2, 1);
  add(counts, 3, leaves - 2);
  return DegreeDistribution::from_counts(std::move(counts));
}

DegreeDistribution bridged_cycles_degrees(std::size_t total_vertices,
                                          std::size_t cycles) {
  if (cycles < 2) throw GraphError("bridged cycle graph needs >= 2 cycles");
  if (total_vertices < 3 * cycles) {
    throw GraphError("bridged cycle graph needs M >= 3N, got M=" +
                     std::to_string(total_vertices) +
                     " N=" + std::to_string(cycles));
  }
  DegreeDistribution::Counts counts;
  add(counts, 2, total_vertices - 2 * cycles + 2);
  add(counts, 3, 2 * (cycles - 1));
  return DegreeDistribution::from_counts(std::move(counts));
}

double ed_young_fibonacci(double theta, std::size_t layers) {
  return ed_closed_form(young_fibonacci_degrees(layers), theta);
}

double ed_young_fibonacci_limit(double theta) {
  const double c = std::cos(theta);
  return 1.0 - int_pow(c * c, 4);
}

double ed_ffnn(double theta, const std::vector<std::size_t>& layer_sizes) {
  return ed_closed_form(ffnn_degrees(layer_sizes), theta);
}

double ed_ffnn_output_exponent_variant(
    double theta, const std::vector<std::size_t>& layer_sizes) {
  check_ffnn(layer_sizes);
  const double c = std::cos(theta);
  const double c2 = c * c;
  const std::size_t last = layer_sizes.size() - 1;
  const auto m = [&](std::size_t i) { return static_cast<double>(layer_sizes[i]); };

  double weighted = m(0) * int_pow(c2, layer_sizes[1]) +
                    m(last) * int_pow(c2, layer_sizes[last]);
  for (std::size_t i = 1; i < last; ++i) {
    weighted += m(i) * int_pow(c2, layer_sizes[i - 1] + layer_sizes[i + 1]);
  }
  const double total = static_cast<double>(
      std::accumulate(layer_sizes.begin(), layer_sizes.end(), std::size_t{0}));
  return 1.0 - weighted / total;
}

double ed_binary_tree(double theta, std::size_t depth) {
  return ed_closed_form(binary_tree_degrees(depth), theta);
}

double ed_binary_tree_limit(double theta) {
  const double c = std::cos(theta);
  const double c2 = c * c;
  return 1.0 - 0.5 * c2 * (1.0 + c2 * c2);
}

double ed_bridged_cycles(double theta, std::size_t total_vertices,
                         std::size_t cycles) {
  return ed_closed_form(bridged_cycles_degrees(total_vertices, cycles), theta);
}

}  // namespace graphent

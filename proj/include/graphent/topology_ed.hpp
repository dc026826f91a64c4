#pragma once

#include <cstddef>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

// Degree tables of the generator families, written from their layer
// structure rather than from a constructed graph, and the ED per qubit
// (|+> inputs) that each table yields through ed_closed_form.

/// {1: 2, 2: N-1, 3: 2(N-2), 4: (N-2)(N-3)/2}, zero entries dropped.
DegreeDistribution young_fibonacci_degrees(std::size_t layers);

/// Input layer degree M_2, hidden layer i degree M_{i-1} + M_{i+1}, output
/// layer degree M_{N-1}.
DegreeDistribution ffnn_degrees(const std::vector<std::size_t>& layer_sizes);

/// {1: 2^{N-1}, 2: 1, 3: 2(2^{N-2} - 1)} for N >= 2; {0: 1} for N = 1.
/// Depth is limited to 63.
DegreeDistribution binary_tree_degrees(std::size_t depth);

/// {2: M - 2N + 2, 3: 2(N - 1)} for N cycles with M vertices in total.
DegreeDistribution bridged_cycles_degrees(std::size_t total_vertices,
                                          std::size_t cycles);

double ed_young_fibonacci(double theta, std::size_t layers);
/// N -> infinity: 1 - cos⁸θ.
double ed_young_fibonacci_limit(double theta);

double ed_ffnn(double theta, const std::vector<std::size_t>& layer_sizes);

/// The feed-forward expression with the output-layer exponent taken as
/// 2 M_N instead of 2 M_{N-1}. It does not match the simulated state
/// whenever M_N != M_{N-1}; kept so that mismatch can be demonstrated.
double ed_ffnn_output_exponent_variant(
    double theta, const std::vector<std::size_t>& layer_sizes);

/// Depth 1 (a lone vertex) gives 0.
double ed_binary_tree(double theta, std::size_t depth);
/// N -> infinity: 1 - (cos²θ / 2)(1 + cos⁴θ).
double ed_binary_tree_limit(double theta);

/// Requires cycles >= 2 and total_vertices >= 3 * cycles.
double ed_bridged_cycles(double theta, std::size_t total_vertices,
                         std::size_t cycles);

}  // namespace graphent

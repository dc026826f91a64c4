#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "graphent/graph.hpp"
#include "graphent/state.hpp"

namespace graphent {

enum class EdMethod { kNumeric, kClosed, kGeneralClosed };

std::string_view to_string(EdMethod method);

/// Entanglement Distance per qubit together with its per-vertex terms
/// 1 - ||<σ^(i)>||². `total` is the mean of `per_vertex`.
struct EdReport {
  std::vector<double> per_vertex;
  double total = 0.0;
  EdMethod method = EdMethod::kNumeric;
};

/// base^exponent by repeated squaring.
double int_pow(double base, std::uint64_t exponent);

/// ED from explicit Pauli expectations. Throws std::invalid_argument if the
/// state's norm is off by more than 1e-8.
EdReport ed_numeric(const PureState& state);

/// Contribution 1 - cos^{2d}θ of a degree-d vertex for |+> inputs.
double vertex_ed_closed(std::size_t degree, double theta);

/// Contribution 1 - (1-2p)² - 4p(1-p) r^{2d}, r² = cos²θ + sin²θ (1-2p)².
double vertex_ed_general(std::size_t degree, double p, double theta);

/// 1 - (1/M) Σ_k n_k cos^{2k}θ. Throws GraphError on an empty distribution.
double ed_closed_form(const DegreeDistribution& dist, double theta);

/// (1/M) Σ_k n_k [1 - (1-2p)² - 4p(1-p) r^{2k}]. Equals ed_closed_form at
/// p = 1/2. Throws std::invalid_argument for p outside [0, 1].
double ed_closed_general(const DegreeDistribution& dist, double p, double theta);

/// Per-vertex closed-form report for a concrete graph (|+> inputs).
EdReport ed_closed_report(const DirectedGraph& g, double theta);

/// Per-vertex general-input closed-form report.
EdReport ed_closed_general_report(const DirectedGraph& g, double p,
                                  double theta);

/// Phase δ of z = <φ|Ubar|φ> = r e^{iδ}.
double overlap_phase(const InitialQubit& qubit, const InteractionParams& params);

/// Closed-form Pauli expectation vector of a vertex with d_out outgoing and
/// d_in incoming edges:
///   ( 2 sqrt(p(1-p)) r^d cos Φ, -2 sqrt(p(1-p)) r^d sin Φ, 1 - 2p ),
///   d = d_out + d_in,  Φ = δ0 - δ1 - d·δ + d_out·ψ + d_in·θ.
/// `delta` defaults to overlap_phase(qubit, params).
std::array<double, 3> pauli_vector_closed(std::size_t d_out, std::size_t d_in,
                                          const InitialQubit& qubit,
                                          const InteractionParams& params,
                                          std::optional<double> delta = {});

/// ED of a single edge: 16 p² (1-p)² sin²θ.
double two_qubit_ed_analytic(double p, double theta);

}  // namespace graphent

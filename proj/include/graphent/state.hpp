#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include "graphent/graph.hpp"

namespace graphent {

using Complex = std::complex<double>;

/// Largest register product_state/build_graph_state accept unless told
/// otherwise: 2^22 amplitudes, 64 MiB.
inline constexpr std::size_t kDefaultMaxQubits = 22;

/// Thrown when a requested register exceeds the qubit cap.
class QubitCapError : public std::length_error {
 public:
  using std::length_error::length_error;
};

/// Parameters of the single-qubit block
///   Ubar = e^{-i psi} diag(e^{i theta}, e^{-i theta})
/// shared by every edge. Radians.
struct InteractionParams {
  double psi = 0.0;
  double theta = 0.0;

  /// Ubar's diagonal entries: {<0|Ubar|0>, <1|Ubar|1>}.
  std::array<Complex, 2> ubar_diagonal() const;
};

/// Per-vertex input qubit alpha0|0> + alpha1|1> with
/// alpha0 = sqrt(1-p) e^{i delta0}, alpha1 = sqrt(p) e^{i delta1}.
/// The default is |+>.
struct InitialQubit {
  double p = 0.5;
  double delta0 = 0.0;
  double delta1 = 0.0;

  Complex alpha0() const;
  Complex alpha1() const;
  /// Throws std::invalid_argument unless 0 <= p <= 1 and phases are finite.
  void validate() const;
};

/// A normalized M-qubit state vector. Basis index x stores qubit i in bit i
/// of x (qubit 0 is the least significant bit).
class PureState {
 public:
  /// Takes ownership of 2^M amplitudes. Throws std::invalid_argument if the
  /// size is not a power of two or the norm deviates from 1 by more than
  /// `norm_tolerance`.
  explicit PureState(std::vector<Complex> amplitudes,
                     double norm_tolerance = 1e-12);

  std::size_t num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return amplitudes_.size(); }
  std::span<const Complex> amplitudes() const { return amplitudes_; }
  Complex operator[](std::size_t index) const { return amplitudes_[index]; }

  /// Sum of |amplitude|^2.
  double norm_squared() const;

 private:
  friend PureState apply_edge_phase(PureState, Vertex, Vertex,
                                    const InteractionParams&);
  PureState() = default;

  std::size_t num_qubits_ = 0;
  std::vector<Complex> amplitudes_;
};

/// |phi>^{⊗M}. Throws QubitCapError if M > max_qubits.
PureState product_state(std::size_t num_qubits, const InitialQubit& qubit,
                        std::size_t max_qubits = kDefaultMaxQubits);

/// Applies U_ab = Π0^(a) ⊗ I^(b) + Π1^(a) ⊗ Ubar^(b). The operator is
/// diagonal, so this is one phase multiply per amplitude with bit a set.
PureState apply_edge_phase(PureState state, Vertex a, Vertex b,
                           const InteractionParams& params);

/// Product state followed by one edge operator per edge, in edge-list order.
PureState build_graph_state(const DirectedGraph& g, const InitialQubit& qubit,
                            const InteractionParams& params,
                            std::size_t max_qubits = kDefaultMaxQubits);

/// (<σx>, <σy>, <σz>) on qubit i.
std::array<double, 3> pauli_expectations(const PureState& state, Vertex i);

}  // namespace graphent

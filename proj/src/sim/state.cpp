#include "graphent/state.hpp"

#include <bit>
#include <cmath>
#include <string>

namespace graphent {

namespace {

void check_qubit(const PureState& state, Vertex v) {
  if (v >= state.num_qubits()) {
    throw std::out_of_range("qubit " + std::to_string(v) + " outside [0, " +
                            std::to_string(state.num_qubits()) + ")");
  }
}

}  // namespace

std::array<Complex, 2> InteractionParams::ubar_diagonal() const {
  const Complex global = std::polar(1.0, -psi);
  return {global * std::polar(1.0, theta), global * std::polar(1.0, -theta)};
}

Complex InitialQubit::alpha0() const {
  return std::polar(std::sqrt(1.0 - p), delta0);
}

Complex InitialQubit::alpha1() const { return std::polar(std::sqrt(p), delta1); }

void InitialQubit::validate() const {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1], got " +
                                std::to_string(p));
  }
  if (!std::isfinite(delta0) || !std::isfinite(delta1)) {
    throw std::invalid_argument("input phases must be finite");
  }
}

PureState::PureState(std::vector<Complex> amplitudes, double norm_tolerance)
    : amplitudes_(std::move(amplitudes)) {
  if (amplitudes_.size() < 2 || !std::has_single_bit(amplitudes_.size())) {
    throw std::invalid_argument(
        "state vector length must be a power of two >= 2");
  }
  num_qubits_ = static_cast<std::size_t>(std::countr_zero(amplitudes_.size()));
  if (std::abs(norm_squared() - 1.0) > norm_tolerance) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

double PureState::norm_squared() const {
  double total = 0.0;
  for (const Complex& a : amplitudes_) total += std::norm(a);
  return total;
}

PureState product_state(std::size_t num_qubits, const InitialQubit& qubit,
                        std::size_t max_qubits) {
  qubit.validate();
  if (num_qubits == 0) throw std::invalid_argument("need at least one qubit");
  if (num_qubits > max_qubits) {
    throw QubitCapError(std::to_string(num_qubits) +
                        " qubits exceed the cap of " +
                        std::to_string(max_qubits));
  }
  const std::array<Complex, 2> alpha = {qubit.alpha0(), qubit.alpha1()};
  // Doubling construction: after step i the first 2^(i+1) entries hold the
  // i+1 lowest qubits.
  std::vector<Complex> amps(std::size_t{1} << num_qubits);
  amps[0] = alpha[0];
  amps[1] = alpha[1];
  for (std::size_t q = 1; q < num_qubits; ++q) {
    const std::size_t half = std::size_t{1} << q;
    for (std::size_t x = 0; x < half; ++x) {
      amps[x + half] = amps[x] * alpha[1];
      amps[x] *= alpha[0];
    }
  }
  return PureState(std::move(amps), 1e-12);
}

PureState apply_edge_phase(PureState state, Vertex a, Vertex b,
                           const InteractionParams& params) {
  check_qubit(state, a);
  check_qubit(state, b);
  if (a == b) throw std::invalid_argument("edge operator needs a != b");

  const auto [u0, u1] = params.ubar_diagonal();
  const std::size_t control = std::size_t{1} << a;
  const std::size_t target = std::size_t{1} << b;
  auto& amps = state.amplitudes_;
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (x & control) amps[x] *= (x & target) ? u1 : u0;
  }
  return state;
}

PureState build_graph_state(const DirectedGraph& g, const InitialQubit& qubit,
                            const InteractionParams& params,
                            std::size_t max_qubits) {
  PureState state = product_state(g.num_vertices(), qubit, max_qubits);
  for (const Edge& e : g.edges()) {
    state = apply_edge_phase(std::move(state), e.from, e.to, params);
  }
  return state;
}

std::array<double, 3> pauli_expectations(const PureState& state, Vertex i) {
  check_qubit(state, i);
  const std::size_t bit = std::size_t{1} << i;
  const auto amps = state.amplitudes();
  double p0 = 0.0;
  double p1 = 0.0;
  Complex coherence = 0.0;  // <0|rho_i|1>
  for (std::size_t x = 0; x < amps.size(); ++x) {
    if (x & bit) continue;
    const Complex a0 = amps[x];
    const Complex a1 = amps[x | bit];
    p0 += std::norm(a0);
    p1 += std::norm(a1);
    coherence += a0 * std::conj(a1);
  }
  return {2.0 * coherence.real(), -2.0 * coherence.imag(), p0 - p1};
}

}  // namespace graphent

#include "graphent/entanglement.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace graphent {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1], got " + std::to_string(p));
  }
}

double mean(const std::vector<double>& values) {
  return std::accumulate(values.begin(), values.end(), 0.0) /
         static_cast<double>(values.size());
}

// r² for input population p.
double overlap_modulus_sq(double p, double theta) {
  const double c = std::cos(theta);
  const double s = std::sin(theta);
  const double bias = 1.0 - 2.0 * p;
  return c * c + s * s * bias * bias;
}

}  // namespace

std::string_view to_string(EdMethod method) {
  switch (method) {
    case EdMethod::kNumeric:
      return "numeric";
    case EdMethod::kClosed:
      return "closed";
    case EdMethod::kGeneralClosed:
      return "general-closed";
  }
  return "unknown";
}

double int_pow(double base, std::uint64_t exponent) {
  double result = 1.0;
  while (exponent) {
    if (exponent & 1) result *= base;
    base *= base;
    exponent >>= 1;
  }
  return result;
}

EdReport ed_numeric(const PureState& state) {
  if (std::abs(state.norm_squared() - 1.0) > 1e-8) {
    throw std::invalid_argument("ED needs a normalized state");
  }
  EdReport report;
  report.method = EdMethod::kNumeric;
  report.per_vertex.reserve(state.num_qubits());
  for (Vertex i = 0; i < state.num_qubits(); ++i) {
    const auto [x, y, z] = pauli_expectations(state, i);
    report.per_vertex.push_back(1.0 - (x * x + y * y + z * z));
  }
  report.total = mean(report.per_vertex);
  return report;
}

double vertex_ed_closed(std::size_t degree, double theta) {
  const double c = std::cos(theta);
  return 1.0 - int_pow(c * c, degree);
}

double vertex_ed_general(std::size_t degree, double p, double theta) {
  check_probability(p);
  const double bias = 1.0 - 2.0 * p;
  return 1.0 - bias * bias -
         4.0 * p * (1.0 - p) * int_pow(overlap_modulus_sq(p, theta), degree);
}

double ed_closed_form(const DegreeDistribution& dist, double theta) {
  if (dist.empty()) throw GraphError("empty degree distribution");
  const double c = std::cos(theta);
  const double c2 = c * c;
  double weighted = 0.0;
  for (const auto& [k, n] : dist) {
    weighted += static_cast<double>(n) * int_pow(c2, k);
  }
  return 1.0 - weighted / static_cast<double>(dist.num_vertices());
}

double ed_closed_general(const DegreeDistribution& dist, double p,
                         double theta) {
  check_probability(p);
  if (dist.empty()) throw GraphError("empty degree distribution");
  double weighted = 0.0;
  for (const auto& [k, n] : dist) {
    weighted += static_cast<double>(n) * vertex_ed_general(k, p, theta);
  }
  return weighted / static_cast<double>(dist.num_vertices());
}

EdReport ed_closed_report(const DirectedGraph& g, double theta) {
  EdReport report;
  report.method = EdMethod::kClosed;
  report.per_vertex.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    report.per_vertex.push_back(vertex_ed_closed(g.degree(v), theta));
  }
  report.total = mean(report.per_vertex);
  return report;
}

EdReport ed_closed_general_report(const DirectedGraph& g, double p,
                                  double theta) {
  EdReport report;
  report.method = EdMethod::kGeneralClosed;
  report.per_vertex.reserve(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    report.per_vertex.push_back(vertex_ed_general(g.degree(v), p, theta));
  }
  report.total = mean(report.per_vertex);
  return report;
}

double overlap_phase(const InitialQubit& qubit,
                     const InteractionParams& params) {
  qubit.validate();
  const auto [u0, u1] = params.ubar_diagonal();
  const Complex z = (1.0 - qubit.p) * u0 + qubit.p * u1;
  return std::arg(z);
}

std::array<double, 3> pauli_vector_closed(std::size_t d_out, std::size_t d_in,
                                          const InitialQubit& qubit,
                                          const InteractionParams& params,
                                          std::optional<double> delta) {
  qubit.validate();
  const double p = qubit.p;
  const double d = static_cast<double>(d_out + d_in);
  const double z_phase = delta ? *delta : overlap_phase(qubit, params);
  const double r = std::sqrt(overlap_modulus_sq(p, params.theta));
  const double amplitude =
      2.0 * std::sqrt(p * (1.0 - p)) * int_pow(r, d_out + d_in);
  const double phi = qubit.delta0 - qubit.delta1 - d * z_phase +
                     static_cast<double>(d_out) * params.psi +
                     static_cast<double>(d_in) * params.theta;
  return {amplitude * std::cos(phi), -amplitude * std::sin(phi), 1.0 - 2.0 * p};
}

double two_qubit_ed_analytic(double p, double theta) {
  check_probability(p);
  const double pq = p * (1.0 - p);
  const double s = std::sin(theta);
  return 16.0 * pq * pq * s * s;
}

}  // namespace graphent

#include "graphent/cli/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>

#include "graphent/random.hpp"

namespace graphent::cli {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kEdgeProbability = 0.4;
constexpr std::size_t kExtraPsiDraws = 4;

double norm3(const std::array<double, 3>& v) {
  return std::sqrt(v[0] * v[0] + v[1] * v[1] + v[2] * v[2]);
}

void record(CheckResult& check, double deviation) {
  ++check.evaluations;
  // A NaN deviation sticks and fails the check.
  if (std::isnan(check.max_deviation)) return;
  if (!(deviation <= check.max_deviation)) check.max_deviation = deviation;
}

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.passed; });
}

VerifyReport run_verify(const VerifyOptions& options) {
  if (options.graph && options.graph->num_vertices() > options.max_qubits) {
    throw QubitCapError(std::to_string(options.graph->num_vertices()) +
                        " qubits exceed the cap of " +
                        std::to_string(options.max_qubits));
  }
  if (!options.graph &&
      (options.random_max_vertices == 0 ||
       options.random_max_vertices > options.max_qubits)) {
    throw std::invalid_argument("random graph size must be in [1, cap]");
  }

  Rng rng(options.seed);
  CheckResult closed{"closed-form"};
  CheckResult general{"general-p"};
  CheckResult pauli{"pauli-norm"};
  CheckResult psi_check{"psi-independence"};
  CheckResult flip{"orientation-flip"};
  CheckResult relabel{"relabeling"};

  for (std::size_t s = 0; s < options.samples; ++s) {
    const DirectedGraph g =
        options.graph ? *options.graph
                      : random_graph(1 + rng.below(options.random_max_vertices),
                                     kEdgeProbability, rng);
    const DegreeDistribution dist = degree_distribution(g);
    const double theta = rng.uniform(0.0, std::numbers::pi);
    const double psi = rng.uniform(0.0, kTwoPi);
    const InitialQubit qubit{rng.uniform(), rng.uniform(0.0, kTwoPi),
                             rng.uniform(0.0, kTwoPi)};
    const InteractionParams params{psi, theta};

    const PureState plus_state =
        build_graph_state(g, InitialQubit{}, params, options.max_qubits);
    record(closed, std::abs(ed_numeric(plus_state).total -
                            options.closed_form(dist, theta)));

    const PureState state = build_graph_state(g, qubit, params, options.max_qubits);
    const EdReport base = ed_numeric(state);
    record(general,
           std::abs(base.total - options.closed_general(dist, qubit.p, theta)));

    double pauli_dev = 0.0;
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      const double numeric = norm3(pauli_expectations(state, v));
      const double closed_norm = norm3(
          pauli_vector_closed(g.out_degree(v), g.in_degree(v), qubit, params));
      pauli_dev = std::max(pauli_dev, std::abs(numeric - closed_norm));
    }
    record(pauli, pauli_dev);

    double psi_dev = 0.0;
    for (std::size_t k = 0; k < kExtraPsiDraws; ++k) {
      const InteractionParams shifted{rng.uniform(0.0, kTwoPi), theta};
      const EdReport other =
          ed_numeric(build_graph_state(g, qubit, shifted, options.max_qubits));
      psi_dev = std::max(psi_dev, std::abs(other.total - base.total));
    }
    record(psi_check, psi_dev);

    if (g.num_edges() > 0) {
      const DirectedGraph flipped = flip_edge(g, rng.below(g.num_edges()));
      const EdReport other =
          ed_numeric(build_graph_state(flipped, qubit, params, options.max_qubits));
      record(flip, std::max(std::abs(other.total - base.total),
                            max_abs_diff(other.per_vertex, base.per_vertex)));
    }

    const std::vector<Vertex> perm = random_permutation(g.num_vertices(), rng);
    const EdReport relabeled = ed_numeric(build_graph_state(
        permute_vertices(g, perm), qubit, params, options.max_qubits));
    std::vector<double> pulled_back(g.num_vertices());
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      pulled_back[v] = relabeled.per_vertex[perm[v]];
    }
    record(relabel, std::max(std::abs(relabeled.total - base.total),
                             max_abs_diff(pulled_back, base.per_vertex)));
  }

  VerifyReport report;
  report.tolerance = options.tolerance;
  report.checks = {closed, general, pauli, psi_check, flip, relabel};
  for (auto& check : report.checks) {
    check.passed = check.max_deviation <= options.tolerance;
  }
  return report;
}

void print_report(const VerifyReport& report, std::ostream& out) {
  char line[128];
  std::snprintf(line, sizeof(line), "%-18s %11s %15s  %s\n", "check",
                "evaluations", "max_deviation", "status");
  out << line;
  for (const auto& check : report.checks) {
    std::snprintf(line, sizeof(line), "%-18s %11zu %15.3e  %s\n",
                  check.name.c_str(), check.evaluations, check.max_deviation,
                  check.passed ? "ok" : "FAIL");
    out << line;
  }
  std::snprintf(line, sizeof(line), "result: %s (tol %.3e)\n",
                report.passed() ? "PASS" : "FAIL", report.tolerance);
  out << line;
}

}  // namespace graphent::cli

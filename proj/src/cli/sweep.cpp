#include "graphent/cli/sweep.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "graphent/cli/format.hpp"
#include "graphent/density_matrix.hpp"
#include "graphent/entanglement.hpp"
#include "graphent/topology_ed.hpp"
#include "graphent/two_qubit.hpp"

namespace graphent::cli {

namespace {

const DirectedGraph& single_edge() {
  static const DirectedGraph g = DirectedGraph::from_edge_list(2, {{0, 1}});
  return g;
}

// Reduced state of the control endpoint of an isolated edge.
DensityMatrix edge_endpoint_state(double p, double theta, double psi) {
  const PureState state =
      build_graph_state(single_edge(), InitialQubit{p, 0.0, 0.0},
                        InteractionParams{psi, theta});
  const std::array<Vertex, 1> keep = {0};
  return partial_trace(state, keep);
}

double entropy_from_eigenvalues(const std::array<double, 2>& lambda) {
  double s = 0.0;
  for (double l : lambda)
    if (l > 0.0) s -= l * std::log(l);
  return s;
}

double evaluate_ed(const SweepSpec& spec, double theta, double p) {
  if (const auto* limit = std::get_if<LimitCurve>(&spec.graph)) {
    return *limit == LimitCurve::kYoungFibonacci
               ? ed_young_fibonacci_limit(theta)
               : ed_binary_tree_limit(theta);
  }
  const auto& g = std::get<DirectedGraph>(spec.graph);
  if (spec.method == Method::kSimulate) {
    const PureState state = build_graph_state(
        g, InitialQubit{p, 0.0, 0.0}, InteractionParams{spec.psi, theta},
        spec.max_qubits);
    return ed_numeric(state).total;
  }
  const DegreeDistribution dist = degree_distribution(g);
  return spec.quantity == Quantity::kEd ? ed_closed_form(dist, theta)
                                        : ed_closed_general(dist, p, theta);
}

// Runs fn(i) for i in [0, n) on up to hardware_concurrency threads. fn must
// only write to slot i of its output.
template <class Fn>
void parallel_for(std::size_t n, Fn fn) {
  const std::size_t workers = std::min<std::size_t>(
      n, std::max(1u, std::thread::hardware_concurrency()));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) fn(i);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

Quantity parse_quantity(const std::string& name) {
  if (name == "ed") return Quantity::kEd;
  if (name == "ed-general") return Quantity::kEdGeneral;
  if (name == "entropy") return Quantity::kEntropy;
  if (name == "hs2") return Quantity::kHs2;
  throw std::invalid_argument("unknown quantity '" + name + "'");
}

std::string to_string(Quantity quantity) {
  switch (quantity) {
    case Quantity::kEd:
      return "ed";
    case Quantity::kEdGeneral:
      return "ed-general";
    case Quantity::kEntropy:
      return "entropy";
    case Quantity::kHs2:
      return "hs2";
  }
  return "?";
}

double GridRange::at(std::size_t i) const {
  if (i + 1 == steps) return hi;
  return lo + static_cast<double>(i) * (hi - lo) / static_cast<double>(steps - 1);
}

void GridRange::validate(const char* name) const {
  if (steps < 2) {
    throw std::invalid_argument(std::string(name) + " grid needs >= 2 steps");
  }
  if (!(lo < hi)) {
    throw std::invalid_argument(std::string(name) + " grid needs lo < hi");
  }
}

void validate(const SweepSpec& spec) {
  spec.theta.validate("theta");
  if (spec.p) {
    spec.p->validate("p");
    if (spec.p->lo < 0.0 || spec.p->hi > 1.0) {
      throw std::invalid_argument("p grid must stay inside [0, 1]");
    }
  } else if (!(spec.fixed_p >= 0.0 && spec.fixed_p <= 1.0)) {
    throw std::invalid_argument("p must lie in [0, 1]");
  }
  const bool ed_like =
      spec.quantity == Quantity::kEd || spec.quantity == Quantity::kEdGeneral;
  if (!ed_like) return;
  if (spec.quantity == Quantity::kEd && spec.p) {
    throw std::invalid_argument(
        "quantity 'ed' is defined at p = 1/2; use 'ed-general' for a p axis");
  }
  if (std::holds_alternative<std::monostate>(spec.graph)) {
    throw std::invalid_argument("ED sweeps need a graph or topology");
  }
  if (std::holds_alternative<LimitCurve>(spec.graph)) {
    if (spec.quantity != Quantity::kEd || spec.method != Method::kClosed) {
      throw std::invalid_argument(
          "limit curves exist only for quantity 'ed' with method 'closed'");
    }
  }
  if (const auto* g = std::get_if<DirectedGraph>(&spec.graph)) {
    if (spec.method == Method::kSimulate && g->num_vertices() > spec.max_qubits) {
      throw QubitCapError(std::to_string(g->num_vertices()) +
                          " qubits exceed the cap of " +
                          std::to_string(spec.max_qubits));
    }
  }
}

double evaluate_point(const SweepSpec& spec, double theta, double p) {
  const bool simulate = spec.method == Method::kSimulate;
  switch (spec.quantity) {
    case Quantity::kEd:
      return evaluate_ed(spec, theta, 0.5);
    case Quantity::kEdGeneral:
      return evaluate_ed(spec, theta, p);
    case Quantity::kHs2:
      if (simulate) {
        const double d = hs_distance(edge_endpoint_state(p, theta, spec.psi),
                                     DensityMatrix::maximally_mixed(2));
        return d * d;
      }
      return hs_distance_sq_analytic(p, theta);
    case Quantity::kEntropy:
      if (simulate) {
        return von_neumann_entropy(edge_endpoint_state(p, theta, spec.psi));
      }
      return entropy_from_eigenvalues(reduced_eigenvalues_analytic(p, theta));
  }
  throw std::logic_error("unhandled quantity");
}

void write_sweep_csv(const SweepSpec& spec, std::ostream& out) {
  validate(spec);
  const std::size_t p_steps = spec.p ? spec.p->steps : 1;
  const std::size_t rows = spec.theta.steps * p_steps;
  std::vector<double> values(rows);
  parallel_for(rows, [&](std::size_t row) {
    const double theta = spec.theta.at(row / p_steps);
    const double p = spec.p ? spec.p->at(row % p_steps) : spec.fixed_p;
    values[row] = evaluate_point(spec, theta, p);
  });

  out << (spec.p ? "theta,p,value\n" : "theta,value\n");
  for (std::size_t row = 0; row < rows; ++row) {
    out << format_sig17(spec.theta.at(row / p_steps)) << ',';
    if (spec.p) out << format_sig17(spec.p->at(row % p_steps)) << ',';
    out << format_sig17(values[row]) << '\n';
  }
}

std::string sweep_csv(const SweepSpec& spec) {
  std::ostringstream os;
  write_sweep_csv(spec, os);
  return os.str();
}

}  // namespace graphent::cli

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "graphent/entanglement.hpp"
#include "graphent/graph.hpp"
#include "graphent/state.hpp"

namespace graphent::cli {

using ClosedFormFn = std::function<double(const DegreeDistribution&, double)>;
using GeneralFormFn =
    std::function<double(const DegreeDistribution&, double, double)>;

struct VerifyOptions {
  /// Graph under test. Without one, every sample draws a fresh random graph
  /// (edge probability 0.4, random orientation) on 1..random_max_vertices
  /// vertices.
  std::optional<DirectedGraph> graph;
  std::size_t random_max_vertices = 8;
  std::size_t samples = 25;
  std::uint64_t seed = 42;
  double tolerance = 1e-10;
  std::size_t max_qubits = kDefaultMaxQubits;
  /// Closed forms checked against simulation; replaceable for harness tests.
  ClosedFormFn closed_form = ed_closed_form;
  GeneralFormFn closed_general = ed_closed_general;
};

struct CheckResult {
  std::string name;
  std::size_t evaluations = 0;
  double max_deviation = 0.0;
  bool passed = true;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  double tolerance = 0.0;

  bool passed() const;
};

/// Compares simulated ED against the closed forms and probes ψ-,
/// orientation- and relabeling-invariance, all from one seeded stream.
VerifyReport run_verify(const VerifyOptions& options);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace graphent::cli

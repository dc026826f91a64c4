#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <variant>

#include "graphent/graph.hpp"
#include "graphent/state.hpp"

namespace graphent::cli {

enum class Quantity { kEd, kEdGeneral, kEntropy, kHs2 };

/// Parses "ed", "ed-general", "entropy" or "hs2".
Quantity parse_quantity(const std::string& name);
std::string to_string(Quantity quantity);

enum class Method { kClosed, kSimulate };

/// Inclusive uniform grid: point i is lo + i (hi - lo) / (steps - 1).
struct GridRange {
  double lo = 0.0;
  double hi = 1.0;
  std::size_t steps = 2;

  double at(std::size_t i) const;
  /// Throws std::invalid_argument unless steps >= 2 and lo < hi.
  void validate(const char* name) const;
};

/// N -> infinity curve of a layered family.
enum class LimitCurve { kYoungFibonacci, kBinaryTree };

/// What the ED quantities are evaluated on. hs2 and entropy always describe
/// a single isolated edge and ignore this.
using SweepGraph = std::variant<std::monostate, DirectedGraph, LimitCurve>;

struct SweepSpec {
  Quantity quantity = Quantity::kEd;
  GridRange theta;
  /// Second axis; absent for 1-D sweeps.
  std::optional<GridRange> p;
  /// p used by 1-D sweeps of p-dependent quantities.
  double fixed_p = 0.5;
  double psi = 0.0;
  SweepGraph graph;
  Method method = Method::kClosed;
  std::size_t max_qubits = kDefaultMaxQubits;
};

/// Throws std::invalid_argument for inconsistent specs (e.g. a p axis for
/// "ed", or an ED quantity without a graph).
void validate(const SweepSpec& spec);

/// One grid point.
double evaluate_point(const SweepSpec& spec, double theta, double p);

/// CSV with header "theta,p,value" (2-D) or "theta,value" (1-D), θ outer
/// and p inner, values at 17 significant digits, LF line endings. Grid
/// points may be evaluated concurrently; rows are always emitted in grid
/// order.
void write_sweep_csv(const SweepSpec& spec, std::ostream& out);
std::string sweep_csv(const SweepSpec& spec);

}  // namespace graphent::cli

#include "graphent/cli/app.hpp"

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "graphent/cli/format.hpp"
#include "graphent/cli/sweep.hpp"
#include "graphent/cli/verify.hpp"
#include "graphent/entanglement.hpp"
#include "graphent/graph_io.hpp"
#include "graphent/topology.hpp"
#include "graphent/topology_ed.hpp"

namespace graphent::cli {

namespace {

// Flags naming the graph a command works on: a file or a generator.
struct GraphSourceFlags {
  std::string path;
  std::string topology;
  std::string layers;
  std::vector<std::size_t> layer_sizes;
  std::vector<std::size_t> cycles;
  std::string depth;

  void attach(CLI::App& cmd) {
    cmd.add_option("--graph", path, "Graph JSON file");
    cmd.add_option("--topology", topology, "Generator family")
        ->check(CLI::IsMember({"yf", "ffnn", "btree", "bridged"}));
    cmd.add_option("--layers", layers, "Young-Fibonacci layer count N");
    cmd.add_option("--layer-sizes", layer_sizes, "FFNN layer sizes a,b,c")
        ->delimiter(',');
    cmd.add_option("--cycles", cycles, "Bridged cycle sizes a,b,c")
        ->delimiter(',');
    cmd.add_option("--depth", depth, "Binary tree depth N");
  }

  bool given() const { return !path.empty() || !topology.empty(); }
};

std::size_t parse_count(const std::string& text, const char* flag) {
  std::size_t pos = 0;
  unsigned long long value = 0;
  try {
    value = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (text.empty() || pos != text.size() || text[0] == '-') {
    throw std::invalid_argument(std::string(flag) + " expects a non-negative integer, got '" +
                                text + "'");
  }
  return static_cast<std::size_t>(value);
}

bool is_infinite(const std::string& text) {
  return text == "inf" || text == "infinity";
}

TopologySpec topology_from_flags(const GraphSourceFlags& f) {
  if (f.topology == "yf") {
    if (f.layers.empty()) throw std::invalid_argument("--topology yf needs --layers");
    return YoungFibonacciSpec{parse_count(f.layers, "--layers")};
  }
  if (f.topology == "ffnn") {
    if (f.layer_sizes.empty()) {
      throw std::invalid_argument("--topology ffnn needs --layer-sizes");
    }
    return FfnnSpec{f.layer_sizes};
  }
  if (f.topology == "btree") {
    if (f.depth.empty()) throw std::invalid_argument("--topology btree needs --depth");
    return BinaryTreeSpec{parse_count(f.depth, "--depth")};
  }
  if (f.topology == "bridged") {
    if (f.cycles.empty()) throw std::invalid_argument("--topology bridged needs --cycles");
    return BridgedCyclesSpec{f.cycles};
  }
  throw std::invalid_argument("unknown topology '" + f.topology + "'");
}

DirectedGraph load_graph(const GraphSourceFlags& f) {
  if (!f.path.empty() && !f.topology.empty()) {
    throw std::invalid_argument("give either --graph or --topology, not both");
  }
  if (!f.path.empty()) return read_graph_file(f.path);
  if (!f.topology.empty()) return generate(topology_from_flags(f));
  throw std::invalid_argument("a graph is required: --graph PATH or --topology ...");
}

double resolve_theta(CLI::Option* theta_opt, double theta,
                     const std::string& pi_frac, double fallback) {
  if (!pi_frac.empty()) {
    if (theta_opt->count()) {
      throw std::invalid_argument("give either --theta or --theta-pi-frac");
    }
    return parse_pi_fraction(pi_frac);
  }
  return theta_opt->count() ? theta : fallback;
}

void check_finite(double value, const char* flag) {
  if (!std::isfinite(value)) {
    throw std::invalid_argument(std::string(flag) + " must be finite");
  }
}

Method parse_method(const std::string& name) {
  if (name == "closed") return Method::kClosed;
  if (name == "simulate") return Method::kSimulate;
  throw std::invalid_argument("sweep method must be closed or simulate");
}

// Writes `text` to `path`, or to `out` when no path was given.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw std::runtime_error("cannot write " + path);
  file << text;
  if (!file) throw std::runtime_error("write failed for " + path);
}

int cmd_gen(const GraphSourceFlags& source, const std::string& out_path,
            std::ostream& out, std::ostream& err) {
  if (source.topology.empty()) throw std::invalid_argument("gen needs --topology");
  if (!source.path.empty()) throw std::invalid_argument("gen does not read --graph");
  const TopologySpec spec = topology_from_flags(source);
  const DirectedGraph g = generate(spec);

  std::ostream& summary = out_path.empty() ? err : out;
  summary << "topology: " << describe(spec) << '\n'
          << "vertices: " << g.num_vertices() << '\n'
          << "edges: " << g.num_edges() << '\n'
          << "degree_distribution: " << degree_distribution(g).to_string() << '\n';
  emit(out_path, serialize_graph(g) + "\n", out);
  return kExitOk;
}

struct EdFlags {
  double theta = 0.0;
  std::string theta_pi_frac;
  double p = 0.5;
  double psi = 0.0;
  std::string method = "closed";
  bool verbose = false;
  std::optional<std::size_t> max_qubits;
};

int cmd_ed(const GraphSourceFlags& source, const EdFlags& flags,
           CLI::Option* theta_opt, std::ostream& out) {
  const DirectedGraph g = load_graph(source);
  const double theta = resolve_theta(theta_opt, flags.theta, flags.theta_pi_frac,
                                     std::numbers::pi / 2);
  check_finite(theta, "--theta");
  check_finite(flags.psi, "--psi");
  if (!(flags.p >= 0.0 && flags.p <= 1.0)) {
    throw std::invalid_argument("--p must lie in [0, 1]");
  }
  const bool want_closed = flags.method != "simulate";
  const bool want_sim = flags.method != "closed";
  const std::size_t cap = resolve_max_qubits(flags.max_qubits);
  if (want_sim && g.num_vertices() > cap) {
    throw QubitCapError(std::to_string(g.num_vertices()) +
                        " qubits exceed the cap of " + std::to_string(cap) +
                        " (raise --max-qubits or " + kMaxQubitsEnv + ")");
  }

  out << "vertices: " << g.num_vertices() << '\n'
      << "edges: " << g.num_edges() << '\n'
      << "theta: " << format_shortest(theta) << '\n'
      << "p: " << format_shortest(flags.p) << '\n'
      << "psi: " << format_shortest(flags.psi) << '\n';

  std::optional<EdReport> closed;
  std::optional<EdReport> simulated;
  if (want_closed) {
    // The per-vertex report supplies the verbose rows; the total comes
    // from the degree distribution.
    const DegreeDistribution dist = degree_distribution(g);
    if (flags.p == 0.5) {
      closed = ed_closed_report(g, theta);
      closed->total = ed_closed_form(dist, theta);
    } else {
      closed = ed_closed_general_report(g, flags.p, theta);
      closed->total = ed_closed_general(dist, flags.p, theta);
    }
    out << "closed: " << format_shortest(closed->total) << '\n';
  }
  if (want_sim) {
    const PureState state = build_graph_state(
        g, InitialQubit{flags.p, 0.0, 0.0}, InteractionParams{flags.psi, theta}, cap);
    simulated = ed_numeric(state);
    out << "simulate: " << format_shortest(simulated->total) << '\n';
  }
  if (closed && simulated) {
    out << "abs_diff: " << format_shortest(std::abs(closed->total - simulated->total))
        << '\n';
  }
  if (flags.verbose) {
    out << "vertex,out_degree,in_degree";
    if (closed) out << ",closed";
    if (simulated) out << ",simulate";
    out << '\n';
    for (Vertex v = 0; v < g.num_vertices(); ++v) {
      out << v << ',' << g.out_degree(v) << ',' << g.in_degree(v);
      if (closed) out << ',' << format_shortest(closed->per_vertex[v]);
      if (simulated) out << ',' << format_shortest(simulated->per_vertex[v]);
      out << '\n';
    }
  }
  return kExitOk;
}

struct SweepFlags {
  std::string quantity;
  std::size_t theta_steps = 33;
  double theta_lo = 0.0;
  double theta_hi = std::numbers::pi;
  std::optional<std::size_t> p_steps;
  double p_lo = 0.0;
  double p_hi = 1.0;
  double p = 0.5;
  double psi = 0.0;
  std::string method = "closed";
  std::string out_path;
  std::optional<std::size_t> max_qubits;
};

int cmd_sweep(const GraphSourceFlags& source, const SweepFlags& flags,
              std::ostream& out) {
  SweepSpec spec;
  spec.quantity = parse_quantity(flags.quantity);
  spec.theta = GridRange{flags.theta_lo, flags.theta_hi, flags.theta_steps};
  if (flags.p_steps) spec.p = GridRange{flags.p_lo, flags.p_hi, *flags.p_steps};
  spec.fixed_p = flags.p;
  spec.psi = flags.psi;
  spec.method = parse_method(flags.method);
  spec.max_qubits = resolve_max_qubits(flags.max_qubits);

  if (source.topology == "yf" && is_infinite(source.layers)) {
    spec.graph = LimitCurve::kYoungFibonacci;
  } else if (source.topology == "btree" && is_infinite(source.depth)) {
    spec.graph = LimitCurve::kBinaryTree;
  } else if (source.given()) {
    spec.graph = load_graph(source);
  }
  emit(flags.out_path, sweep_csv(spec), out);
  return kExitOk;
}

struct VerifyFlags {
  std::size_t samples = 25;
  std::uint64_t seed = 42;
  double tol = 1e-10;
  std::size_t random_vertices = 8;
  std::optional<std::size_t> max_qubits;
};

// Output-layer exponent check for feed-forward graphs: the degree-table
// closed form against the variant with exponent 2 M_N, both measured
// against simulation on a θ grid.
void report_ffnn_exponent(const std::vector<std::size_t>& sizes,
                          const DirectedGraph& g, std::size_t cap,
                          std::ostream& out) {
  double table_dev = 0.0;
  double variant_dev = 0.0;
  for (std::size_t i = 0; i < 33; ++i) {
    const double theta = std::numbers::pi * static_cast<double>(i) / 32.0;
    const double sim =
        ed_numeric(build_graph_state(g, InitialQubit{}, InteractionParams{0.0, theta}, cap))
            .total;
    table_dev = std::max(table_dev, std::abs(ed_ffnn(theta, sizes) - sim));
    variant_dev = std::max(
        variant_dev, std::abs(ed_ffnn_output_exponent_variant(theta, sizes) - sim));
  }
  out << "ffnn output exponent 2*M_{N-1} (degree table): max_deviation "
      << format_shortest(table_dev) << '\n'
      << "ffnn output exponent 2*M_N (variant):          max_deviation "
      << format_shortest(variant_dev) << '\n';
}

int cmd_verify(const GraphSourceFlags& source, const VerifyFlags& flags,
               std::ostream& out) {
  VerifyOptions options;
  options.samples = flags.samples;
  options.seed = flags.seed;
  options.tolerance = flags.tol;
  options.random_max_vertices = flags.random_vertices;
  options.max_qubits = resolve_max_qubits(flags.max_qubits);
  if (source.given()) options.graph = load_graph(source);

  out << "graph: "
      << (options.graph ? std::to_string(options.graph->num_vertices()) + " vertices, " +
                              std::to_string(options.graph->num_edges()) + " edges"
                        : "random (up to " + std::to_string(flags.random_vertices) +
                              " vertices per sample)")
      << '\n'
      << "samples: " << flags.samples << "  seed: " << flags.seed << '\n';
  const VerifyReport report = run_verify(options);
  print_report(report, out);
  if (source.topology == "ffnn" && options.graph) {
    report_ffnn_exponent(source.layer_sizes, *options.graph, options.max_qubits, out);
  }
  return report.passed() ? kExitOk : kExitVerifyFailed;
}

}  // namespace

std::size_t resolve_max_qubits(std::optional<std::size_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kMaxQubitsEnv); env && *env) {
    return parse_count(env, kMaxQubitsEnv);
  }
  return kDefaultMaxQubits;
}

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Entanglement Distance of directed graph states"};
  app.require_subcommand(1);

  GraphSourceFlags gen_source;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Generate a topology and write its graph JSON");
  gen_source.attach(*gen);
  gen->add_option("--out", gen_out, "Output path (default: standard output)");

  GraphSourceFlags ed_source;
  EdFlags ed_flags;
  auto* ed = app.add_subcommand("ed", "Entanglement Distance of one graph state");
  ed_source.attach(*ed);
  auto* theta_opt = ed->add_option("--theta", ed_flags.theta, "θ in radians (default π/2)");
  ed->add_option("--theta-pi-frac", ed_flags.theta_pi_frac, "θ as a multiple of π, e.g. 1/4");
  ed->add_option("--p", ed_flags.p, "Input population |α1|²");
  ed->add_option("--psi", ed_flags.psi, "ψ in radians");
  ed->add_option("--method", ed_flags.method)
      ->check(CLI::IsMember({"closed", "simulate", "both"}));
  ed->add_flag("--verbose", ed_flags.verbose, "Per-vertex contributions");
  ed->add_option("--max-qubits", ed_flags.max_qubits);

  GraphSourceFlags sweep_source;
  SweepFlags sweep_flags;
  auto* sweep = app.add_subcommand("sweep", "Evaluate a quantity on a θ (and p) grid as CSV");
  sweep_source.attach(*sweep);
  sweep->add_option("--quantity", sweep_flags.quantity)
      ->required()
      ->check(CLI::IsMember({"ed", "ed-general", "entropy", "hs2"}));
  sweep->add_option("--theta-steps", sweep_flags.theta_steps);
  sweep->add_option("--theta-lo", sweep_flags.theta_lo);
  sweep->add_option("--theta-hi", sweep_flags.theta_hi);
  sweep->add_option("--p-steps", sweep_flags.p_steps, "Adds a p axis");
  sweep->add_option("--p-lo", sweep_flags.p_lo);
  sweep->add_option("--p-hi", sweep_flags.p_hi);
  sweep->add_option("--p", sweep_flags.p, "p for 1-D sweeps");
  sweep->add_option("--psi", sweep_flags.psi);
  sweep->add_option("--method", sweep_flags.method)
      ->check(CLI::IsMember({"closed", "simulate"}));
  sweep->add_option("--out", sweep_flags.out_path, "CSV path (default: standard output)");
  sweep->add_option("--max-qubits", sweep_flags.max_qubits);

  GraphSourceFlags verify_source;
  VerifyFlags verify_flags;
  auto* verify = app.add_subcommand("verify", "Check closed forms against simulation");
  verify_source.attach(*verify);
  verify->add_option("--samples", verify_flags.samples);
  verify->add_option("--seed", verify_flags.seed);
  verify->add_option("--tol", verify_flags.tol);
  verify->add_option("--random-vertices", verify_flags.random_vertices,
                     "Largest random graph when no graph is given");
  verify->add_option("--max-qubits", verify_flags.max_qubits);

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    // Help requests exit 0; every other parse failure is a usage error.
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen) return cmd_gen(gen_source, gen_out, out, err);
    if (*ed) return cmd_ed(ed_source, ed_flags, theta_opt, out);
    if (*sweep) return cmd_sweep(sweep_source, sweep_flags, out);
    if (*verify) return cmd_verify(verify_source, verify_flags, out);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace graphent::cli

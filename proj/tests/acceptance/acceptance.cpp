// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Optional argv[1]: directory for the figure CSVs (default
// ./acceptance_figures).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numbers>
#include <sstream>
#include <type_traits>
#include <variant>
#include <string>
#include <vector>

#include "graphent/cli/app.hpp"
#include "graphent/density_matrix.hpp"
#include "graphent/entanglement.hpp"
#include "graphent/random.hpp"
#include "graphent/topology.hpp"
#include "graphent/topology_ed.hpp"
#include "graphent/two_qubit.hpp"
#include "support/oracle.hpp"

using namespace graphent;
using std::numbers::pi;

namespace {

namespace fs = std::filesystem;

constexpr double kCrossRoute = 1e-10;
constexpr double kFormula = 1e-12;

struct Outcome {
  bool passed = true;
  std::string detail;
};

double theta_grid(std::size_t i, std::size_t n) {
  return pi * static_cast<double>(i) / static_cast<double>(n - 1);
}

struct Instance {
  TopologySpec spec;
  DirectedGraph graph;
};

std::vector<Instance> criterion_graphs() {
  std::vector<TopologySpec> specs{
      YoungFibonacciSpec{2}, YoungFibonacciSpec{3}, YoungFibonacciSpec{4},
      BinaryTreeSpec{2},     BinaryTreeSpec{3},     BinaryTreeSpec{4},
      FfnnSpec{{1, 2, 2, 1}}, FfnnSpec{{3, 4, 4, 2}},
      BridgedCyclesSpec{{3, 3}}, BridgedCyclesSpec{{3, 4, 3}}};
  std::vector<Instance> out;
  for (auto& s : specs) out.push_back({s, generate(s)});
  return out;
}

std::string sci(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.3e", v);
  return buf;
}

// 1. simulation vs ed_closed_form on the topology set.
Outcome oracle_equivalence(const std::vector<Instance>& graphs) {
  const auto start = std::chrono::steady_clock::now();
  Rng rng(1);
  double worst = 0.0;
  std::size_t evaluations = 0;
  std::size_t largest = 0;
  for (const auto& inst : graphs) {
    largest = std::max(largest, inst.graph.num_vertices());
    const auto dist = degree_distribution(inst.graph);
    for (std::size_t i = 0; i < 33; ++i) {
      const double theta = theta_grid(i, 33);
      for (int k = 0; k < 5; ++k) {
        const InteractionParams params{rng.uniform(0.0, 2 * pi), theta};
        const double numeric = ed_numeric(build_graph_state(inst.graph, InitialQubit{}, params)).total;
        worst = std::max(worst, std::abs(numeric - ed_closed_form(dist, theta)));
        ++evaluations;
      }
    }
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.passed = worst <= kCrossRoute && seconds < 120.0;
  o.detail = "max_dev " + sci(worst) + " over " + std::to_string(evaluations) +
             " evaluations, largest " + std::to_string(largest) + " qubits, " +
             sci(seconds) + " s";
  return o;
}

// 2. general input states vs ed_closed_general.
Outcome general_equivalence(const std::vector<Instance>& graphs) {
  Rng rng(2);
  double worst = 0.0;
  std::size_t evaluations = 0;
  for (const auto& inst : graphs) {
    const auto dist = degree_distribution(inst.graph);
    for (int k = 0; k < 20; ++k) {
      const double p = rng.uniform();
      const double theta = rng.uniform(0.0, pi);
      const double psi = rng.uniform(0.0, 2 * pi);
      const InitialQubit q{p, rng.uniform(0.0, 2 * pi), rng.uniform(0.0, 2 * pi)};
      const double numeric = ed_numeric(build_graph_state(inst.graph, q, {psi, theta})).total;
      worst = std::max(worst, std::abs(numeric - ed_closed_general(dist, p, theta)));
      ++evaluations;
    }
  }
  return {worst <= kCrossRoute,
          "max_dev " + sci(worst) + " over " + std::to_string(evaluations) + " draws"};
}

// 3. single edge on a 41 x 41 (p, θ) grid.
Outcome two_qubit_analytics() {
  constexpr std::size_t n = 41;
  const auto edge = DirectedGraph::from_edge_list(2, {{0, 1}});
  const auto mixed = DensityMatrix::maximally_mixed(2);
  const std::vector<Vertex> keep{0};
  double ed_dev = 0.0, hs_dev = 0.0, eig_dev = 0.0, entropy_dev = 0.0;
  std::vector<std::pair<std::size_t, std::size_t>> hs_zeros;
  double best_entropy = -1.0, best_ed = -1.0;
  std::pair<std::size_t, std::size_t> entropy_at{}, ed_at{};

  for (std::size_t i = 0; i < n; ++i) {
    const double p = static_cast<double>(i) / static_cast<double>(n - 1);
    for (std::size_t j = 0; j < n; ++j) {
      const double theta = theta_grid(j, n);
      const auto state = build_graph_state(edge, InitialQubit{p}, {0.0, theta});
      const double ed = ed_numeric(state).total;
      ed_dev = std::max(ed_dev, std::abs(ed - two_qubit_ed_analytic(p, theta)));

      const auto rho = partial_trace(state, keep);
      const double d = hs_distance(rho, mixed);
      hs_dev = std::max(hs_dev, std::abs(d * d - hs_distance_sq_analytic(p, theta)));
      if (d * d < 1e-12) hs_zeros.emplace_back(i, j);

      const auto ev = hermitian_eigenvalues(rho);
      const auto an = reduced_eigenvalues_analytic(p, theta);
      eig_dev = std::max({eig_dev, std::abs(ev[0] - an[0]), std::abs(ev[1] - an[1])});

      const double s = von_neumann_entropy(rho);
      if (i == (n - 1) / 2) {
        entropy_dev = std::max(entropy_dev, std::abs(s - entropy_at_half_p(theta)));
      }
      if (s > best_entropy) {
        best_entropy = s;
        entropy_at = {i, j};
      }
      if (ed > best_ed) {
        best_ed = ed;
        ed_at = {i, j};
      }
    }
  }
  const std::pair<std::size_t, std::size_t> centre{20, 20};
  const bool unique_zero = hs_zeros.size() == 1 && hs_zeros[0] == centre;
  Outcome o;
  o.passed = ed_dev <= kCrossRoute && hs_dev <= kCrossRoute && eig_dev <= kCrossRoute &&
             entropy_dev <= kCrossRoute && unique_zero && entropy_at == centre && ed_at == centre;
  o.detail = "ed " + sci(ed_dev) + ", hs2 " + sci(hs_dev) + ", eigenvalues " + sci(eig_dev) +
             ", entropy(p=1/2) " + sci(entropy_dev) + "; hs2 zeros " +
             std::to_string(hs_zeros.size()) + (unique_zero ? " (only at p=1/2, θ=π/2)" : "") +
             "; entropy/ED argmax " + (entropy_at == centre && ed_at == centre ? "at" : "NOT at") +
             " (1/2, π/2)";
  return o;
}

// 4. per-topology formulas vs the generated graphs, and spot values against
// the dense-gate oracle.
Outcome topology_formulas(const std::vector<Instance>& graphs) {
  double worst = 0.0;
  for (const auto& inst : graphs) {
    const auto dist = degree_distribution(inst.graph);
    for (std::size_t i = 0; i < 33; ++i) {
      const double theta = theta_grid(i, 33);
      const double closed = ed_closed_form(dist, theta);
      const double formula = std::visit(
          [&](const auto& s) -> double {
            using T = std::decay_t<decltype(s)>;
            if constexpr (std::is_same_v<T, YoungFibonacciSpec>) {
              return ed_young_fibonacci(theta, s.layers);
            } else if constexpr (std::is_same_v<T, BinaryTreeSpec>) {
              return ed_binary_tree(theta, s.depth);
            } else if constexpr (std::is_same_v<T, FfnnSpec>) {
              return ed_ffnn(theta, s.layer_sizes);
            } else {
              std::size_t total = 0;
              for (std::size_t m : s.cycle_sizes) total += m;
              return ed_bridged_cycles(theta, total, s.cycle_sizes.size());
            }
          },
          inst.spec);
      worst = std::max(worst, std::abs(formula - closed));
    }
  }

  struct Spot {
    const char* name;
    double formula;
    DirectedGraph graph;
    double expected;
  };
  const std::vector<Spot> spots{
      {"yf N=3", ed_young_fibonacci(pi / 4, 3), gen_young_fibonacci(3), 17.0 / 24.0},
      {"btree N=2", ed_binary_tree(pi / 4, 2), gen_full_binary_tree(2), 7.0 / 12.0},
      {"ffnn (3,4,4,2)", ed_ffnn(pi / 4, {3, 4, 4, 2}), gen_ffnn({3, 4, 4, 2}), 31.0 / 32.0},
      {"bridged (3,3)", ed_bridged_cycles(pi / 4, 6, 2), gen_bridged_cycles({3, 3}), 19.0 / 24.0},
  };
  double spot_worst = 0.0;
  for (const auto& s : spots) {
    const double oracle = testing::ed_oracle(s.graph, InitialQubit{}, {0.0, pi / 4});
    spot_worst = std::max({spot_worst, std::abs(s.formula - s.expected),
                           std::abs(oracle - s.expected)});
  }
  return {worst <= kFormula && spot_worst <= kFormula,
          "formula vs degree table " + sci(worst) + "; spot values 17/24, 7/12, 31/32, 19/24 " +
              "vs oracle " + sci(spot_worst)};
}

// 5. N -> infinity.
Outcome asymptotics() {
  bool ok = true;
  double worst_scaled = 0.0;
  for (std::size_t n : {50u, 100u, 200u}) {
    for (std::size_t i = 0; i < 33; ++i) {
      const double theta = theta_grid(i, 33);
      const double dev = std::abs(ed_young_fibonacci(theta, n) - (1.0 - std::pow(std::cos(theta), 8)));
      worst_scaled = std::max(worst_scaled, dev * static_cast<double>(n));
      ok = ok && dev <= 10.0 / static_cast<double>(n);
    }
  }
  double btree_dev = 0.0;
  for (std::size_t i = 0; i < 33; ++i) {
    const double theta = theta_grid(i, 33);
    btree_dev = std::max(btree_dev, std::abs(ed_binary_tree(theta, 20) - ed_binary_tree_limit(theta)));
  }
  ok = ok && btree_dev <= 1e-5;
  return {ok, "yf max N*dev " + sci(worst_scaled) + " (bound 10); btree N=20 dev " + sci(btree_dev)};
}

// 6. ψ, orientation and relabeling on random graphs.
Outcome invariance() {
  Rng rng(6);
  double psi_dev = 0.0, flip_dev = 0.0, relabel_dev = 0.0;
  for (int trial = 0; trial < 200; ++trial) {
    const auto g = random_graph(1 + rng.below(10), 0.4, rng);
    const InitialQubit q{rng.uniform(), rng.uniform(0.0, 2 * pi), rng.uniform(0.0, 2 * pi)};
    const double theta = rng.uniform(0.0, pi);
    const auto base = ed_numeric(build_graph_state(g, q, {0.0, theta}));
    for (int k = 1; k < 8; ++k) {
      const double psi = 2 * pi * k / 8.0;
      psi_dev = std::max(psi_dev,
                         std::abs(ed_numeric(build_graph_state(g, q, {psi, theta})).total - base.total));
    }
    for (std::size_t e = 0; e < g.num_edges(); ++e) {
      const auto f = ed_numeric(build_graph_state(flip_edge(g, e), q, {0.0, theta}));
      flip_dev = std::max(flip_dev, std::abs(f.total - base.total));
      for (Vertex v = 0; v < g.num_vertices(); ++v)
        flip_dev = std::max(flip_dev, std::abs(f.per_vertex[v] - base.per_vertex[v]));
    }
    const auto perm = random_permutation(g.num_vertices(), rng);
    const auto r = ed_numeric(build_graph_state(permute_vertices(g, perm), q, {0.0, theta}));
    relabel_dev = std::max(relabel_dev, std::abs(r.total - base.total));
    for (Vertex v = 0; v < g.num_vertices(); ++v)
      relabel_dev = std::max(relabel_dev, std::abs(r.per_vertex[perm[v]] - base.per_vertex[v]));
  }
  return {psi_dev <= kCrossRoute && flip_dev <= kCrossRoute && relabel_dev <= kCrossRoute,
          "psi " + sci(psi_dev) + ", flip " + sci(flip_dev) + ", relabel " + sci(relabel_dev) +
              " on 200 graphs"};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::vector<std::vector<double>> read_csv(const fs::path& p) {
  std::vector<std::vector<double>> rows;
  std::istringstream in(slurp(p));
  std::string line;
  std::getline(in, line);  // header
  while (std::getline(in, line)) {
    std::vector<double> row;
    std::istringstream cs(line);
    std::string cell;
    while (std::getline(cs, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

int run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "graphent");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  if (code != 0) std::cerr << err.str();
  return code;
}

// 7. plot data via the CLI, each file produced twice.
Outcome figure_data(const fs::path& dir) {
  fs::create_directories(dir);
  struct Figure {
    std::string name;
    std::vector<std::string> args;
    std::function<double(double, double)> expected;  // (θ, p) -> value
  };
  const std::string hs_steps = "41";
  std::vector<Figure> figures{
      {"hs2_grid.csv",
       {"sweep", "--quantity", "hs2", "--theta-steps", hs_steps, "--p-steps", hs_steps, "--method",
        "simulate"},
       [](double t, double p) { return hs_distance_sq_analytic(p, t); }},
      {"entropy_grid.csv",
       {"sweep", "--quantity", "entropy", "--theta-steps", hs_steps, "--p-steps", hs_steps,
        "--method", "simulate"},
       nullptr},
  };
  for (int n : {3, 5, 10}) {
    figures.push_back({"ed_yf_N" + std::to_string(n) + ".csv",
                       {"sweep", "--quantity", "ed", "--topology", "yf", "--layers",
                        std::to_string(n), "--theta-steps", "101"},
                       [n](double t, double) { return ed_young_fibonacci(t, n); }});
  }
  figures.push_back({"ed_yf_limit.csv",
                     {"sweep", "--quantity", "ed", "--topology", "yf", "--layers", "inf",
                      "--theta-steps", "101"},
                     [](double t, double) { return ed_young_fibonacci_limit(t); }});
  for (int n : {2, 4}) {
    figures.push_back({"ed_btree_N" + std::to_string(n) + ".csv",
                       {"sweep", "--quantity", "ed", "--topology", "btree", "--depth",
                        std::to_string(n), "--theta-steps", "101"},
                       [n](double t, double) { return ed_binary_tree(t, n); }});
  }
  figures.push_back({"ed_btree_limit.csv",
                     {"sweep", "--quantity", "ed", "--topology", "btree", "--depth", "inf",
                      "--theta-steps", "101"},
                     [](double t, double) { return ed_binary_tree_limit(t); }});

  bool ok = true;
  double worst = 0.0;
  for (const auto& f : figures) {
    const fs::path first = dir / f.name;
    const fs::path second = dir / (f.name + ".repeat");
    auto a1 = f.args;
    a1.insert(a1.end(), {"--out", first.string()});
    auto a2 = f.args;
    a2.insert(a2.end(), {"--out", second.string()});
    if (run_cli(a1) != 0 || run_cli(a2) != 0) {
      ok = false;
      continue;
    }
    ok = ok && slurp(first) == slurp(second);
    fs::remove(second);
    for (const auto& row : read_csv(first)) {
      const double theta = row[0];
      const double p = row.size() == 3 ? row[1] : 0.5;
      if (f.expected) worst = std::max(worst, std::abs(row.back() - f.expected(theta, p)));
    }
  }

  // Grid shape: zero distance and maximal entropy at (1/2, π/2).
  const auto hs = read_csv(dir / "hs2_grid.csv");
  const auto ent = read_csv(dir / "entropy_grid.csv");
  ok = ok && hs.size() == 41 * 41 && ent.size() == 41 * 41;
  if (ok) {
    const auto hs_min = std::min_element(hs.begin(), hs.end(),
                                         [](const auto& a, const auto& b) { return a[2] < b[2]; });
    const auto ent_max = std::max_element(
        ent.begin(), ent.end(), [](const auto& a, const auto& b) { return a[2] < b[2]; });
    ok = ok && std::abs((*hs_min)[1] - 0.5) < 1e-15 && std::abs((*hs_min)[0] - pi / 2) < 1e-15 &&
         std::abs((*ent_max)[1] - 0.5) < 1e-15 && std::abs((*ent_max)[0] - pi / 2) < 1e-15 &&
         std::abs((*ent_max)[2] - std::log(2.0)) < 1e-12;
  }

  // Output-layer exponent of the feed-forward equation.
  const std::vector<std::size_t> sizes{3, 4, 4, 2};
  const auto net = gen_ffnn(sizes);
  double table_dev = 0.0, variant_dev = 0.0;
  for (std::size_t i = 0; i < 33; ++i) {
    const double theta = theta_grid(i, 33);
    const double sim = ed_numeric(build_graph_state(net, InitialQubit{}, {0.0, theta})).total;
    table_dev = std::max(table_dev, std::abs(ed_ffnn(theta, sizes) - sim));
    variant_dev = std::max(variant_dev, std::abs(ed_ffnn_output_exponent_variant(theta, sizes) - sim));
  }
  ok = ok && worst <= kCrossRoute && table_dev <= kCrossRoute && variant_dev > 1e-6;
  return {ok, std::to_string(figures.size()) + " CSVs in " + dir.string() +
                  ", reproducible, max curve dev " + sci(worst) +
                  "; ffnn (3,4,4,2) exponent 2*M_{N-1} dev " + sci(table_dev) +
                  ", exponent 2*M_N dev " + sci(variant_dev)};
}

// 8. the installed executable, invoked twice per command.
Outcome determinism(const fs::path& dir) {
  const std::string exe = GRAPHENT_CLI_PATH;
  fs::create_directories(dir);
  const std::vector<std::string> commands{
      "gen --topology ffnn --layer-sizes 3,4,4,2",
      "ed --topology yf --layers 4 --theta-pi-frac 1/3 --psi 0.7 --method both --verbose",
      "sweep --quantity ed-general --topology bridged --cycles 3,4,3 --theta-steps 17 --p-steps 9",
      "sweep --quantity entropy --theta-steps 25 --p-steps 25 --method simulate",
      "verify --samples 20 --seed 7",
  };
  bool ok = true;
  for (std::size_t i = 0; i < commands.size(); ++i) {
    std::string outputs[2];
    for (int k = 0; k < 2; ++k) {
      const fs::path file = dir / ("run" + std::to_string(i) + "_" + std::to_string(k) + ".txt");
      const std::string cmd = "\"" + exe + "\" " + commands[i] + " > \"" + file.string() + "\" 2>&1";
      if (std::system(cmd.c_str()) != 0) ok = false;
      outputs[k] = slurp(file);
      fs::remove(file);
    }
    ok = ok && !outputs[0].empty() && outputs[0] == outputs[1];
  }
  return {ok, std::to_string(commands.size()) + " commands, byte-identical repeat output"};
}

}  // namespace

int main(int argc, char** argv) {
  const fs::path figures = argc > 1 ? fs::path(argv[1]) : fs::path("acceptance_figures");
  const auto graphs = criterion_graphs();

  struct Criterion {
    const char* name;
    std::function<Outcome()> check;
  };
  const std::vector<Criterion> criteria{
      {"oracle equivalence", [&] { return oracle_equivalence(graphs); }},
      {"general-p equivalence", [&] { return general_equivalence(graphs); }},
      {"two-qubit analytics", two_qubit_analytics},
      {"topology formulas", [&] { return topology_formulas(graphs); }},
      {"asymptotics", asymptotics},
      {"invariance suite", invariance},
      {"figure data", [&] { return figure_data(figures); }},
      {"determinism", [&] { return determinism(figures / "determinism"); }},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << "  " << (i + 1) << ". " << criteria[i].name
              << ": " << o.detail << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}

// apsp: generate graphs, solve them, verify solvers and run benchmarks.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "apsp/apsp.hpp"

namespace {

using namespace apsp;

Graph load_graph(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::invalid_parameter, "cannot open '" + path + "'");
  return read_graph(in);
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(Errc::invalid_parameter, "cannot write '" + path + "'");
  out << text;
}

struct Solved {
  ApspSolution solution;
  bool has_paths = true;
};

Solved solve_with(const std::string& algo, const Graph& g, const CostMatrix& h, std::size_t threshold,
                  const KernelConfig& cfg) {
  if (algo == "fw-classic") return {fw_classic(h, cfg)};
  if (algo == "fw-squaring") return {fw_squaring(h, cfg)};
  if (algo == "rkleene") return {rkleene(h, threshold, cfg)};
  if (algo == "fw-broadcast") return {detail::fw_broadcast(h, kBroadcastCap)};
  if (algo == "oracle") {
    ApspSolution s;
    auto r = sssp_all_pairs_counted(g, cfg.resolved_workers());
    s.distances = std::move(r.distances);
    s.relaxation_count = r.relaxation_count;
    return {std::move(s), false};
  }
  throw Error(Errc::invalid_parameter, "unknown algorithm '" + algo + "'");
}

std::string format_path(const std::optional<Path>& p) {
  if (!p) return "unreachable\n";
  std::string line;
  for (std::size_t v : p->vertices) line += std::to_string(v) + ' ';
  return line + "cost " + p->total_cost.to_string() + '\n';
}

RhoRange parse_rho_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    const double v = parse_rho(text);
    return {v, v};
  }
  return {parse_rho(text.substr(0, colon)), parse_rho(text.substr(colon + 1))};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Dense all-pairs shortest paths on a min-plus kernel"};
  app.require_subcommand(1);

  std::size_t workers = 0;
  app.add_option("--workers", workers, "Kernel worker count (overrides APSP_WORKERS)");

  // gen
  auto* gen = app.add_subcommand("gen", "Write a random graph in graph text format");
  GenParams gp;
  std::string rho_text = "0.5";
  std::string gen_out;
  gen->add_option("--nodes", gp.v, "Vertex count")->required();
  gen->add_option("--rho", rho_text, "Density scale: fraction in [0,1] or percent like 30%")->required();
  gen->add_option("--alpha", gp.alpha, "Maximum edge weight")->required();
  gen->add_option("--seed", gp.seed, "Random seed")->required();
  gen->add_option("--out", gen_out, "Output file (default stdout)");

  // solve
  auto* solve = app.add_subcommand("solve", "Solve APSP for a graph file and write the distance matrix");
  std::string algo;
  std::string solve_in, solve_out;
  std::vector<std::size_t> query;
  std::size_t threshold = kDefaultBaseThreshold;
  solve->add_option("--algo", algo, "Solver")
      ->required()
      ->check(CLI::IsMember({"fw-classic", "fw-squaring", "rkleene", "fw-broadcast", "oracle"}));
  solve->add_option("--in", solve_in, "Graph file")->required();
  solve->add_option("--out", solve_out, "Matrix output file (default stdout)");
  solve->add_option("--paths", query, "Print a shortest path: SRC DST")->expected(2);
  solve->add_option("--base-threshold", threshold, "R-Kleene base-case block size");

  // bench
  auto* bench = app.add_subcommand("bench", "Benchmark solvers over a random graph population");
  BenchConfig bc;
  std::string preset = "desk";
  std::string bench_rho;
  std::string algos = "all";
  std::string csv_path, plot_path, metric_name = "wall_time_ms";
  bool no_verify = false;
  bench->add_option("--preset", preset, "Starting configuration")->check(CLI::IsMember({"desk", "paper"}));
  auto* o_count = bench->add_option("--count", bc.count, "Number of graphs");
  auto* o_min = bench->add_option("--min-nodes", bc.min_nodes, "Smallest vertex count");
  auto* o_max = bench->add_option("--max-nodes", bc.max_nodes, "Largest vertex count");
  auto* o_alpha = bench->add_option("--alpha", bc.alpha, "Maximum edge weight");
  auto* o_seed = bench->add_option("--seed", bc.seed, "Master seed");
  auto* o_reps = bench->add_option("--reps", bc.reps, "Timed repetitions (minimum is kept)");
  auto* o_thr = bench->add_option("--base-threshold", bc.base_threshold, "R-Kleene base-case block size");
  bench->add_option("--rho", bench_rho, "Density scale R or uniform range LO:HI (fractions or percent)");
  bench->add_option("--algos", algos, "Comma-separated solver tags, or 'all'");
  bench->add_option("--csv", csv_path, "CSV output file")->required();
  bench->add_option("--plot", plot_path, "SVG scatter plot output file");
  bench->add_option("--metric", metric_name, "Plot metric: wall_time_ms | relaxation_count");
  bench->add_flag("--no-verify", no_verify, "Skip cross-checking against the reference sweep");

  // verify
  auto* verify = app.add_subcommand("verify", "Run every solver and the reference on a graph file");
  std::string verify_in;
  verify->add_option("--in", verify_in, "Graph file")->required();

  CLI11_PARSE(app, argc, argv);

  KernelConfig cfg;
  cfg.workers = workers;

  try {
    if (*gen) {
      gp.rho = parse_rho(rho_text);
      write_text(gen_out, format_graph(generate(gp)));
      return 0;
    }

    if (*solve) {
      const Graph g = load_graph(solve_in);
      const CostMatrix h = cost_matrix_from_graph(g);
      const Solved s = solve_with(algo, g, h, threshold, cfg);
      write_text(solve_out, format_matrix(s.solution.distances));
      if (!query.empty()) {
        if (!s.has_paths) throw Error(Errc::invalid_parameter, "path queries are not available for --algo oracle");
        const std::size_t src = query[0], dst = query[1];
        const auto p = s.solution.pred ? path_from_pred(*s.solution.pred, s.solution.distances, src, dst)
                                       : path_from_via(*s.solution.via, s.solution.distances, g, src, dst);
        std::cout << format_path(p);
      }
      return 0;
    }

    if (*bench) {
      BenchConfig base = preset == "paper" ? BenchConfig::paper_scale() : BenchConfig::desk();
      if (o_count->count()) base.count = bc.count;
      if (o_min->count()) base.min_nodes = bc.min_nodes;
      if (o_max->count()) base.max_nodes = bc.max_nodes;
      if (o_alpha->count()) base.alpha = bc.alpha;
      if (o_seed->count()) base.seed = bc.seed;
      if (o_reps->count()) base.reps = bc.reps;
      if (o_thr->count()) base.base_threshold = bc.base_threshold;
      if (!bench_rho.empty()) base.rho = parse_rho_range(bench_rho);
      base.algorithms = parse_bench_algorithms(algos);
      base.verify = !no_verify;
      base.kernel = cfg;

      const auto records = run_benchmark(base);
      std::ostringstream echo;
      echo << "count=" << base.count << " nodes=" << base.min_nodes << ":" << base.max_nodes << " rho=" << base.rho.lo
           << ":" << base.rho.hi << " alpha=" << base.alpha << " seed=" << base.seed << " algos=" << algos
           << " reps=" << base.reps << " base_threshold=" << base.base_threshold
           << " workers=" << cfg.resolved_workers() << " verify=" << (base.verify ? "on" : "off");
      write_text(csv_path, emit_csv(records, {echo.str()}));
      if (!plot_path.empty()) write_text(plot_path, emit_scatter_plot(records, parse_plot_metric(metric_name)));

      if (!all_verified(records)) {
        for (const auto& r : records)
          if (r.status == RecordStatus::verification_failed)
            std::cerr << "verification failed: graph " << r.graph_id << " " << to_string(r.algorithm) << "\n";
        return 1;
      }
      std::cerr << records.size() << " records written to " << csv_path << "\n";
      return 0;
    }

    if (*verify) {
      const Graph g = load_graph(verify_in);
      const CostMatrix h = cost_matrix_from_graph(g);
      const CostMatrix expected = sssp_all_pairs(g);
      bool ok = true;
      auto check = [&](std::string_view name, const CostMatrix& d) {
        const bool same = d == expected;
        ok = ok && same;
        std::cout << name << ": " << (same ? "PASS" : "FAIL") << "\n";
      };
      check("fw_classic", fw_classic(h, cfg).distances);
      check("fw_squaring", fw_squaring(h, cfg).distances);
      check("rkleene", rkleene(h, kDefaultBaseThreshold, cfg).distances);
      check("rkleene(threshold=1)", rkleene(h, 1, cfg).distances);
      if (g.vertex_count() <= kBroadcastCap) check("fw_broadcast", detail::fw_broadcast(h, kBroadcastCap).distances);
      std::cout << (ok ? "PASS" : "FAIL") << "\n";
      return ok ? 0 : 1;
    }
  } catch (const apsp::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}

#pragma once

// Benchmark harness: generate a seeded graph population, run the selected
// solvers on each graph, verify them against the reference sweep and record
// timing plus instrumentation. Records come back sorted by edge count.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/error.hpp"
#include "apsp/graph.hpp"
#include "apsp/graphgen.hpp"
#include "apsp/minplus.hpp"
#include "apsp/oracle.hpp"
#include "apsp/parallel.hpp"
#include "apsp/solvers.hpp"

namespace apsp {

enum class BenchAlgorithm { fw_classic, fw_squaring, rkleene, fw_broadcast, oracle_sssp };

inline constexpr BenchAlgorithm kAllBenchAlgorithms[] = {BenchAlgorithm::fw_classic, BenchAlgorithm::fw_squaring,
                                                         BenchAlgorithm::rkleene, BenchAlgorithm::fw_broadcast,
                                                         BenchAlgorithm::oracle_sssp};

constexpr std::string_view to_string(BenchAlgorithm a) noexcept {
  switch (a) {
    case BenchAlgorithm::fw_classic: return "fw_classic";
    case BenchAlgorithm::fw_squaring: return "fw_squaring";
    case BenchAlgorithm::rkleene: return "rkleene";
    case BenchAlgorithm::fw_broadcast: return "fw_broadcast";
    case BenchAlgorithm::oracle_sssp: return "oracle_sssp";
  }
  return "unknown";
}

/// Accepts the tag with either '_' or '-' separators ("fw-classic").
inline BenchAlgorithm parse_bench_algorithm(std::string_view name) {
  std::string norm(name);
  std::replace(norm.begin(), norm.end(), '-', '_');
  for (BenchAlgorithm a : kAllBenchAlgorithms)
    if (to_string(a) == norm) return a;
  throw Error(Errc::invalid_parameter, "unknown algorithm '" + std::string(name) + "'");
}

/// Comma-separated tags; "all" selects the three min-plus solvers.
inline std::vector<BenchAlgorithm> parse_bench_algorithms(std::string_view list) {
  if (list == "all") return {BenchAlgorithm::fw_classic, BenchAlgorithm::fw_squaring, BenchAlgorithm::rkleene};
  std::vector<BenchAlgorithm> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    const auto comma = list.find(',', start);
    const auto item = list.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
    const BenchAlgorithm a = parse_bench_algorithm(item);
    if (std::find(out.begin(), out.end(), a) == out.end()) out.push_back(a);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

struct RhoRange {
  double lo = 0.0;
  double hi = 1.0;
};

struct BenchConfig {
  std::size_t count = 100;
  std::size_t min_nodes = 4;
  std::size_t max_nodes = 512;
  RhoRange rho{0.0, 1.0};
  std::int64_t alpha = 100;
  std::uint64_t seed = 1;
  std::vector<BenchAlgorithm> algorithms{BenchAlgorithm::fw_classic, BenchAlgorithm::fw_squaring,
                                         BenchAlgorithm::rkleene};
  std::size_t reps = 3;
  std::size_t base_threshold = kDefaultBaseThreshold;
  std::size_t broadcast_cap = kBroadcastCap;
  bool verify = true;
  KernelConfig kernel{};

  /// Minutes on a laptop.
  static BenchConfig desk() { return {}; }

  /// The original population: 1000 graphs, V in [4, 1000], rho uniform.
  static BenchConfig paper_scale() {
    BenchConfig c;
    c.count = 1000;
    c.max_nodes = 1000;
    return c;
  }
};

inline void validate(const BenchConfig& c) {
  if (c.min_nodes < 1 || c.min_nodes > c.max_nodes) throw Error(Errc::invalid_parameter, "need 1 <= min_nodes <= max_nodes");
  if (!(c.rho.lo >= 0.0 && c.rho.lo <= c.rho.hi && c.rho.hi <= 1.0)) {
    throw Error(Errc::invalid_parameter, "rho range must satisfy 0 <= lo <= hi <= 1");
  }
  if (c.alpha < 1) throw Error(Errc::invalid_parameter, "alpha must be >= 1");
  if (c.reps < 1) throw Error(Errc::invalid_parameter, "reps must be >= 1");
  if (c.base_threshold < 1) throw Error(Errc::invalid_parameter, "base_threshold must be >= 1");
}

enum class RecordStatus { ok, verification_failed, skipped_capacity };

struct BenchRecord {
  std::size_t graph_id = 0;
  std::size_t n_nodes = 0;
  std::size_t n_edges = 0;
  double density = 0.0;
  BenchAlgorithm algorithm = BenchAlgorithm::fw_classic;
  double wall_time_ms = 0.0;
  std::size_t iterations = 0;
  std::uint64_t relaxation_count = 0;
  std::uint64_t seed = 0;
  RecordStatus status = RecordStatus::ok;
};

/// One member of the population, drawn from the master seed.
struct GraphSpec {
  std::size_t graph_id = 0;
  GenParams params;
};

inline std::vector<GraphSpec> population(const BenchConfig& c) {
  validate(c);
  std::mt19937_64 master(c.seed);
  std::vector<GraphSpec> specs;
  specs.reserve(c.count);
  for (std::size_t id = 0; id < c.count; ++id) {
    GraphSpec s;
    s.graph_id = id;
    s.params.v = c.min_nodes + detail::uniform_below(master, c.max_nodes - c.min_nodes + 1);
    s.params.rho = std::clamp(c.rho.lo + (c.rho.hi - c.rho.lo) * detail::uniform01(master), 0.0, 1.0);
    s.params.alpha = c.alpha;
    s.params.seed = master();
    specs.push_back(s);
  }
  return specs;
}

namespace detail {

// Squaring driven by the broadcast reference instead of the tiled kernel.
inline ApspSolution fw_broadcast(const CostMatrix& h, std::size_t cap) {
  validate_solver_input(h);
  const std::size_t n = h.rows();
  ApspSolution out;
  out.algorithm = Algorithm::fw_squaring;
  out.distances = h;
  ViaMatrix via(n, n);
  for (std::size_t round = 0; round < n; ++round) {
    MinPlusResult step = minplus_broadcast_reference(out.distances, cap);
    ++out.iterations;
    out.relaxation_count += step.relaxation_count;
    if (matrices_equal(step.distances, out.distances)) break;
    fold_improvements(step.distances, step.via, whole(out.distances), whole(via));
  }
  out.via = std::move(via);
  return out;
}

struct RunOutcome {
  CostMatrix distances;
  std::size_t iterations = 0;
  std::uint64_t relaxation_count = 0;
};

inline RunOutcome run_once(BenchAlgorithm a, const Graph& g, const CostMatrix& h, const BenchConfig& c) {
  switch (a) {
    case BenchAlgorithm::fw_classic: {
      auto s = fw_classic(h, c.kernel);
      return {std::move(s.distances), 0, s.relaxation_count};
    }
    case BenchAlgorithm::fw_squaring: {
      auto s = fw_squaring(h, c.kernel);
      return {std::move(s.distances), s.iterations, s.relaxation_count};
    }
    case BenchAlgorithm::rkleene: {
      auto s = rkleene(h, c.base_threshold, c.kernel);
      return {std::move(s.distances), 0, s.relaxation_count};
    }
    case BenchAlgorithm::fw_broadcast: {
      auto s = fw_broadcast(h, c.broadcast_cap);
      return {std::move(s.distances), s.iterations, s.relaxation_count};
    }
    case BenchAlgorithm::oracle_sssp: {
      auto s = sssp_all_pairs_counted(g, c.kernel.resolved_workers());
      return {std::move(s.distances), 0, s.relaxation_count};
    }
  }
  throw Error(Errc::invalid_parameter, "unknown algorithm");
}

}  // namespace detail

/// Run the configured population. Wall time is the minimum over `reps`
/// calls of the solver alone; generation and verification are not timed.
inline std::vector<BenchRecord> run_benchmark(const BenchConfig& c) {
  using clock = std::chrono::steady_clock;
  std::vector<BenchRecord> records;
  for (const GraphSpec& spec : population(c)) {
    const Graph g = generate(spec.params);
    const CostMatrix h = cost_matrix_from_graph(g);
    std::optional<CostMatrix> expected;
    if (c.verify) expected = sssp_all_pairs_counted(g, c.kernel.resolved_workers()).distances;

    for (BenchAlgorithm a : c.algorithms) {
      BenchRecord rec;
      rec.graph_id = spec.graph_id;
      rec.n_nodes = g.vertex_count();
      rec.n_edges = g.edge_count();
      rec.density = density(g);
      rec.algorithm = a;
      rec.seed = spec.params.seed;
      if (a == BenchAlgorithm::fw_broadcast && rec.n_nodes > c.broadcast_cap) {
        rec.status = RecordStatus::skipped_capacity;
        records.push_back(rec);
        continue;
      }
      double best_ms = 0.0;
      for (std::size_t r = 0; r < c.reps; ++r) {
        const auto t0 = clock::now();
        detail::RunOutcome run = detail::run_once(a, g, h, c);
        const std::chrono::duration<double, std::milli> dt = clock::now() - t0;
        if (r == 0 || dt.count() < best_ms) best_ms = dt.count();
        if (r == 0) {
          rec.iterations = run.iterations;
          rec.relaxation_count = run.relaxation_count;
          if (expected && !(run.distances == *expected)) rec.status = RecordStatus::verification_failed;
        }
      }
      rec.wall_time_ms = std::max(best_ms, 1e-6);
      records.push_back(rec);
    }
  }
  std::stable_sort(records.begin(), records.end(),
                   [](const BenchRecord& a, const BenchRecord& b) { return a.n_edges < b.n_edges; });
  return records;
}

inline bool all_verified(const std::vector<BenchRecord>& records) {
  return std::none_of(records.begin(), records.end(),
                      [](const BenchRecord& r) { return r.status == RecordStatus::verification_failed; });
}

inline constexpr std::string_view kCsvHeader =
    "graph_id,n_nodes,n_edges,density,algorithm,wall_time_ms,iterations,relaxation_count,seed";

/// CSV document. Optional preamble lines are written first, each prefixed
/// with "# ". Skipped records have no timing and are listed as comments.
inline std::string emit_csv(const std::vector<BenchRecord>& records, const std::vector<std::string>& preamble = {}) {
  std::string out;
  for (const auto& line : preamble) out += "# " + line + '\n';
  for (const auto& r : records) {
    if (r.status != RecordStatus::skipped_capacity) continue;
    out += "# skipped graph_id=" + std::to_string(r.graph_id) + " algorithm=" + std::string(to_string(r.algorithm)) +
           " n_nodes=" + std::to_string(r.n_nodes) + " reason=capacity\n";
  }
  out += kCsvHeader;
  out += '\n';
  char buf[64];
  for (const auto& r : records) {
    if (r.status == RecordStatus::skipped_capacity) continue;
    out += std::to_string(r.graph_id) + ',' + std::to_string(r.n_nodes) + ',' + std::to_string(r.n_edges) + ',';
    std::snprintf(buf, sizeof buf, "%.6f", r.density);
    out += buf;
    out += ',';
    out += to_string(r.algorithm);
    out += ',';
    std::snprintf(buf, sizeof buf, "%.3f", r.wall_time_ms);
    out += buf;
    out += ',' + std::to_string(r.iterations) + ',' + std::to_string(r.relaxation_count) + ',' +
           std::to_string(r.seed) + '\n';
  }
  return out;
}

}  // namespace apsp

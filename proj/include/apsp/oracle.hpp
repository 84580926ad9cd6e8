#pragma once

// Reference APSP for verification. Built only on Graph and CostMatrix:
// nothing here may depend on the min-plus kernel or the solvers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <queue>
#include <utility>
#include <vector>

#include "apsp/error.hpp"
#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

struct OracleResult {
  CostMatrix distances;
  std::uint64_t relaxation_count = 0;  // edge scans over all sources
};

inline constexpr std::size_t kExhaustiveCap = 8;

/// Dijkstra from every source with a binary-heap priority queue.
inline OracleResult sssp_all_pairs_counted(const Graph& g, std::size_t workers = 1) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(n);
  for (const Edge& e : g.edges()) adj[e.source].emplace_back(e.target, e.weight);

  constexpr std::int64_t unreached = std::numeric_limits<std::int64_t>::max();
  OracleResult out{CostMatrix(n, n), 0};
  std::vector<std::uint64_t> scans(n, 0);

  auto sweep = [&](std::size_t s) {
    std::vector<std::int64_t> dist(n, unreached);
    using Item = std::pair<std::int64_t, std::size_t>;
    std::priority_queue<Item, std::vector<Item>, std::greater<>> pq;
    dist[s] = 0;
    pq.emplace(0, s);
    while (!pq.empty()) {
      const auto [d, u] = pq.top();
      pq.pop();
      if (d != dist[u]) continue;
      for (const auto& [v, w] : adj[u]) {
        ++scans[s];
        if (d + w < dist[v]) {
          dist[v] = d + w;
          pq.emplace(dist[v], v);
        }
      }
    }
    for (std::size_t t = 0; t < n; ++t)
      if (dist[t] != unreached) out.distances(s, t) = ExtCost{dist[t]};
  };

  const auto ns = static_cast<std::int64_t>(n);
  const int nt = static_cast<int>(std::max<std::size_t>(workers, 1));
#pragma omp parallel for schedule(dynamic, 1) num_threads(nt) if (nt > 1)
  for (std::int64_t s = 0; s < ns; ++s) sweep(static_cast<std::size_t>(s));

  for (std::uint64_t c : scans) out.relaxation_count += c;
  return out;
}

inline CostMatrix sssp_all_pairs(const Graph& g) { return sssp_all_pairs_counted(g).distances; }

/// Minimum over every simple path, by depth-first enumeration. n <= 8.
inline CostMatrix exhaustive_apsp(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kExhaustiveCap) {
    throw Error(Errc::capacity, "exhaustive enumeration limited to n <= " + std::to_string(kExhaustiveCap));
  }
  std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> adj(n);
  for (const Edge& e : g.edges()) adj[e.source].emplace_back(e.target, e.weight);

  CostMatrix best(n, n);
  std::vector<bool> on_path(n, false);
  std::function<void(std::size_t, std::size_t, std::int64_t)> walk = [&](std::size_t s, std::size_t u,
                                                                         std::int64_t cost) {
    if (ExtCost{cost} < best(s, u)) best(s, u) = ExtCost{cost};
    on_path[u] = true;
    for (const auto& [v, w] : adj[u])
      if (!on_path[v]) walk(s, v, cost + w);
    on_path[u] = false;
  };
  for (std::size_t s = 0; s < n; ++s) walk(s, s, 0);
  return best;
}

}  // namespace apsp

#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "apsp/error.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

struct Edge {
  std::size_t source = 0;
  std::size_t target = 0;
  std::int64_t weight = 1;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Weighted directed graph: vertex count plus an edge list in caller order.
/// Self-loops are implicit with cost 0 and never stored. Construction
/// validates indices, weights (>= 1) and uniqueness of (source, target).
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    for (const Edge& e : edges_) {
      if (e.source >= n_ || e.target >= n_) {
        throw Error(Errc::malformed_graph, "edge (" + std::to_string(e.source) + ", " +
                                               std::to_string(e.target) + ") out of range for n=" +
                                               std::to_string(n_));
      }
      if (e.source == e.target) throw Error(Errc::malformed_graph, "stored self-loop at " + std::to_string(e.source));
      if (e.weight < 1) throw Error(Errc::malformed_graph, "non-positive weight " + std::to_string(e.weight));
    }
    order_.resize(edges_.size());
    for (std::size_t i = 0; i < order_.size(); ++i) order_[i] = static_cast<std::uint32_t>(i);
    std::sort(order_.begin(), order_.end(), [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    for (std::size_t i = 1; i < order_.size(); ++i) {
      if (key(order_[i]) == key(order_[i - 1])) {
        const Edge& e = edges_[order_[i]];
        throw Error(Errc::malformed_graph,
                    "duplicate edge (" + std::to_string(e.source) + ", " + std::to_string(e.target) + ")");
      }
    }
  }

  std::size_t vertex_count() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  /// Weight of the stored edge u -> v, if any. O(log m).
  std::optional<std::int64_t> edge_weight(std::size_t u, std::size_t v) const noexcept {
    const std::pair<std::size_t, std::size_t> want{u, v};
    auto it = std::lower_bound(order_.begin(), order_.end(), want,
                               [&](std::uint32_t idx, const auto& w) { return key(idx) < w; });
    if (it == order_.end() || key(*it) != want) return std::nullopt;
    return edges_[*it].weight;
  }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  std::pair<std::size_t, std::size_t> key(std::uint32_t idx) const noexcept {
    return {edges_[idx].source, edges_[idx].target};
  }

  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::uint32_t> order_;  // edge indices sorted by (source, target)
};

/// Dense cost matrix of a graph: zero diagonal, edge weights, Infinity elsewhere.
inline CostMatrix cost_matrix_from_graph(const Graph& g) {
  const std::size_t n = g.vertex_count();
  CostMatrix h(n, n);
  for (std::size_t i = 0; i < n; ++i) h(i, i) = ExtCost{0};
  for (const Edge& e : g.edges()) h(e.source, e.target) = ExtCost{e.weight};
  return h;
}

}  // namespace apsp

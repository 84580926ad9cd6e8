#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "apsp/error.hpp"
#include "apsp/ext_cost.hpp"
#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

struct Path {
  std::vector<std::size_t> vertices;  // source first, target last
  ExtCost total_cost{0};

  std::size_t hops() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }

  friend bool operator==(const Path&, const Path&) = default;
};

namespace detail {

inline void check_query(std::size_t n, std::size_t rows, std::size_t cols, std::size_t source, std::size_t target) {
  if (rows != n || cols != n) throw Error(Errc::dimension_mismatch, "index matrix does not match distances");
  if (source >= n || target >= n) {
    throw Error(Errc::invalid_parameter,
                "query (" + std::to_string(source) + ", " + std::to_string(target) + ") out of range");
  }
}

}  // namespace detail

/// Walk pred backwards from target: g = pred[s][t], then pred[s][g], ...
/// until source. Returns nullopt iff the target is unreachable.
inline std::optional<Path> path_from_pred(const PredMatrix& pred, const CostMatrix& distances, std::size_t source,
                                          std::size_t target) {
  const std::size_t n = distances.rows();
  if (!distances.is_square()) throw Error(Errc::dimension_mismatch, "distance matrix is not square");
  detail::check_query(n, pred.rows(), pred.cols(), source, target);
  if (distances(source, target).is_infinite()) return std::nullopt;

  Path path;
  path.total_cost = distances(source, target);
  path.vertices.push_back(target);
  std::size_t cur = target;
  while (cur != source) {
    const auto g = pred(source, cur);
    if (!g || *g >= n) {
      throw Error(Errc::corrupt_predecessor,
                  "no predecessor for " + std::to_string(cur) + " on reachable pair (" + std::to_string(source) +
                      ", " + std::to_string(target) + ")");
    }
    if (path.vertices.size() >= n) throw Error(Errc::corrupt_predecessor, "backtracking exceeded n steps");
    cur = *g;
    path.vertices.push_back(cur);
  }
  std::reverse(path.vertices.begin(), path.vertices.end());
  return path;
}

/// Expand (i, j) into (i, via[i][j]) + (via[i][j], j) until every segment
/// has an empty via, which must then be a stored edge. The edge weights
/// along the result must add up to the reported distance.
inline std::optional<Path> path_from_via(const ViaMatrix& via, const CostMatrix& distances, const Graph& graph,
                                         std::size_t source, std::size_t target) {
  const std::size_t n = distances.rows();
  if (!distances.is_square()) throw Error(Errc::dimension_mismatch, "distance matrix is not square");
  if (graph.vertex_count() != n) throw Error(Errc::dimension_mismatch, "graph does not match distances");
  detail::check_query(n, via.rows(), via.cols(), source, target);
  if (distances(source, target).is_infinite()) return std::nullopt;

  Path path;
  path.vertices.push_back(source);
  std::int64_t sum = 0;

  struct Segment {
    std::size_t from, to, depth;
  };
  // Right segment pushed first so the left one is expanded first.
  std::vector<Segment> stack{{source, target, 0}};
  while (!stack.empty()) {
    const Segment s = stack.back();
    stack.pop_back();
    if (s.from == s.to) continue;
    if (s.depth > n) throw Error(Errc::corrupt_via, "expansion deeper than n");
    const auto k = via(s.from, s.to);
    if (!k) {
      const auto w = graph.edge_weight(s.from, s.to);
      if (!w) {
        throw Error(Errc::corrupt_via, "segment (" + std::to_string(s.from) + ", " + std::to_string(s.to) +
                                           ") has no via and no direct edge");
      }
      if (path.vertices.size() >= n) throw Error(Errc::corrupt_via, "path longer than n vertices");
      sum += *w;
      path.vertices.push_back(s.to);
      continue;
    }
    if (*k >= n || *k == s.from || *k == s.to) {
      throw Error(Errc::corrupt_via, "invalid via " + std::to_string(*k) + " for segment (" +
                                         std::to_string(s.from) + ", " + std::to_string(s.to) + ")");
    }
    stack.push_back({*k, s.to, s.depth + 1});
    stack.push_back({s.from, *k, s.depth + 1});
  }
  path.total_cost = ExtCost{sum};
  if (path.total_cost != distances(source, target)) {
    throw Error(Errc::corrupt_via, "expanded path costs " + path.total_cost.to_string() + ", distance is " +
                                       distances(source, target).to_string());
  }
  return path;
}

}  // namespace apsp

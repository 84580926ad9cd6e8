#pragma once

// Random graph generator G = f(V, rho, alpha).
//
// For every ordered pair (i, j), i != j, in row-major order:
//   1. u ~ Uniform[0, 1)                      (probability matrix entry)
//   2. b ~ Uniform[0, 1); edge iff b < clamp(rho * u, 0, 1)   (Bernoulli)
//   3. if included, w ~ UniformInteger[1, alpha]
// The diagonal is never stored (implicit zero-cost self-loop). Expected
// directed density is rho / 2.
//
// Random stream: std::mt19937_64 seeded with `seed` (its output sequence is
// fixed by the C++ standard). Conversions are defined here rather than via
// <random> distributions so the stream is reproducible across toolchains:
//   uniform01(x)   = (x >> 11) * 2^-53
//   uniform_int[1, r] = 1 + x mod r, redrawing x while x >= floor((2^64 - 1) / r) * r

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/error.hpp"
#include "apsp/graph.hpp"

namespace apsp {

struct GenParams {
  std::size_t v = 1;
  double rho = 0.5;  // in [0, 1]
  std::int64_t alpha = 100;
  std::uint64_t seed = 0;
};

namespace detail {

inline double uniform01(std::mt19937_64& gen) { return static_cast<double>(gen() >> 11) * 0x1.0p-53; }

// Unbiased integer in [0, range), range >= 1.
inline std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t range) {
  const std::uint64_t limit = (UINT64_MAX / range) * range;
  std::uint64_t x = gen();
  while (x >= limit) x = gen();
  return x % range;
}

}  // namespace detail

inline void validate(const GenParams& p) {
  if (p.v < 1) throw Error(Errc::invalid_parameter, "v must be >= 1");
  if (!(p.rho >= 0.0 && p.rho <= 1.0)) throw Error(Errc::invalid_parameter, "rho must lie in [0, 1]");
  if (p.alpha < 1) throw Error(Errc::invalid_parameter, "alpha must be >= 1");
}

/// Parse a density scale: a fraction in [0, 1] ("0.3") or percentage
/// points with a '%' suffix ("30%"), the latter divided by 100.
inline double parse_rho(std::string_view text) {
  bool percent = false;
  if (!text.empty() && text.back() == '%') {
    percent = true;
    text.remove_suffix(1);
  }
  const std::string s(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(s, &used);
  } catch (const std::exception&) {
    throw Error(Errc::invalid_parameter, "rho '" + s + "' is not a number");
  }
  if (used != s.size() || !std::isfinite(v)) throw Error(Errc::invalid_parameter, "rho '" + s + "' is not a number");
  if (percent) v /= 100.0;
  if (v < 0.0 || v > 1.0) {
    throw Error(Errc::invalid_parameter, "rho '" + s + (percent ? "%" : "") +
                                             "' outside [0, 1] (use a '%' suffix for percentage points)");
  }
  return v;
}

inline Graph generate(const GenParams& p) {
  validate(p);
  std::mt19937_64 gen(p.seed);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < p.v; ++i) {
    for (std::size_t j = 0; j < p.v; ++j) {
      if (i == j) continue;
      const double u = detail::uniform01(gen);
      const double prob = std::clamp(p.rho * u, 0.0, 1.0);
      if (detail::uniform01(gen) < prob) {
        const auto w = 1 + static_cast<std::int64_t>(detail::uniform_below(gen, static_cast<std::uint64_t>(p.alpha)));
        edges.push_back({i, j, w});
      }
    }
  }
  return Graph(p.v, std::move(edges));
}

/// Directed density m / (n (n - 1)); 0 for n < 2.
inline double density(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) return 0.0;
  return static_cast<double>(g.edge_count()) / (static_cast<double>(n) * static_cast<double>(n - 1));
}

}  // namespace apsp

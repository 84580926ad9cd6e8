#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "apsp/error.hpp"
#include "apsp/ext_cost.hpp"
#include "apsp/matrix.hpp"
#include "apsp/minplus.hpp"
#include "apsp/parallel.hpp"

namespace apsp {

enum class Algorithm { fw_classic, fw_squaring, rkleene };

constexpr std::string_view to_string(Algorithm a) noexcept {
  switch (a) {
    case Algorithm::fw_classic: return "fw_classic";
    case Algorithm::fw_squaring: return "fw_squaring";
    case Algorithm::rkleene: return "rkleene";
  }
  return "unknown";
}

struct ApspSolution {
  CostMatrix distances;
  std::optional<ViaMatrix> via;    // fw_squaring, rkleene
  std::optional<PredMatrix> pred;  // fw_classic
  std::size_t iterations = 0;      // min-plus rounds, fw_squaring only
  std::uint64_t relaxation_count = 0;
  Algorithm algorithm = Algorithm::fw_classic;
};

inline constexpr std::size_t kDefaultBaseThreshold = 64;

/// True iff some diagonal cell is negative.
inline bool detect_negative_cycle(const CostMatrix& distances) {
  const std::size_t n = std::min(distances.rows(), distances.cols());
  for (std::size_t i = 0; i < n; ++i)
    if (distances(i, i) < ExtCost{0}) return true;
  return false;
}

namespace detail {

inline void validate_solver_input(const CostMatrix& h) {
  if (!h.is_square()) {
    throw Error(Errc::dimension_mismatch,
                "solver input is " + std::to_string(h.rows()) + "x" + std::to_string(h.cols()));
  }
  if (h.empty()) throw Error(Errc::empty_matrix, "solver input has no vertices");
  const std::size_t n = h.rows();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (h(i, j) < ExtCost{0}) {
        throw Error(Errc::negative_weight,
                    "cell (" + std::to_string(i) + ", " + std::to_string(j) + ") = " + h(i, j).to_string());
      }
    }
    if (h(i, i) != ExtCost{0}) {
      throw Error(Errc::invalid_input, "diagonal cell " + std::to_string(i) + " is " + h(i, i).to_string());
    }
  }
}

// In-place relaxation grows cells up to (n-1) * max edge, and candidates to
// twice that; the unchecked path is safe when 2n * max fits.
inline bool fw_sums_fit(ConstCostBlock d) {
  const FiniteRange r = finite_range(d);
  if (!r.any) return true;
  std::int64_t bound = 0;
  const auto factor = static_cast<std::int64_t>(2 * d.rows);
  if (r.lo < 0) return false;
  if (__builtin_mul_overflow(r.hi, factor, &bound)) return false;
  return bound < CostAccess::kInf;
}

// Classic k-outer Floyd-Warshall on a square block with via tracking: a
// strict improvement through k records global vertex id of k. Row k and
// column k are fixed during round k, so rows are updated independently.
inline std::uint64_t fw_block_via(CostBlock d, ViaBlock via, const KernelConfig& cfg) {
  const std::size_t n = d.rows;
  const bool fast = fw_sums_fit(as_const(d));
  const std::uint64_t work = static_cast<std::uint64_t>(n) * n * n;
  const std::size_t workers = std::min(cfg.resolved_workers(), n);
  const bool parallel = workers > 1 && work >= cfg.min_parallel_work;
  bool overflow = false;
  for (std::size_t k = 0; k < n; ++k) {
    const raw_t* dk = raw_row(d, k);
    const auto gk = static_cast<via_t>(d.col_origin + k);
    auto relax_row = [&](std::size_t i, bool& of) {
      raw_t* di = raw_row(d, i);
      const raw_t a = di[k];
      if (a == CostAccess::kInf) return;
      via_t* vi = via.row(i);
      for (std::size_t j = 0; j < n; ++j) {
        const raw_t c = fast ? CostAccess::add_unchecked(a, dk[j]) : CostAccess::add_checked(a, dk[j], of);
        if (c < di[j]) {
          di[j] = c;
          vi[j] = gk;
        }
      }
    };
    if (parallel) {
      const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(static_cast<int>(workers)) reduction(|| : overflow)
      for (std::int64_t i = 0; i < ni; ++i) {
        bool of = false;
        relax_row(static_cast<std::size_t>(i), of);
        overflow = overflow || of;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) relax_row(i, overflow);
    }
  }
  if (overflow) throw Error(Errc::range, "finite cost addition overflow in Floyd-Warshall");
  return work;
}

// Copy product cells that strictly beat the current block, with their via.
inline void fold_improvements(const CostMatrix& prod, const ViaMatrix& prod_via, CostBlock d, ViaBlock via) {
  for (std::size_t i = 0; i < d.rows; ++i) {
    ExtCost* di = d.row(i);
    via_t* vi = via.row(i);
    for (std::size_t j = 0; j < d.cols; ++j) {
      if (prod(i, j) < di[j]) {
        di[j] = prod(i, j);
        vi[j] = prod_via.raw()[i * prod_via.cols() + j];
      }
    }
  }
}

// out <- x (x) y, folded into `out` on strict improvement. The product goes
// through a scratch buffer because `out` aliases one of the operands.
inline std::uint64_t product_into(ConstCostBlock x, ConstCostBlock y, CostBlock out, ViaBlock out_via,
                                  const KernelConfig& cfg) {
  CostMatrix scratch(out.rows, out.cols);
  ViaMatrix scratch_via(out.rows, out.cols);
  CostBlock sb{scratch.cells().data(), out.rows, out.cols, out.cols, out.row_origin, out.col_origin};
  ViaBlock sv{scratch_via.raw().data(), out.rows, out.cols, out.cols, out.row_origin, out.col_origin};
  const std::uint64_t work = minplus_kernel(x, y, sb, sv, Combine::product, cfg);
  fold_improvements(scratch, scratch_via, out, out_via);
  return work;
}

inline std::uint64_t rkleene_block(CostBlock d, ViaBlock via, std::size_t threshold, const KernelConfig& cfg) {
  const std::size_t n = d.rows;
  if (n <= threshold) return fw_block_via(d, via, cfg);

  const std::size_t h = n / 2;
  const std::size_t r = n - h;
  CostBlock A = sub(d, 0, 0, h, h), B = sub(d, 0, h, h, r);
  CostBlock C = sub(d, h, 0, r, h), D = sub(d, h, h, r, r);
  ViaBlock vA = sub(via, 0, 0, h, h), vB = sub(via, 0, h, h, r);
  ViaBlock vC = sub(via, h, 0, r, h), vD = sub(via, h, h, r, r);

  std::uint64_t work = 0;
  // Close A, then route B, C, D through A.
  work += rkleene_block(A, vA, threshold, cfg);
  work += product_into(as_const(A), as_const(B), B, vB, cfg);
  work += product_into(as_const(C), as_const(A), C, vC, cfg);
  work += minplus_kernel(as_const(C), as_const(B), D, vD, Combine::accumulate, cfg);
  // Close D, then route B, C, A through D.
  work += rkleene_block(D, vD, threshold, cfg);
  work += product_into(as_const(B), as_const(D), B, vB, cfg);
  work += product_into(as_const(D), as_const(C), C, vC, cfg);
  work += minplus_kernel(as_const(B), as_const(C), A, vA, Combine::accumulate, cfg);
  return work;
}

}  // namespace detail

/// Floyd-Warshall with predecessor tracking:
///   d[i][j] <- min(d[i][j], d[i][k] + d[k][j]) for k = 0 .. n-1.
/// pred starts at i for every finite off-diagonal input cell and takes
/// pred[k][j] on each strict improvement through k.
inline ApspSolution fw_classic(const CostMatrix& h, const KernelConfig& cfg = {}) {
  detail::validate_solver_input(h);
  using detail::CostAccess;
  using detail::raw_t;
  const std::size_t n = h.rows();

  ApspSolution out;
  out.algorithm = Algorithm::fw_classic;
  out.distances = h;
  PredMatrix pred(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && h(i, j).is_finite()) pred.set(i, j, i);

  auto d = detail::whole(out.distances);
  auto* p = pred.raw().data();
  const bool fast = detail::fw_sums_fit(detail::as_const(d));
  const std::uint64_t work = static_cast<std::uint64_t>(n) * n * n;
  const std::size_t workers = std::min(cfg.resolved_workers(), n);
  const bool parallel = workers > 1 && work >= cfg.min_parallel_work;
  bool overflow = false;

  for (std::size_t k = 0; k < n; ++k) {
    const raw_t* dk = detail::raw_row(d, k);
    const auto* pk = p + k * n;
    auto relax_row = [&](std::size_t i, bool& of) {
      raw_t* di = detail::raw_row(d, i);
      const raw_t a = di[k];
      if (a == CostAccess::kInf) return;
      auto* pi = p + i * n;
      for (std::size_t j = 0; j < n; ++j) {
        const raw_t c = fast ? CostAccess::add_unchecked(a, dk[j]) : CostAccess::add_checked(a, dk[j], of);
        if (c < di[j]) {
          di[j] = c;
          pi[j] = pk[j];
        }
      }
    };
    if (parallel) {
      const auto ni = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static) num_threads(static_cast<int>(workers)) reduction(|| : overflow)
      for (std::int64_t i = 0; i < ni; ++i) {
        bool of = false;
        relax_row(static_cast<std::size_t>(i), of);
        overflow = overflow || of;
      }
    } else {
      for (std::size_t i = 0; i < n; ++i) relax_row(i, overflow);
    }
  }
  if (overflow) throw Error(Errc::range, "finite cost addition overflow in Floyd-Warshall");

  out.pred = std::move(pred);
  out.relaxation_count = work;
  return out;
}

/// Repeated min-plus squaring H <- H (x) H until a round changes nothing.
/// Each round doubles the hop horizon, so at most ceil(log2(n-1)) + 1
/// rounds run, the last one confirming the fixed point.
inline ApspSolution fw_squaring(const CostMatrix& h, const KernelConfig& cfg = {}) {
  detail::validate_solver_input(h);
  const std::size_t n = h.rows();

  ApspSolution out;
  out.algorithm = Algorithm::fw_squaring;
  out.distances = h;
  ViaMatrix via(n, n);
  // Paths have at most n-1 hops, so n rounds always suffice.
  for (std::size_t round = 0; round < n; ++round) {
    MinPlusResult step = minplus_product(out.distances, out.distances, cfg);
    ++out.iterations;
    out.relaxation_count += step.relaxation_count;
    if (matrices_equal(step.distances, out.distances)) break;
    detail::fold_improvements(step.distances, step.via, detail::whole(out.distances), detail::whole(via));
  }
  out.via = std::move(via);
  return out;
}

/// Recursive blocked closure over H = [A B; C D], split at floor(n/2):
///   A <- A*;  B <- A B;  C <- C A;  D <- min(D, C B)
///   D <- D*;  B <- B D;  C <- D C;  A <- min(A, B C)
/// Blocks of size <= base_threshold are closed with Floyd-Warshall.
inline ApspSolution rkleene(const CostMatrix& h, std::size_t base_threshold = kDefaultBaseThreshold,
                            const KernelConfig& cfg = {}) {
  if (base_threshold == 0) throw Error(Errc::invalid_parameter, "base_threshold must be >= 1");
  detail::validate_solver_input(h);
  const std::size_t n = h.rows();

  ApspSolution out;
  out.algorithm = Algorithm::rkleene;
  out.distances = h;
  ViaMatrix via(n, n);
  out.relaxation_count =
      detail::rkleene_block(detail::whole(out.distances), detail::whole(via), base_threshold, cfg);
  out.via = std::move(via);
  return out;
}

}  // namespace apsp

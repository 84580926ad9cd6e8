#pragma once

// Min-plus (tropical) matrix product with argmin tracking.
//
//   Z[i][j] = min_k ( X[i][k] + Y[k][j] )
//
// Two implementations with identical output:
//   * minplus_product / minplus_accumulate: row-band tiled kernel, optionally
//     spread over workers. Each output cell is owned by one band and reduced
//     over k in ascending order, so results do not depend on tile size or
//     worker count.
//   * minplus_broadcast_reference: materializes the full n x n x n tensor
//     L[i][k][j] = X[i][k] + X[k][j] and reduces it with min/argmin over k.
//
// Via rules (both implementations):
//   * the smallest k attaining the minimum wins;
//   * product: via is empty when the minimum is Infinity, or when it is
//     attained at k == i or k == j (the direct entry already achieves it);
//   * accumulate: via is overwritten only where the product strictly beats
//     the accumulated value, otherwise the caller's via is kept.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "apsp/error.hpp"
#include "apsp/ext_cost.hpp"
#include "apsp/matrix.hpp"
#include "apsp/parallel.hpp"

namespace apsp {

struct MinPlusResult {
  CostMatrix distances;
  ViaMatrix via;
  std::uint64_t relaxation_count = 0;  // scalar candidate evaluations, N1*N2*N3
};

/// Default cap on n for the Theta(n^3)-memory broadcast reference.
inline constexpr std::size_t kBroadcastCap = 256;

namespace detail {

using raw_t = CostAccess::raw_type;
using via_t = ViaMatrix::index_type;

// Strided window into a cost matrix. row_origin/col_origin map local indices
// to global vertex ids (used for via values and the direct-entry rule).
template <class T>
struct StridedBlock {
  T* data = nullptr;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t stride = 0;
  std::size_t row_origin = 0;
  std::size_t col_origin = 0;

  T* row(std::size_t i) const noexcept { return data + i * stride; }
};

using ConstCostBlock = StridedBlock<const ExtCost>;
using CostBlock = StridedBlock<ExtCost>;
using ViaBlock = StridedBlock<via_t>;

inline ConstCostBlock whole(const CostMatrix& m) { return {m.cells().data(), m.rows(), m.cols(), m.cols(), 0, 0}; }
inline CostBlock whole(CostMatrix& m) { return {m.cells().data(), m.rows(), m.cols(), m.cols(), 0, 0}; }
inline ViaBlock whole(ViaMatrix& v) { return {v.raw().data(), v.rows(), v.cols(), v.cols(), 0, 0}; }

inline ConstCostBlock as_const(CostBlock b) { return {b.data, b.rows, b.cols, b.stride, b.row_origin, b.col_origin}; }

template <class T>
StridedBlock<T> sub(StridedBlock<T> b, std::size_t r0, std::size_t c0, std::size_t rows, std::size_t cols) {
  return {b.data + r0 * b.stride + c0, rows, cols, b.stride, b.row_origin + r0, b.col_origin + c0};
}

inline const raw_t* raw_row(ConstCostBlock b, std::size_t i) noexcept {
  static_assert(sizeof(ExtCost) == sizeof(raw_t));
  return reinterpret_cast<const raw_t*>(b.row(i));
}
inline raw_t* raw_row(CostBlock b, std::size_t i) noexcept { return reinterpret_cast<raw_t*>(b.row(i)); }

struct FiniteRange {
  raw_t lo = CostAccess::kInf;
  raw_t hi = 0;
  bool any = false;
};

inline FiniteRange finite_range(ConstCostBlock b) {
  FiniteRange r;
  for (std::size_t i = 0; i < b.rows; ++i) {
    const raw_t* p = raw_row(b, i);
    for (std::size_t j = 0; j < b.cols; ++j) {
      if (p[j] == CostAccess::kInf) continue;
      r.lo = std::min(r.lo, p[j]);
      r.hi = std::max(r.hi, p[j]);
      r.any = true;
    }
  }
  return r;
}

inline bool no_overflow_possible(ConstCostBlock x, ConstCostBlock y) {
  const FiniteRange a = finite_range(x);
  const FiniteRange b = finite_range(y);
  if (!a.any || !b.any) return true;
  return CostAccess::sums_fit(a.lo, a.hi, b.lo, b.hi);
}

enum class Combine { product, accumulate };

template <bool Checked>
void minplus_band(ConstCostBlock x, ConstCostBlock y, CostBlock out, ViaBlock via, std::size_t i0, std::size_t i1,
                  std::size_t ktile, bool& overflow) {
  const std::size_t K = x.cols;
  const std::size_t J = y.cols;
  for (std::size_t k0 = 0; k0 < K; k0 += ktile) {
    const std::size_t k1 = std::min(K, k0 + ktile);
    for (std::size_t i = i0; i < i1; ++i) {
      const raw_t* xi = raw_row(x, i);
      raw_t* oi = raw_row(out, i);
      via_t* vi = via.row(i);
      for (std::size_t k = k0; k < k1; ++k) {
        const raw_t a = xi[k];
        if (a == CostAccess::kInf) continue;
        const raw_t* yk = raw_row(y, k);
        const auto gk = static_cast<via_t>(y.row_origin + k);
        if constexpr (Checked) {
          for (std::size_t j = 0; j < J; ++j) {
            const raw_t c = CostAccess::add_checked(a, yk[j], overflow);
            if (c < oi[j]) {
              oi[j] = c;
              vi[j] = gk;
            }
          }
        } else {
          for (std::size_t j = 0; j < J; ++j) {
            const raw_t c = CostAccess::add_unchecked(a, yk[j]);
            const bool better = c < oi[j];
            oi[j] = better ? c : oi[j];
            vi[j] = better ? gk : vi[j];
          }
        }
      }
    }
  }
}

// Product mode: clear via where the minimum is attained at k == i or k == j.
inline void clear_direct_via(ConstCostBlock x, ConstCostBlock y, CostBlock out, ViaBlock via, std::size_t i0,
                             std::size_t i1) {
  const std::size_t k_lo = y.row_origin;
  const std::size_t k_hi = y.row_origin + y.rows;
  bool ignored = false;
  for (std::size_t i = i0; i < i1; ++i) {
    const raw_t* oi = raw_row(out, i);
    via_t* vi = via.row(i);
    const std::size_t gi = out.row_origin + i;
    for (std::size_t j = 0; j < out.cols; ++j) {
      if (oi[j] == CostAccess::kInf) {
        vi[j] = ViaMatrix::none;
        continue;
      }
      const std::size_t gj = out.col_origin + j;
      bool direct = false;
      if (gi >= k_lo && gi < k_hi) {
        const std::size_t k = gi - k_lo;
        direct = CostAccess::add_checked(raw_row(x, i)[k], raw_row(y, k)[j], ignored) == oi[j];
      }
      if (!direct && gj >= k_lo && gj < k_hi) {
        const std::size_t k = gj - k_lo;
        direct = CostAccess::add_checked(raw_row(x, i)[k], raw_row(y, k)[j], ignored) == oi[j];
      }
      if (direct) vi[j] = ViaMatrix::none;
    }
  }
}

/// Core kernel over strided blocks. In product mode `out`/`via` are
/// overwritten; in accumulate mode they hold the running value and via.
/// Returns the number of scalar relaxations performed.
inline std::uint64_t minplus_kernel(ConstCostBlock x, ConstCostBlock y, CostBlock out, ViaBlock via, Combine mode,
                                    const KernelConfig& cfg) {
  if (x.cols != y.rows) {
    throw Error(Errc::dimension_mismatch, "inner dimensions " + std::to_string(x.cols) + " and " +
                                              std::to_string(y.rows) + " differ");
  }
  if (out.rows != x.rows || out.cols != y.cols || via.rows != out.rows || via.cols != out.cols) {
    throw Error(Errc::dimension_mismatch, "output block shape does not match operands");
  }
  if (x.row_origin != out.row_origin || y.col_origin != out.col_origin || x.col_origin != y.row_origin) {
    throw Error(Errc::dimension_mismatch, "block vertex origins are not conformable");
  }

  const std::size_t I = x.rows;
  const std::uint64_t work = static_cast<std::uint64_t>(I) * x.cols * y.cols;

  if (mode == Combine::product) {
    for (std::size_t i = 0; i < I; ++i) {
      std::fill_n(out.row(i), out.cols, ExtCost::infinity());
      std::fill_n(via.row(i), via.cols, ViaMatrix::none);
    }
  }
  if (work == 0) return 0;

  const bool fast = no_overflow_possible(x, y);
  const std::size_t tile = cfg.resolved_tile();
  const std::size_t bands = (I + tile - 1) / tile;
  const std::size_t workers = std::min<std::size_t>(cfg.resolved_workers(), bands);
  const bool parallel = workers > 1 && work >= cfg.min_parallel_work;

  std::atomic<bool> overflow{false};
  auto run_band = [&](std::size_t band) {
    const std::size_t i0 = band * tile;
    const std::size_t i1 = std::min(I, i0 + tile);
    bool local_overflow = false;
    if (fast) {
      minplus_band<false>(x, y, out, via, i0, i1, tile, local_overflow);
    } else {
      minplus_band<true>(x, y, out, via, i0, i1, tile, local_overflow);
    }
    if (mode == Combine::product) clear_direct_via(x, y, out, via, i0, i1);
    if (local_overflow) overflow.store(true, std::memory_order_relaxed);
  };

  if (parallel) {
    const auto nb = static_cast<std::int64_t>(bands);
#pragma omp parallel for schedule(dynamic, 1) num_threads(static_cast<int>(workers))
    for (std::int64_t b = 0; b < nb; ++b) run_band(static_cast<std::size_t>(b));
  } else {
    for (std::size_t b = 0; b < bands; ++b) run_band(b);
  }

  if (overflow.load()) throw Error(Errc::range, "finite cost addition overflow in min-plus product");
  return work;
}

}  // namespace detail

/// Z = X (x) Y over (min, +), with the argmin intermediate vertex per cell.
inline MinPlusResult minplus_product(const CostMatrix& x, const CostMatrix& y, const KernelConfig& cfg = {}) {
  if (x.cols() != y.rows()) {
    throw Error(Errc::dimension_mismatch, "inner dimensions " + std::to_string(x.cols()) + " and " +
                                              std::to_string(y.rows()) + " differ");
  }
  MinPlusResult r{CostMatrix(x.rows(), y.cols()), ViaMatrix(x.rows(), y.cols()), 0};
  r.relaxation_count =
      detail::minplus_kernel(detail::whole(x), detail::whole(y), detail::whole(r.distances), detail::whole(r.via),
                             detail::Combine::product, cfg);
  return r;
}

/// min(Z, X (x) Y) cell-wise. `z_via` supplies the via matrix that goes
/// with z; via cells change only where the product strictly improves z.
inline MinPlusResult minplus_accumulate(const CostMatrix& z, const ViaMatrix& z_via, const CostMatrix& x,
                                        const CostMatrix& y, const KernelConfig& cfg = {}) {
  if (x.cols() != y.rows()) {
    throw Error(Errc::dimension_mismatch, "inner dimensions " + std::to_string(x.cols()) + " and " +
                                              std::to_string(y.rows()) + " differ");
  }
  if (z.rows() != x.rows() || z.cols() != y.cols()) {
    throw Error(Errc::dimension_mismatch, "accumulator shape does not match the product");
  }
  if (z_via.rows() != z.rows() || z_via.cols() != z.cols()) {
    throw Error(Errc::dimension_mismatch, "via matrix shape does not match the accumulator");
  }
  MinPlusResult r{z, z_via, 0};
  r.relaxation_count =
      detail::minplus_kernel(detail::whole(x), detail::whole(y), detail::whole(r.distances), detail::whole(r.via),
                             detail::Combine::accumulate, cfg);
  return r;
}

inline MinPlusResult minplus_accumulate(const CostMatrix& z, const CostMatrix& x, const CostMatrix& y,
                                        const KernelConfig& cfg = {}) {
  return minplus_accumulate(z, ViaMatrix(z.rows(), z.cols()), x, y, cfg);
}

/// X (x) X computed the literal way: broadcast-add X (n x n x 1) to its
/// transpose (1 x n x n) into L, then min and argmin over the middle axis.
/// Memory is Theta(n^3); n above `cap` is rejected.
inline MinPlusResult minplus_broadcast_reference(const CostMatrix& x, std::size_t cap = kBroadcastCap) {
  if (!x.is_square()) throw Error(Errc::dimension_mismatch, "broadcast reference needs a square matrix");
  const std::size_t n = x.rows();
  if (n > cap) {
    throw Error(Errc::capacity, "n=" + std::to_string(n) + " exceeds broadcast cap " + std::to_string(cap) +
                                    " (needs n^3 cells)");
  }
  using detail::CostAccess;

  // L[(i * n + k) * n + j] = X[i][k] + X[k][j]
  std::vector<detail::raw_t> tensor(n * n * n);
  bool overflow = false;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        tensor[(i * n + k) * n + j] =
            CostAccess::add_checked(CostAccess::raw(x(i, k)), CostAccess::raw(x(k, j)), overflow);
  if (overflow) throw Error(Errc::range, "finite cost addition overflow in broadcast reference");

  MinPlusResult r{CostMatrix(n, n), ViaMatrix(n, n), static_cast<std::uint64_t>(n) * n * n};
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      detail::raw_t best = CostAccess::kInf;
      std::size_t arg = 0;
      for (std::size_t k = 0; k < n; ++k) {
        const detail::raw_t v = tensor[(i * n + k) * n + j];
        if (v < best) {
          best = v;
          arg = k;
        }
      }
      r.distances(i, j) = CostAccess::make(best);
      const bool direct = tensor[(i * n + i) * n + j] == best || tensor[(i * n + j) * n + j] == best;
      if (best != CostAccess::kInf && !direct) r.via.set(i, j, arg);
    }
  }
  return r;
}

}  // namespace apsp

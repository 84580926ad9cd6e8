#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "apsp/error.hpp"
#include "apsp/ext_cost.hpp"

namespace apsp {

/// Dense row-major matrix of ExtCost. cell(i, j) is the cost from row vertex
/// i to column vertex j. Solver inputs are square with a zero diagonal;
/// rectangular matrices appear as operands of the min-plus product.
class CostMatrix {
 public:
  CostMatrix() = default;

  CostMatrix(std::size_t rows, std::size_t cols, ExtCost fill = ExtCost::infinity())
      : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

  /// Row-list literal; every row must have the same length.
  CostMatrix(std::initializer_list<std::initializer_list<ExtCost>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    cells_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw Error(Errc::dimension_mismatch, "ragged matrix literal");
      cells_.insert(cells_.end(), r.begin(), r.end());
    }
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool empty() const noexcept { return cells_.empty(); }

  ExtCost& operator()(std::size_t i, std::size_t j) noexcept { return cells_[i * cols_ + j]; }
  ExtCost operator()(std::size_t i, std::size_t j) const noexcept { return cells_[i * cols_ + j]; }

  ExtCost at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(Errc::dimension_mismatch, "cell index out of range");
    return (*this)(i, j);
  }

  std::span<ExtCost> row(std::size_t i) noexcept { return {cells_.data() + i * cols_, cols_}; }
  std::span<const ExtCost> row(std::size_t i) const noexcept { return {cells_.data() + i * cols_, cols_}; }

  std::span<ExtCost> cells() noexcept { return cells_; }
  std::span<const ExtCost> cells() const noexcept { return cells_; }

  friend bool operator==(const CostMatrix&, const CostMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<ExtCost> cells_;
};

/// Neutral element of the min-plus product: zero diagonal, Infinity elsewhere.
inline CostMatrix minplus_identity(std::size_t n) {
  if (n == 0) throw Error(Errc::empty_matrix, "identity of size 0");
  CostMatrix id(n, n);
  for (std::size_t i = 0; i < n; ++i) id(i, i) = ExtCost{0};
  return id;
}

/// Cell-wise equality; Infinity equals only Infinity.
inline bool matrices_equal(const CostMatrix& a, const CostMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(Errc::dimension_mismatch, "comparing " + std::to_string(a.rows()) + "x" +
                                              std::to_string(a.cols()) + " with " +
                                              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  return a == b;
}

/// Dense matrix of optional vertex indices. The tag keeps intermediate-vertex
/// matrices and predecessor matrices from being mixed up.
template <class Tag>
class IndexMatrix {
 public:
  using index_type = std::uint32_t;
  static constexpr index_type none = std::numeric_limits<index_type>::max();

  IndexMatrix() = default;
  IndexMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), cells_(rows * cols, none) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  std::optional<std::size_t> operator()(std::size_t i, std::size_t j) const noexcept {
    const index_type v = cells_[i * cols_ + j];
    if (v == none) return std::nullopt;
    return v;
  }

  std::optional<std::size_t> at(std::size_t i, std::size_t j) const {
    if (i >= rows_ || j >= cols_) throw Error(Errc::dimension_mismatch, "cell index out of range");
    return (*this)(i, j);
  }

  void set(std::size_t i, std::size_t j, std::optional<std::size_t> v) noexcept {
    cells_[i * cols_ + j] = v ? static_cast<index_type>(*v) : none;
  }

  /// Raw storage; `none` marks an empty cell.
  std::span<index_type> raw() noexcept { return cells_; }
  std::span<const index_type> raw() const noexcept { return cells_; }

  bool all_none() const noexcept {
    for (index_type v : cells_)
      if (v != none) return false;
    return true;
  }

  friend bool operator==(const IndexMatrix&, const IndexMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<index_type> cells_;
};

struct ViaTag {};
struct PredTag {};

/// via(i, j) = intermediate vertex k of the best i -> j path found by a
/// min-plus step; empty for the direct entry, the diagonal, or unreachable.
using ViaMatrix = IndexMatrix<ViaTag>;

/// pred(i, j) = last vertex before j on a shortest i -> j path; empty iff
/// i == j or j is unreachable from i.
using PredMatrix = IndexMatrix<PredTag>;

}  // namespace apsp

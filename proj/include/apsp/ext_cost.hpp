#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>
#include <string>

#include "apsp/error.hpp"

namespace apsp {

namespace detail {
struct CostAccess;
}

/// Integer path cost extended with an Infinity element (unreachable).
///
/// Addition saturates at Infinity: `Infinity + x == Infinity` for every x.
/// Adding two finite costs whose sum leaves the representable range throws
/// `Error(Errc::range)`; it never wraps. Infinity orders above every finite
/// cost, so `std::min` is the semiring addition.
///
/// Finite costs are signed so that negative diagonals can be represented
/// for `detect_negative_cycle`; the solvers reject negative input.
class ExtCost {
 public:
  using value_type = std::int64_t;

  constexpr ExtCost() noexcept = default;

  constexpr explicit ExtCost(value_type v) : v_(v) {
    if (v == kInfinity) throw Error(Errc::range, "finite cost outside representable range");
  }

  static constexpr ExtCost infinity() noexcept { return ExtCost(kInfinity, RawTag{}); }

  /// Largest representable finite cost.
  static constexpr value_type max_finite() noexcept { return kInfinity - 1; }

  constexpr bool is_finite() const noexcept { return v_ != kInfinity; }
  constexpr bool is_infinite() const noexcept { return v_ == kInfinity; }

  constexpr value_type value() const {
    if (is_infinite()) throw Error(Errc::range, "value() of an infinite cost");
    return v_;
  }

  friend constexpr ExtCost operator+(ExtCost a, ExtCost b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    value_type sum = 0;
    if (__builtin_add_overflow(a.v_, b.v_, &sum) || sum == kInfinity) {
      throw Error(Errc::range, "finite cost addition overflow");
    }
    return ExtCost(sum, RawTag{});
  }

  ExtCost& operator+=(ExtCost other) { return *this = *this + other; }

  friend constexpr auto operator<=>(ExtCost, ExtCost) noexcept = default;
  friend constexpr bool operator==(ExtCost, ExtCost) noexcept = default;

  /// "INF" or the decimal value.
  std::string to_string() const { return is_finite() ? std::to_string(v_) : std::string("INF"); }

  friend std::ostream& operator<<(std::ostream& os, ExtCost c) { return os << c.to_string(); }

 private:
  friend struct detail::CostAccess;
  static constexpr value_type kInfinity = std::numeric_limits<value_type>::max();

  struct RawTag {};
  constexpr ExtCost(value_type v, RawTag) noexcept : v_(v) {}

  value_type v_ = 0;
};

namespace detail {

// Raw sentinel access for the kernels' hot loops. Not part of the public API.
struct CostAccess {
  using raw_type = ExtCost::value_type;
  static constexpr raw_type kInf = ExtCost::kInfinity;

  static constexpr raw_type raw(ExtCost c) noexcept { return c.v_; }
  static constexpr ExtCost make(raw_type v) noexcept { return ExtCost(v, ExtCost::RawTag{}); }

  // a + b with INF saturation; caller guarantees finite sums cannot overflow.
  static constexpr raw_type add_unchecked(raw_type a, raw_type b) noexcept {
    const auto sum = static_cast<raw_type>(static_cast<std::uint64_t>(a) + static_cast<std::uint64_t>(b));
    return (a == kInf || b == kInf) ? kInf : sum;
  }

  // As add_unchecked, but reports overflow through `overflow` instead of wrapping.
  static constexpr raw_type add_checked(raw_type a, raw_type b, bool& overflow) noexcept {
    if (a == kInf || b == kInf) return kInf;
    raw_type sum = 0;
    if (__builtin_add_overflow(a, b, &sum) || sum == kInf) {
      overflow = true;
      return kInf;
    }
    return sum;
  }

  // True when every finite sum of one value from [lo_a, hi_a] and one from
  // [lo_b, hi_b] is representable as a finite cost.
  static constexpr bool sums_fit(raw_type lo_a, raw_type hi_a, raw_type lo_b, raw_type hi_b) noexcept {
    raw_type s = 0;
    if (__builtin_add_overflow(hi_a, hi_b, &s) || s == kInf) return false;
    if (__builtin_add_overflow(lo_a, lo_b, &s)) return false;
    return true;
  }
};

}  // namespace detail

}  // namespace apsp

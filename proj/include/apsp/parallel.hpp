#pragma once

#include <charconv>
#include <cstddef>
#include <cstdlib>
#include <string_view>
#include <thread>

namespace apsp {

/// Worker count from APSP_WORKERS, else the hardware thread count.
inline std::size_t default_workers() {
  if (const char* env = std::getenv("APSP_WORKERS")) {
    std::string_view s(env);
    std::size_t v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec == std::errc{} && ptr == s.data() + s.size() && v > 0) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Execution knobs for the kernels. None of them affects results.
struct KernelConfig {
  std::size_t workers = 0;  // 0 = default_workers()
  std::size_t tile = 64;    // output rows per band and k-block depth
  // Products with fewer scalar relaxations than this run on the calling thread.
  std::size_t min_parallel_work = std::size_t{1} << 16;

  std::size_t resolved_workers() const { return workers == 0 ? default_workers() : workers; }
  std::size_t resolved_tile() const noexcept { return tile == 0 ? 64 : tile; }
};

}  // namespace apsp

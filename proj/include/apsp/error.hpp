#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace apsp {

enum class Errc {
  malformed_graph,
  empty_matrix,
  dimension_mismatch,
  range,
  capacity,
  negative_weight,
  invalid_input,
  corrupt_predecessor,
  corrupt_via,
  invalid_parameter,
  parse,
};

constexpr std::string_view to_string(Errc code) noexcept {
  switch (code) {
    case Errc::malformed_graph: return "malformed graph";
    case Errc::empty_matrix: return "empty matrix";
    case Errc::dimension_mismatch: return "dimension mismatch";
    case Errc::range: return "cost out of range";
    case Errc::capacity: return "capacity exceeded";
    case Errc::negative_weight: return "negative weight rejected";
    case Errc::invalid_input: return "invalid input";
    case Errc::corrupt_predecessor: return "corrupt predecessor matrix";
    case Errc::corrupt_via: return "corrupt via matrix";
    case Errc::invalid_parameter: return "invalid parameter";
    case Errc::parse: return "parse error";
  }
  return "unknown error";
}

/// Every failure raised by the library. `code()` identifies the category;
/// `what()` carries the category followed by a detail message.
class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& detail)
      : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace apsp

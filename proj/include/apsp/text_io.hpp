#pragma once

// Plain-text exchange formats.
//
// Graph:  "n m\n" then m lines "u v w\n" (0-based indices, weight >= 1).
// Matrix: "n\n" then n lines of n fields, each a nonnegative integer or INF.
//
// Fields are separated by exactly one space, every line ends in '\n', and
// nothing else is accepted. Writers emit the same bytes the readers accept,
// so write(read(text)) == text for every valid document.

#include <charconv>
#include <cstdint>
#include <istream>
#include <iterator>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/error.hpp"
#include "apsp/graph.hpp"
#include "apsp/matrix.hpp"

namespace apsp {

namespace detail {

class LineReader {
 public:
  explicit LineReader(std::string_view text) : text_(text) {}

  bool at_end() const noexcept { return pos_ == text_.size(); }

  std::vector<std::string_view> fields(std::string_view what) {
    if (at_end()) fail("unexpected end of input, expected " + std::string(what));
    const auto nl = text_.find('\n', pos_);
    if (nl == std::string_view::npos) fail("line " + std::to_string(line_ + 1) + " is not newline-terminated");
    std::string_view line = text_.substr(pos_, nl - pos_);
    pos_ = nl + 1;
    ++line_;
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
      const auto sp = line.find(' ', start);
      out.push_back(line.substr(start, sp == std::string_view::npos ? std::string_view::npos : sp - start));
      if (out.back().empty()) fail("empty field on line " + std::to_string(line_));
      if (sp == std::string_view::npos) break;
      start = sp + 1;
    }
    return out;
  }

  std::uint64_t unsigned_field(std::string_view f) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(f.data(), f.data() + f.size(), v);
    if (ec != std::errc{} || ptr != f.data() + f.size() || f.empty() || (f.size() > 1 && f[0] == '0')) {
      fail("bad integer field '" + std::string(f) + "' on line " + std::to_string(line_));
    }
    return v;
  }

  std::size_t line() const noexcept { return line_; }

  [[noreturn]] void fail(const std::string& msg) const { throw Error(Errc::parse, msg); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 0;
};

inline std::string slurp(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace detail

inline std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.vertex_count()) + ' ' + std::to_string(g.edge_count()) + '\n';
  for (const Edge& e : g.edges()) {
    out += std::to_string(e.source);
    out += ' ';
    out += std::to_string(e.target);
    out += ' ';
    out += std::to_string(e.weight);
    out += '\n';
  }
  return out;
}

inline Graph parse_graph(std::string_view text) {
  detail::LineReader r(text);
  auto header = r.fields("header 'n m'");
  if (header.size() != 2) r.fail("header must be 'n m'");
  const auto n = r.unsigned_field(header[0]);
  const auto m = r.unsigned_field(header[1]);
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::uint64_t e = 0; e < m; ++e) {
    auto f = r.fields("edge line 'u v w'");
    if (f.size() != 3) r.fail("edge line " + std::to_string(r.line()) + " must be 'u v w'");
    const auto w = r.unsigned_field(f[2]);
    if (w > static_cast<std::uint64_t>(ExtCost::max_finite())) r.fail("weight too large");
    edges.push_back({r.unsigned_field(f[0]), r.unsigned_field(f[1]), static_cast<std::int64_t>(w)});
  }
  if (!r.at_end()) r.fail("trailing content after " + std::to_string(m) + " edges");
  return Graph(n, std::move(edges));
}

inline std::string format_matrix(const CostMatrix& m) {
  if (!m.is_square()) throw Error(Errc::dimension_mismatch, "matrix text format is square only");
  std::string out = std::to_string(m.rows()) + '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += m(i, j).to_string();
    }
    out += '\n';
  }
  return out;
}

inline CostMatrix parse_matrix(std::string_view text) {
  detail::LineReader r(text);
  auto header = r.fields("header 'n'");
  if (header.size() != 1) r.fail("header must be 'n'");
  const auto n = r.unsigned_field(header[0]);
  CostMatrix m(n, n);
  for (std::uint64_t i = 0; i < n; ++i) {
    auto f = r.fields("matrix row");
    if (f.size() != n) r.fail("row " + std::to_string(i) + " has " + std::to_string(f.size()) + " fields");
    for (std::uint64_t j = 0; j < n; ++j) {
      if (f[j] == "INF") continue;
      const auto v = r.unsigned_field(f[j]);
      if (v > static_cast<std::uint64_t>(ExtCost::max_finite())) r.fail("cost too large");
      m(i, j) = ExtCost{static_cast<std::int64_t>(v)};
    }
  }
  if (!r.at_end()) r.fail("trailing content after " + std::to_string(n) + " rows");
  return m;
}

inline void write_graph(std::ostream& os, const Graph& g) { os << format_graph(g); }
inline Graph read_graph(std::istream& in) { return parse_graph(detail::slurp(in)); }
inline void write_matrix(std::ostream& os, const CostMatrix& m) { os << format_matrix(m); }
inline CostMatrix read_matrix(std::istream& in) { return parse_matrix(detail::slurp(in)); }

}  // namespace apsp

#pragma once

// Scatter plot of a benchmark metric against edge count, as standalone SVG.
// One series per algorithm, log10 y axis, colors fixed per algorithm tag.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <string_view>
#include <vector>

#include "apsp/bench.hpp"
#include "apsp/error.hpp"

namespace apsp {

enum class PlotMetric { wall_time_ms, relaxation_count };

constexpr std::string_view to_string(PlotMetric m) noexcept {
  return m == PlotMetric::wall_time_ms ? "wall_time_ms" : "relaxation_count";
}

inline PlotMetric parse_plot_metric(std::string_view s) {
  if (s == "wall_time_ms") return PlotMetric::wall_time_ms;
  if (s == "relaxation_count") return PlotMetric::relaxation_count;
  throw Error(Errc::invalid_parameter, "unknown metric '" + std::string(s) + "'");
}

namespace detail {

struct SeriesStyle {
  const char* color;
  const char* marker;  // circle | square | triangle | diamond | cross
};

inline SeriesStyle style_for(BenchAlgorithm a) {
  switch (a) {
    case BenchAlgorithm::fw_classic: return {"#1f77b4", "circle"};
    case BenchAlgorithm::fw_squaring: return {"#ff7f0e", "square"};
    case BenchAlgorithm::rkleene: return {"#2ca02c", "triangle"};
    case BenchAlgorithm::fw_broadcast: return {"#9467bd", "diamond"};
    case BenchAlgorithm::oracle_sssp: return {"#d62728", "cross"};
  }
  return {"#000000", "circle"};
}

inline std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

inline std::string marker_svg(const char* marker, double x, double y) {
  const std::string cx = fmt("%.2f", x), cy = fmt("%.2f", y);
  const std::string m = marker;
  if (m == "square") return "<rect x=\"" + fmt("%.2f", x - 3) + "\" y=\"" + fmt("%.2f", y - 3) + "\" width=\"6\" height=\"6\"/>";
  if (m == "triangle" || m == "diamond") {
    std::string pts = m == "triangle"
                          ? fmt("%.2f", x) + "," + fmt("%.2f", y - 4) + " " + fmt("%.2f", x - 4) + "," + fmt("%.2f", y + 3) +
                                " " + fmt("%.2f", x + 4) + "," + fmt("%.2f", y + 3)
                          : fmt("%.2f", x) + "," + fmt("%.2f", y - 4) + " " + fmt("%.2f", x + 4) + "," + cy + " " + cx +
                                "," + fmt("%.2f", y + 4) + " " + fmt("%.2f", x - 4) + "," + cy;
    return "<polygon points=\"" + pts + "\"/>";
  }
  if (m == "cross") {
    return "<path d=\"M" + fmt("%.2f", x - 3) + " " + fmt("%.2f", y - 3) + " L" + fmt("%.2f", x + 3) + " " +
           fmt("%.2f", y + 3) + " M" + fmt("%.2f", x - 3) + " " + fmt("%.2f", y + 3) + " L" + fmt("%.2f", x + 3) + " " +
           fmt("%.2f", y - 3) + "\" stroke-width=\"1.5\"/>";
  }
  return "<circle cx=\"" + cx + "\" cy=\"" + cy + "\" r=\"3\"/>";
}

}  // namespace detail

inline std::string emit_scatter_plot(const std::vector<BenchRecord>& records, PlotMetric metric) {
  std::vector<const BenchRecord*> pts;
  for (const auto& r : records)
    if (r.status != RecordStatus::skipped_capacity) pts.push_back(&r);
  if (pts.empty()) throw Error(Errc::invalid_parameter, "scatter plot needs at least one timed record");

  auto value = [&](const BenchRecord& r) {
    const double v = metric == PlotMetric::wall_time_ms ? r.wall_time_ms : static_cast<double>(r.relaxation_count);
    return std::max(v, 1e-6);
  };

  // Series in fixed tag order so the legend is stable.
  std::vector<BenchAlgorithm> series;
  for (BenchAlgorithm a : kAllBenchAlgorithms)
    if (std::any_of(pts.begin(), pts.end(), [&](const BenchRecord* r) { return r->algorithm == a; })) series.push_back(a);

  double x_max = 1.0, y_lo = value(*pts.front()), y_hi = y_lo;
  for (const BenchRecord* r : pts) {
    x_max = std::max(x_max, static_cast<double>(r->n_edges));
    y_lo = std::min(y_lo, value(*r));
    y_hi = std::max(y_hi, value(*r));
  }
  const double d_lo = std::floor(std::log10(y_lo));
  const double d_hi = std::max(d_lo + 1, std::ceil(std::log10(y_hi)));

  constexpr double W = 800, H = 500, L = 80, R = 170, T = 40, B = 60;
  const double pw = W - L - R, ph = H - T - B;
  auto sx = [&](double x) { return L + pw * x / x_max; };
  auto sy = [&](double y) { return T + ph * (1.0 - (std::log10(y) - d_lo) / (d_hi - d_lo)); };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"500\" viewBox=\"0 0 800 500\" "
         "font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"800\" height=\"500\" fill=\"white\"/>\n";
  svg += "<text x=\"" + detail::fmt("%.0f", L + pw / 2) + "\" y=\"20\" text-anchor=\"middle\" font-size=\"14\">" +
         std::string(to_string(metric)) + " vs n_edges</text>\n";

  // Axes, decade grid and labels.
  svg += "<g class=\"axes\" stroke=\"#333\" fill=\"none\">\n";
  svg += "<line x1=\"" + detail::fmt("%.0f", L) + "\" y1=\"" + detail::fmt("%.0f", T + ph) + "\" x2=\"" +
         detail::fmt("%.0f", L + pw) + "\" y2=\"" + detail::fmt("%.0f", T + ph) + "\"/>\n";
  svg += "<line x1=\"" + detail::fmt("%.0f", L) + "\" y1=\"" + detail::fmt("%.0f", T) + "\" x2=\"" +
         detail::fmt("%.0f", L) + "\" y2=\"" + detail::fmt("%.0f", T + ph) + "\"/>\n";
  svg += "</g>\n<g class=\"ticks\" fill=\"#333\">\n";
  for (double d = d_lo; d <= d_hi; d += 1.0) {
    const double y = sy(std::pow(10.0, d));
    svg += "<line x1=\"" + detail::fmt("%.0f", L) + "\" y1=\"" + detail::fmt("%.2f", y) + "\" x2=\"" +
           detail::fmt("%.0f", L + pw) + "\" y2=\"" + detail::fmt("%.2f", y) + "\" stroke=\"#ddd\"/>\n";
    svg += "<text x=\"" + detail::fmt("%.0f", L - 6) + "\" y=\"" + detail::fmt("%.2f", y + 4) +
           "\" text-anchor=\"end\">1e" + detail::fmt("%.0f", d) + "</text>\n";
  }
  for (int t = 0; t <= 4; ++t) {
    const double xv = x_max * t / 4.0;
    svg += "<text x=\"" + detail::fmt("%.2f", sx(xv)) + "\" y=\"" + detail::fmt("%.0f", T + ph + 18) +
           "\" text-anchor=\"middle\">" + detail::fmt("%.0f", xv) + "</text>\n";
  }
  svg += "</g>\n";
  svg += "<text x=\"" + detail::fmt("%.0f", L + pw / 2) + "\" y=\"" + detail::fmt("%.0f", H - 15) +
         "\" text-anchor=\"middle\">n_edges</text>\n";
  svg += "<text x=\"20\" y=\"" + detail::fmt("%.0f", T + ph / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 20 " +
         detail::fmt("%.0f", T + ph / 2) + ")\">" + std::string(to_string(metric)) + " (log scale)</text>\n";

  for (BenchAlgorithm a : series) {
    const auto st = detail::style_for(a);
    svg += "<g class=\"series\" data-algorithm=\"" + std::string(to_string(a)) + "\" fill=\"" + st.color +
           "\" stroke=\"" + st.color + "\">\n";
    for (const BenchRecord* r : pts) {
      if (r->algorithm != a) continue;
      svg += detail::marker_svg(st.marker, sx(static_cast<double>(r->n_edges)), sy(value(*r))) + "\n";
    }
    svg += "</g>\n";
  }

  svg += "<g class=\"legend\">\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    const auto st = detail::style_for(series[s]);
    const double y = T + 10 + 20.0 * static_cast<double>(s);
    svg += "<g fill=\"" + std::string(st.color) + "\" stroke=\"" + st.color + "\">" +
           detail::marker_svg(st.marker, L + pw + 20, y) + "</g>";
    svg += "<text x=\"" + detail::fmt("%.0f", L + pw + 32) + "\" y=\"" + detail::fmt("%.2f", y + 4) + "\">" +
           std::string(to_string(series[s])) + "</text>\n";
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace apsp

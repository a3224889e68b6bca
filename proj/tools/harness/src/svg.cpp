#include "aif/harness/svg.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>

namespace aif::harness::svg {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
                                    "#e377c2", "#7f7f7f", "#bcbd22", "#17becf", "#393b79", "#ad494a",
                                    "#637939", "#8c6d31", "#7b4173", "#3182bd"};

std::string escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void take(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void settle() {
    if (!std::isfinite(lo)) lo = 0.0, hi = 1.0;
    if (hi - lo < 1e-12) lo -= 0.5, hi += 0.5;
  }
};

}  // namespace

std::string render(const LineChart& chart) {
  constexpr double W = 760, H = 440, left = 70, right = 190, top = 40, bottom = 55;
  const double pw = W - left - right, ph = H - top - bottom;
  Range xr, yr;
  for (const auto& s : chart.series) {
    for (double v : s.x) xr.take(v);
    for (double v : s.y) yr.take(v);
  }
  xr.settle();
  yr.settle();
  auto px = [&](double x) { return left + (x - xr.lo) / (xr.hi - xr.lo) * pw; };
  auto py = [&](double y) { return top + (1.0 - (y - yr.lo) / (yr.hi - yr.lo)) * ph; };

  fmt::memory_buffer b;
  auto out = std::back_inserter(b);
  fmt::format_to(out,
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" "
                 "font-size=\"11\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
                 W, H);
  fmt::format_to(out, "<text x=\"{}\" y=\"22\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n", left + pw / 2,
                 escape(chart.title));
  fmt::format_to(out, "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" fill=\"none\" stroke=\"#444\"/>\n", left, top,
                 pw, ph);
  for (int i = 0; i <= 5; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 5.0, fy = yr.lo + (yr.hi - yr.lo) * i / 5.0;
    fmt::format_to(out, "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"middle\">{:.3g}</text>\n", px(fx),
                   top + ph + 16, fx);
    fmt::format_to(out, "<text x=\"{:.1f}\" y=\"{:.1f}\" text-anchor=\"end\">{:.3g}</text>\n", left - 6, py(fy) + 4,
                   fy);
    fmt::format_to(out, "<line x1=\"{0:.1f}\" x2=\"{1:.1f}\" y1=\"{2:.1f}\" y2=\"{2:.1f}\" stroke=\"#ddd\"/>\n", left,
                   left + pw, py(fy));
  }
  fmt::format_to(out, "<text x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n", left + pw / 2, H - 12,
                 escape(chart.x_label));
  fmt::format_to(out, "<text transform=\"translate(16,{}) rotate(-90)\" text-anchor=\"middle\">{}</text>\n",
                 top + ph / 2, escape(chart.y_label));

  for (std::size_t i = 0; i < chart.series.size(); ++i) {
    const Series& s = chart.series[i];
    const char* color = kPalette[i % std::size(kPalette)];
    fmt::format_to(out, "<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.5\" points=\"", color);
    const std::size_t n = std::min(s.x.size(), s.y.size());
    for (std::size_t j = 0; j < n; ++j) {
      if (std::isfinite(s.x[j]) && std::isfinite(s.y[j])) fmt::format_to(out, "{:.1f},{:.1f} ", px(s.x[j]), py(s.y[j]));
    }
    fmt::format_to(out, "\"/>\n");
    const double ly = top + 10 + 14.0 * static_cast<double>(i);
    fmt::format_to(out, "<line x1=\"{0}\" x2=\"{1}\" y1=\"{2}\" y2=\"{2}\" stroke=\"{3}\" stroke-width=\"2\"/>\n",
                   left + pw + 12, left + pw + 30, ly, color);
    fmt::format_to(out, "<text x=\"{}\" y=\"{}\">{}</text>\n", left + pw + 35, ly + 4, escape(s.label));
  }
  fmt::format_to(out, "</svg>\n");
  return fmt::to_string(b);
}

std::string render(const std::vector<Heatmap>& panels, int columns, const std::string& title) {
  constexpr double cell = 22, gap = 36, head = 50;
  columns = std::max(1, columns);
  Index max_rows = 1, max_cols = 1;
  for (const auto& p : panels) max_rows = std::max(max_rows, p.values.rows()), max_cols = std::max(max_cols, p.values.cols());
  const double pw = cell * static_cast<double>(max_cols), ph = cell * static_cast<double>(max_rows);
  const int grid_rows = (static_cast<int>(panels.size()) + columns - 1) / columns;
  const double W = gap + columns * (pw + gap), H = head + grid_rows * (ph + gap + 14);

  fmt::memory_buffer b;
  auto out = std::back_inserter(b);
  fmt::format_to(out,
                 "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" font-family=\"sans-serif\" "
                 "font-size=\"11\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
                 W, H);
  fmt::format_to(out, "<text x=\"{}\" y=\"24\" font-size=\"14\" text-anchor=\"middle\">{}</text>\n", W / 2,
                 escape(title));
  for (std::size_t i = 0; i < panels.size(); ++i) {
    const Heatmap& p = panels[i];
    const double x0 = gap + static_cast<double>(i % static_cast<std::size_t>(columns)) * (pw + gap);
    const double y0 = head + static_cast<double>(i / static_cast<std::size_t>(columns)) * (ph + gap + 14);
    fmt::format_to(out, "<text x=\"{}\" y=\"{}\">{}</text>\n", x0, y0 - 6, escape(p.title));
    for (Index r = 0; r < p.values.rows(); ++r) {
      for (Index c = 0; c < p.values.cols(); ++c) {
        const double v = std::clamp(p.values(r, c), 0.0, 1.0);
        const int shade = static_cast<int>(std::lround(255.0 * (1.0 - v)));
        fmt::format_to(out,
                       "<rect x=\"{:.1f}\" y=\"{:.1f}\" width=\"{}\" height=\"{}\" fill=\"rgb({},{},255)\" "
                       "stroke=\"#ccc\"/>\n",
                       x0 + cell * static_cast<double>(c), y0 + cell * static_cast<double>(r), cell, cell, shade, shade);
      }
    }
  }
  fmt::format_to(out, "</svg>\n");
  return fmt::to_string(b);
}

}  // namespace aif::harness::svg

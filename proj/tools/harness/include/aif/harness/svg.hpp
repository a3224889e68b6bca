#pragma once

#include <string>
#include <vector>

#include "aif/math.hpp"

namespace aif::harness::svg {

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

struct LineChart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<Series> series;
};

std::string render(const LineChart& chart);

struct Heatmap {
  std::string title;
  Matrix values;  // drawn with rows top to bottom
};

// Heatmaps laid out in a grid with `columns` panels per row. Cell shading
// runs from white (0) to dark (1); values are clamped to that range.
std::string render(const std::vector<Heatmap>& panels, int columns, const std::string& title);

}  // namespace aif::harness::svg

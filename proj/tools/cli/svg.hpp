#pragma once

#include <string>
#include <vector>

namespace bornsim::cli {

// Minimal self-contained SVG plotting: axes, ticks, polylines or bars, and
// a text legend. No external renderer involved; the output is meant to be
// opened directly in a browser.

struct Series {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
};

std::string svg_line_chart(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<Series>& series);

// One bar per integer x = 0 .. values.size()-1.
std::string svg_bar_chart(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<double>& values);

}  // namespace bornsim::cli

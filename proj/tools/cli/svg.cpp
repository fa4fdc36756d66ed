#include "cli/svg.hpp"

#include <algorithm>
#include <cmath>

#include "cli/writers.hpp"

namespace bornsim::cli {

namespace {

constexpr double kWidth = 720.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 72.0;
constexpr double kRight = 24.0;
constexpr double kTop = 44.0;
constexpr double kBottom = 56.0;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd"};

struct Range {
  double lo = 0.0;
  double hi = 1.0;
  void include(double v) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  void widen_if_degenerate() {
    if (hi - lo < 1e-300) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
};

double map_x(double v, const Range& r) {
  return kLeft + (v - r.lo) / (r.hi - r.lo) * (kWidth - kLeft - kRight);
}

double map_y(double v, const Range& r) {
  return kHeight - kBottom -
         (v - r.lo) / (r.hi - r.lo) * (kHeight - kTop - kBottom);
}

void header(std::string& s) {
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"720\" "
       "height=\"480\" viewBox=\"0 0 720 480\">\n";
  s += "<rect width=\"720\" height=\"480\" fill=\"white\"/>\n";
}

void text(std::string& s, double x, double y, const std::string& body,
          const std::string& anchor = "middle", int size = 13,
          const std::string& fill = "#202020") {
  s += "<text x=\"" + format_double_compact(x) + "\" y=\"" +
       format_double_compact(y) + "\" font-family=\"sans-serif\" font-size=\"" +
       std::to_string(size) + "\" text-anchor=\"" + anchor + "\" fill=\"" +
       fill + "\">" + body + "</text>\n";
}

void axes(std::string& s, const std::string& title, const std::string& x_label,
          const std::string& y_label, const Range& xr, const Range& yr) {
  text(s, kWidth / 2, 24, title, "middle", 15);
  text(s, kWidth / 2, kHeight - 14, x_label);
  // Vertical axis label, rotated.
  s += "<text x=\"18\" y=\"" + format_double_compact(kHeight / 2) +
       "\" font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\" "
       "fill=\"#202020\" transform=\"rotate(-90 18 " +
       format_double_compact(kHeight / 2) + ")\">" + y_label + "</text>\n";

  s += "<line x1=\"" + format_double_compact(kLeft) + "\" y1=\"" +
       format_double_compact(kHeight - kBottom) + "\" x2=\"" +
       format_double_compact(kWidth - kRight) + "\" y2=\"" +
       format_double_compact(kHeight - kBottom) +
       "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";
  s += "<line x1=\"" + format_double_compact(kLeft) + "\" y1=\"" +
       format_double_compact(kTop) + "\" x2=\"" + format_double_compact(kLeft) +
       "\" y2=\"" + format_double_compact(kHeight - kBottom) +
       "\" stroke=\"#202020\" stroke-width=\"1\"/>\n";

  for (int i = 0; i <= 4; ++i) {
    const double fx = xr.lo + (xr.hi - xr.lo) * i / 4.0;
    const double fy = yr.lo + (yr.hi - yr.lo) * i / 4.0;
    const double px = map_x(fx, xr);
    const double py = map_y(fy, yr);
    s += "<line x1=\"" + format_double_compact(px) + "\" y1=\"" +
         format_double_compact(kHeight - kBottom) + "\" x2=\"" +
         format_double_compact(px) + "\" y2=\"" +
         format_double_compact(kHeight - kBottom + 5) +
         "\" stroke=\"#202020\"/>\n";
    text(s, px, kHeight - kBottom + 20, format_double_compact(fx), "middle",
         11);
    s += "<line x1=\"" + format_double_compact(kLeft - 5) + "\" y1=\"" +
         format_double_compact(py) + "\" x2=\"" + format_double_compact(kLeft) +
         "\" y2=\"" + format_double_compact(py) + "\" stroke=\"#202020\"/>\n";
    text(s, kLeft - 9, py + 4, format_double_compact(fy), "end", 11);
  }
}

}  // namespace

std::string svg_line_chart(const std::string& title,
                           const std::string& x_label,
                           const std::string& y_label,
                           const std::vector<Series>& series) {
  Range xr{1e300, -1e300}, yr{1e300, -1e300};
  for (const Series& s : series) {
    for (double v : s.x) xr.include(v);
    for (double v : s.y) yr.include(v);
  }
  xr.widen_if_degenerate();
  yr.widen_if_degenerate();

  std::string out;
  header(out);
  axes(out, title, x_label, y_label, xr, yr);

  for (std::size_t i = 0; i < series.size(); ++i) {
    const Series& s = series[i];
    const char* color = kPalette[i % 4];
    std::string points;
    for (std::size_t j = 0; j < s.x.size(); ++j) {
      points += format_double_compact(map_x(s.x[j], xr));
      points += ',';
      points += format_double_compact(map_y(s.y[j], yr));
      points += ' ';
    }
    out += "<polyline fill=\"none\" stroke=\"";
    out += color;
    out += "\" stroke-width=\"1.5\" points=\"" + points + "\"/>\n";
    text(out, kWidth - kRight - 6,
         kTop + 16.0 * static_cast<double>(i) + 12.0, s.label, "end", 12,
         color);
  }
  out += "</svg>\n";
  return out;
}

std::string svg_bar_chart(const std::string& title, const std::string& x_label,
                          const std::string& y_label,
                          const std::vector<double>& values) {
  Range xr{-0.5, static_cast<double>(values.size()) - 0.5};
  Range yr{0.0, 0.0};
  for (double v : values) yr.include(v);
  yr.widen_if_degenerate();

  std::string out;
  header(out);
  axes(out, title, x_label, y_label, xr, yr);

  const double slot =
      (kWidth - kLeft - kRight) / static_cast<double>(values.size());
  const double bar = slot * 0.8;
  for (std::size_t p = 0; p < values.size(); ++p) {
    const double x = map_x(static_cast<double>(p), xr) - bar / 2.0;
    const double y = map_y(values[p], yr);
    const double h = (kHeight - kBottom) - y;
    out += "<rect x=\"" + format_double_compact(x) + "\" y=\"" +
           format_double_compact(y) + "\" width=\"" +
           format_double_compact(bar) + "\" height=\"" +
           format_double_compact(h) + "\" fill=\"#1f77b4\"/>\n";
  }
  out += "</svg>\n";
  return out;
}

}  // namespace bornsim::cli

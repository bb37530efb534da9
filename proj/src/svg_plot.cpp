#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "idnc/harness.hpp"

namespace idnc::harness {

namespace {

constexpr int kWidth = 800;
constexpr int kHeight = 520;
constexpr int kMarginLeft = 70;
constexpr int kMarginRight = 170;
constexpr int kMarginTop = 30;
constexpr int kMarginBottom = 60;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b"};

std::string fmt(double v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

}  // namespace

void emit_svg_plot(const std::vector<SweepRow>& rows, const std::string& path) {
  if (rows.empty()) throw std::invalid_argument("nothing to plot: empty sweep table");

  // Series keyed by policy, points ordered as emitted (axis values ascending
  // per sweep construction).
  std::map<std::string, std::vector<std::pair<double, double>>> series;
  double xmin = rows.front().axis_value, xmax = xmin;
  double ymin = rows.front().stats.mean_delivery, ymax = ymin;
  for (const auto& row : rows) {
    series[row.stats.policy].push_back({row.axis_value, row.stats.mean_delivery});
    xmin = std::min(xmin, row.axis_value);
    xmax = std::max(xmax, row.axis_value);
    ymin = std::min(ymin, row.stats.mean_delivery);
    ymax = std::max(ymax, row.stats.mean_delivery);
  }
  if (xmax == xmin) {
    xmin -= 1.0;
    xmax += 1.0;
  }
  if (ymax == ymin) {
    ymin -= 1.0;
    ymax += 1.0;
  }

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  auto sx = [&](double x) { return kMarginLeft + (x - xmin) / (xmax - xmin) * plot_w; };
  auto sy = [&](double y) { return kMarginTop + plot_h - (y - ymin) / (ymax - ymin) * plot_h; };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
      << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop + plot_h << "\" x2=\""
      << kMarginLeft + plot_w << "\" y2=\"" << kMarginTop + plot_h
      << "\" stroke=\"black\"/>\n";
  svg << "<line x1=\"" << kMarginLeft << "\" y1=\"" << kMarginTop << "\" x2=\"" << kMarginLeft
      << "\" y2=\"" << kMarginTop + plot_h << "\" stroke=\"black\"/>\n";

  // ticks: min, mid, max on both axes
  for (double t : {0.0, 0.5, 1.0}) {
    const double xv = xmin + t * (xmax - xmin);
    const double yv = ymin + t * (ymax - ymin);
    svg << "<text x=\"" << sx(xv) << "\" y=\"" << kMarginTop + plot_h + 20
        << "\" font-size=\"12\" text-anchor=\"middle\">" << fmt(xv) << "</text>\n";
    svg << "<text x=\"" << kMarginLeft - 8 << "\" y=\"" << sy(yv) + 4
        << "\" font-size=\"12\" text-anchor=\"end\">" << fmt(yv) << "</text>\n";
  }
  svg << "<text x=\"" << kMarginLeft + plot_w / 2 << "\" y=\"" << kHeight - 15
      << "\" font-size=\"14\" text-anchor=\"middle\">" << axis_name(rows.front().axis)
      << "</text>\n";
  svg << "<text x=\"18\" y=\"" << kMarginTop + plot_h / 2
      << "\" font-size=\"14\" text-anchor=\"middle\" transform=\"rotate(-90 18 "
      << kMarginTop + plot_h / 2 << ")\">mean overall delivery time</text>\n";

  int color = 0;
  int legend_y = kMarginTop + 10;
  for (const auto& [policy, points] : series) {
    const char* stroke = kPalette[color % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y] : points) svg << sx(x) << ',' << sy(y) << ' ';
    svg << "\"/>\n";
    for (const auto& [x, y] : points)
      svg << "<circle cx=\"" << sx(x) << "\" cy=\"" << sy(y) << "\" r=\"3\" fill=\"" << stroke
          << "\"/>\n";
    svg << "<rect x=\"" << kWidth - kMarginRight + 10 << "\" y=\"" << legend_y - 9
        << "\" width=\"14\" height=\"4\" fill=\"" << stroke << "\"/>\n";
    svg << "<text x=\"" << kWidth - kMarginRight + 30 << "\" y=\"" << legend_y
        << "\" font-size=\"12\">" << policy << "</text>\n";
    legend_y += 18;
    ++color;
  }
  svg << "</svg>\n";

  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << svg.str();
  if (!out.good()) throw std::runtime_error("write failed for " + path);
}

}  // namespace idnc::harness

#include "ichannel/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace ichannel {

namespace {

constexpr int kWidth = 760;
constexpr int kHeight = 500;
constexpr int kMarginLeft = 64;
constexpr int kMarginRight = 200;  // room for the legend
constexpr int kMarginTop = 40;
constexpr int kMarginBottom = 52;

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v == 0.0 ? 0.0 : v);
  return buf;
}

/// Largest of 1, 2, 5 times a power of ten giving at most ~6 ticks.
double tick_step(double span) {
  if (span <= 0.0) return 1.0;
  const double raw = span / 5.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) return m * mag;
  }
  return 10.0 * mag;
}

std::string escape_xml(const std::string& s) {
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

}  // namespace

std::string render_plot_svg(const std::vector<PlotSeries>& series, const std::string& title,
                            double fixed_axis_max) {
  double rmax = 0.0;
  for (const auto& s : series) {
    for (const auto& v : s.polygon) rmax = std::max({rmax, v.r1, v.r2});
  }
  if (rmax <= 0.0) rmax = 1.0;
  const double axis_max = fixed_axis_max > 0.0 ? fixed_axis_max : rmax * 1.05;

  const double plot_w = kWidth - kMarginLeft - kMarginRight;
  const double plot_h = kHeight - kMarginTop - kMarginBottom;
  const auto sx = [&](double r1) { return kMarginLeft + r1 / axis_max * plot_w; };
  const auto sy = [&](double r2) { return kMarginTop + plot_h - r2 / axis_max * plot_h; };

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\""
     << kHeight << "\" viewBox=\"0 0 " << kWidth << " " << kHeight << "\">\n";
  os << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
  os << "<clipPath id=\"plot-area\"><rect x=\"" << kMarginLeft << "\" y=\"" << kMarginTop
     << "\" width=\"" << fmt(plot_w) << "\" height=\"" << fmt(plot_h) << "\"/></clipPath>\n";
  os << "<text x=\"" << kMarginLeft << "\" y=\"24\" font-family=\"sans-serif\" "
        "font-size=\"16\">"
     << escape_xml(title) << "</text>\n";

  // Axes with ticks.
  const double x0 = sx(0.0), y0 = sy(0.0);
  os << "<g stroke=\"black\" stroke-width=\"1\">\n";
  os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(sx(axis_max))
     << "\" y2=\"" << fmt(y0) << "\"/>\n";
  os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(x0) << "\" y2=\""
     << fmt(sy(axis_max)) << "\"/>\n";
  os << "</g>\n";
  os << "<g font-family=\"sans-serif\" font-size=\"11\" fill=\"black\">\n";
  const double step = tick_step(axis_max);
  for (double t = 0.0; t <= axis_max + 1e-12; t += step) {
    os << "<line x1=\"" << fmt(sx(t)) << "\" y1=\"" << fmt(y0) << "\" x2=\"" << fmt(sx(t))
       << "\" y2=\"" << fmt(y0 + 4) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(sx(t)) << "\" y=\"" << fmt(y0 + 17)
       << "\" text-anchor=\"middle\">" << fmt(t) << "</text>\n";
    os << "<line x1=\"" << fmt(x0) << "\" y1=\"" << fmt(sy(t)) << "\" x2=\"" << fmt(x0 - 4)
       << "\" y2=\"" << fmt(sy(t)) << "\" stroke=\"black\"/>\n";
    os << "<text x=\"" << fmt(x0 - 7) << "\" y=\"" << fmt(sy(t) + 4)
       << "\" text-anchor=\"end\">" << fmt(t) << "</text>\n";
  }
  os << "<text x=\"" << fmt(x0 + plot_w / 2) << "\" y=\"" << fmt(y0 + 38)
     << "\" text-anchor=\"middle\" font-size=\"13\">R1 (nats per channel use)</text>\n";
  os << "<text x=\"18\" y=\"" << fmt(kMarginTop + plot_h / 2)
     << "\" text-anchor=\"middle\" font-size=\"13\" transform=\"rotate(-90 18 "
     << fmt(kMarginTop + plot_h / 2) << ")\">R2 (nats per channel use)</text>\n";
  os << "</g>\n";

  // One polygon per series.
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
    os << "<polygon clip-path=\"url(#plot-area)\" fill=\"" << color
       << "\" fill-opacity=\"0.12\" stroke=\"" << color << "\" stroke-width=\"1.6\" points=\"";
    for (std::size_t j = 0; j < series[k].polygon.size(); ++j) {
      if (j) os << ' ';
      os << fmt(sx(series[k].polygon[j].r1)) << ',' << fmt(sy(series[k].polygon[j].r2));
    }
    os << "\"/>\n";
  }

  // Legend.
  const double lx = kWidth - kMarginRight + 16;
  double ly = kMarginTop + 8;
  os << "<g font-family=\"sans-serif\" font-size=\"12\" fill=\"black\">\n";
  for (std::size_t k = 0; k < series.size(); ++k) {
    const char* color = kPalette[k % (sizeof(kPalette) / sizeof(kPalette[0]))];
    os << "<rect x=\"" << fmt(lx) << "\" y=\"" << fmt(ly - 10) << "\" width=\"14\" height=\"14\""
       << " fill=\"" << color << "\" fill-opacity=\"0.35\" stroke=\"" << color << "\"/>\n";
    os << "<text x=\"" << fmt(lx + 20) << "\" y=\"" << fmt(ly + 1) << "\">"
       << escape_xml(series[k].label) << "</text>\n";
    ly += 22;
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace ichannel

#pragma once

#include <string>
#include <vector>

#include "ichannel/region.hpp"

namespace ichannel {

/// One plotted region: a label for the legend and its boundary polygon in
/// rate coordinates (nats per channel use).
struct PlotSeries {
  std::string label;
  std::vector<RatePoint> polygon;
};

/// Renders the series on a single deterministic SVG plot: rate axes with
/// tick labels, one <polygon> element per series, and a legend. A positive
/// axis_max fixes both axes at that many nats; 0 scales to the data.
std::string render_plot_svg(const std::vector<PlotSeries>& series, const std::string& title,
                            double axis_max = 0.0);

}  // namespace ichannel

#pragma once

#include <string>

#include "ichannel/region.hpp"

namespace ichannel {

/// Vertex CSV: header "R1,R2", one vertex per line in counter-clockwise
/// order starting at the origin, 9 significant digits.
std::string vertices_csv(const RatePolytope& p);

/// Formats one value with 9 significant digits (the CSV/SVG number format).
std::string format_sig9(double v);

}  // namespace ichannel

#include "ichannel/csv_io.hpp"

#include <cstdio>

namespace ichannel {

std::string format_sig9(double v) {
  if (v == 0.0) v = 0.0;  // normalize -0
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string vertices_csv(const RatePolytope& p) {
  std::string out = "R1,R2\n";
  for (const auto& v : vertices(p)) {
    out += format_sig9(v.r1);
    out += ',';
    out += format_sig9(v.r2);
    out += '\n';
  }
  return out;
}

}  // namespace ichannel

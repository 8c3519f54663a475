#include "ichannel/region.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ichannel/errors.hpp"

namespace ichannel {

namespace {

constexpr double kDedupeTol = 1e-12;

double cross(const RatePoint& o, const RatePoint& a, const RatePoint& b) {
  return (a.r1 - o.r1) * (b.r2 - o.r2) - (a.r2 - o.r2) * (b.r1 - o.r1);
}

bool close(const RatePoint& a, const RatePoint& b, double tol = kDedupeTol) {
  return std::hypot(a.r1 - b.r1, a.r2 - b.r2) <= tol;
}

/// Intersection of lines a1*x + b1*y = c1 and a2*x + b2*y = c2.
std::optional<RatePoint> line_intersection(double a1, double b1, double c1,
                                           double a2, double b2, double c2) {
  const double det = a1 * b2 - a2 * b1;
  const double scale = std::max({std::abs(a1), std::abs(b1), std::abs(a2), std::abs(b2), 1.0});
  if (std::abs(det) <= 1e-14 * scale * scale) return std::nullopt;
  return RatePoint{(c1 * b2 - c2 * b1) / det, (a1 * c2 - a2 * c1) / det};
}

/// Ordered extreme points of a feasible candidate cloud: angular sort around
/// the centroid (ties broken by distance), rotated so the origin comes first,
/// oriented counter-clockwise.
std::vector<RatePoint> order_ccw(std::vector<RatePoint> pts) {
  if (pts.size() < 2) return pts;
  RatePoint centroid{0.0, 0.0};
  for (const auto& p : pts) {
    centroid.r1 += p.r1;
    centroid.r2 += p.r2;
  }
  centroid.r1 /= static_cast<double>(pts.size());
  centroid.r2 /= static_cast<double>(pts.size());
  std::sort(pts.begin(), pts.end(), [&](const RatePoint& a, const RatePoint& b) {
    const double ta = std::atan2(a.r2 - centroid.r2, a.r1 - centroid.r1);
    const double tb = std::atan2(b.r2 - centroid.r2, b.r1 - centroid.r1);
    if (ta != tb) return ta < tb;
    const double da = std::hypot(a.r1 - centroid.r1, a.r2 - centroid.r2);
    const double db = std::hypot(b.r1 - centroid.r1, b.r2 - centroid.r2);
    return da < db;
  });
  // Origin first.
  std::size_t start = 0;
  double best = std::numeric_limits<double>::max();
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double d = std::hypot(pts[k].r1, pts[k].r2);
    if (d < best) {
      best = d;
      start = k;
    }
  }
  std::rotate(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(start), pts.end());
  // Angular sort around the centroid is already counter-clockwise; guard
  // against degenerate (collinear) clouds where orientation is meaningless.
  double twice_area = 0.0;
  for (std::size_t k = 0; k + 1 < pts.size(); ++k)
    twice_area += cross(pts[0], pts[k], pts[k + 1]);
  if (twice_area < 0.0) std::reverse(pts.begin() + 1, pts.end());
  return pts;
}

/// Monotone-chain convex hull, collinear points within 1e-12 merged.
std::vector<RatePoint> monotone_chain(std::vector<RatePoint> pts) {
  std::sort(pts.begin(), pts.end(), [](const RatePoint& a, const RatePoint& b) {
    if (a.r1 != b.r1) return a.r1 < b.r1;
    return a.r2 < b.r2;
  });
  pts.erase(std::unique(pts.begin(), pts.end(),
                        [](const RatePoint& a, const RatePoint& b) { return close(a, b); }),
            pts.end());
  const std::size_t n = pts.size();
  if (n < 3) return pts;
  std::vector<RatePoint> hull(2 * n);
  std::size_t k = 0;
  for (std::size_t i = 0; i < n; ++i) {
    while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= kDedupeTol) --k;
    hull[k++] = pts[i];
  }
  const std::size_t lower = k + 1;
  for (std::size_t i = n - 1; i-- > 0;) {
    while (k >= lower && cross(hull[k - 2], hull[k - 1], pts[i]) <= kDedupeTol) --k;
    hull[k++] = pts[i];
  }
  hull.resize(k - 1);
  return hull;
}

}  // namespace

RatePolytope::RatePolytope(std::vector<RateConstraint> constraints, std::string annotation)
    : constraints_(std::move(constraints)), annotation_(std::move(annotation)) {
  for (auto& c : constraints_) {
    if (c.a < 0.0 || c.b < 0.0 || (c.a == 0.0 && c.b == 0.0)) {
      throw DomainError("rate constraint needs nonnegative coefficients, not both zero");
    }
    if (c.c < 0.0) {
      c.c = 0.0;
      clamped_ = true;
    }
  }
}

bool contains(const RatePolytope& p, RatePoint pt, double tol) {
  if (pt.r1 < -tol || pt.r2 < -tol) return false;
  for (const auto& c : p.constraints()) {
    if (c.a * pt.r1 + c.b * pt.r2 > c.c + tol) return false;
  }
  return true;
}

std::vector<RatePoint> vertices(const RatePolytope& p) {
  const auto& cs = p.constraints();
  bool bounds_r1 = false, bounds_r2 = false;
  for (const auto& c : cs) {
    if (c.a > 0.0) bounds_r1 = true;
    if (c.b > 0.0) bounds_r2 = true;
  }
  if (!bounds_r1 || !bounds_r2) {
    throw UnboundedError("rate region is unbounded: no binding constraint on an axis");
  }

  // Candidate vertices: all pairwise line intersections, the two axes
  // included. Feasibility filtering keeps the extreme points.
  std::vector<RateConstraint> lines(cs.begin(), cs.end());
  lines.push_back({1.0, 0.0, 0.0});  // R1 = 0
  lines.push_back({0.0, 1.0, 0.0});  // R2 = 0
  std::vector<RatePoint> candidates;
  candidates.push_back({0.0, 0.0});
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto pt = line_intersection(lines[i].a, lines[i].b, lines[i].c,
                                        lines[j].a, lines[j].b, lines[j].c);
      if (pt) candidates.push_back(*pt);
    }
  }

  std::vector<RatePoint> feasible;
  for (auto pt : candidates) {
    // Snap arithmetic residue onto the axes so vertices satisfy
    // nonnegativity exactly.
    if (std::abs(pt.r1) < kDedupeTol) pt.r1 = 0.0;
    if (std::abs(pt.r2) < kDedupeTol) pt.r2 = 0.0;
    if (pt.r1 < 0.0 || pt.r2 < 0.0) continue;
    bool ok = true;
    for (const auto& c : cs) {
      const double slack = c.a * pt.r1 + c.b * pt.r2 - c.c;
      if (slack > 1e-12 * std::max(1.0, std::abs(c.c))) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    bool dup = false;
    for (const auto& q : feasible) {
      if (close(pt, q)) {
        dup = true;
        break;
      }
    }
    if (!dup) feasible.push_back(pt);
  }

  // Interior intersection points (from redundant constraint pairs) are not
  // extreme; keep hull points only.
  if (feasible.size() > 3) {
    auto hull = monotone_chain(feasible);
    if (hull.size() >= 3) feasible = std::move(hull);
  }
  return order_ccw(std::move(feasible));
}

double area(const RatePolytope& p) {
  const auto vs = vertices(p);
  if (vs.size() < 3) return 0.0;
  double twice = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& a = vs[i];
    const auto& b = vs[(i + 1) % vs.size()];
    twice += a.r1 * b.r2 - b.r1 * a.r2;
  }
  return std::abs(twice) / 2.0;
}

RatePolytope convex_hull_union(const std::vector<RatePolytope>& members) {
  if (members.empty()) throw EmptyFamilyError("convex hull of an empty family");
  std::vector<RatePoint> pool;
  for (const auto& m : members) {
    const auto vs = vertices(m);
    pool.insert(pool.end(), vs.begin(), vs.end());
  }
  auto hull = monotone_chain(std::move(pool));

  std::vector<RateConstraint> out;
  if (hull.size() == 1) {
    // Single point; for rate regions this is the origin.
    out.push_back({1.0, 0.0, hull[0].r1});
    out.push_back({0.0, 1.0, hull[0].r2});
  } else if (hull.size() == 2) {
    // Degenerate segment along an axis.
    const double xmax = std::max(hull[0].r1, hull[1].r1);
    const double ymax = std::max(hull[0].r2, hull[1].r2);
    out.push_back({1.0, 0.0, xmax});
    out.push_back({0.0, 1.0, ymax});
  } else {
    // Walk CCW edges; outward normal of edge d is (d.y, -d.x). Edges lying
    // on the axes reproduce the implicit nonnegativity bounds and are
    // dropped.
    for (std::size_t i = 0; i < hull.size(); ++i) {
      const auto& s = hull[i];
      const auto& t = hull[(i + 1) % hull.size()];
      double na = t.r2 - s.r2;
      double nb = -(t.r1 - s.r1);
      const double len = std::hypot(na, nb);
      if (len <= kDedupeTol) continue;
      na /= len;
      nb /= len;
      if (na < -1e-12 || nb < -1e-12) continue;
      na = std::max(na, 0.0);
      nb = std::max(nb, 0.0);
      out.push_back({na, nb, na * s.r1 + nb * s.r2});
    }
  }
  return RatePolytope(std::move(out));
}

std::optional<RatePoint> region_difference_witness(const RatePolytope& p, const RatePolytope& q) {
  for (const auto& v : vertices(p)) {
    if (!contains(q, v)) return v;
  }
  return std::nullopt;
}

GridEstimate grid_oracle(const RatePolytope& p, int resolution) {
  if (resolution < 10) throw DomainError("grid_oracle: resolution must be >= 10");

  double xmax = std::numeric_limits<double>::max();
  double ymax = std::numeric_limits<double>::max();
  for (const auto& c : p.constraints()) {
    if (c.a > 0.0) xmax = std::min(xmax, c.c / c.a);
    if (c.b > 0.0) ymax = std::min(ymax, c.c / c.b);
  }
  if (xmax == std::numeric_limits<double>::max() || ymax == std::numeric_limits<double>::max()) {
    throw UnboundedError("grid_oracle: region is unbounded");
  }

  GridEstimate out;
  if (xmax <= 0.0 || ymax <= 0.0) return out;  // degenerate: zero area

  const double dx = xmax / resolution;
  const double dy = ymax / resolution;
  const long stride =
      std::max<long>(1, static_cast<long>(resolution) * resolution / 1024);
  long feasible = 0;
  for (int i = 0; i < resolution; ++i) {
    const double x = (i + 0.5) * dx;
    for (int j = 0; j < resolution; ++j) {
      const double y = (j + 0.5) * dy;
      bool ok = true;
      for (const auto& c : p.constraints()) {
        if (c.a * x + c.b * y > c.c) {
          ok = false;
          break;
        }
      }
      if (ok) {
        if (feasible % stride == 0) out.sample_points.push_back({x, y});
        ++feasible;
      }
    }
  }
  out.area_estimate = static_cast<double>(feasible) * dx * dy;
  return out;
}

}  // namespace ichannel

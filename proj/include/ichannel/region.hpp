#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ichannel {

/// A point in the (R1, R2) rate quadrant, in nats per channel use.
struct RatePoint {
  double r1 = 0.0;
  double r2 = 0.0;
};

/// Half-plane a*R1 + b*R2 <= c with a, b >= 0 and (a, b) != (0, 0).
/// Region builders emit the coefficient shapes (1,0), (0,1), (1,1), (2,1),
/// (1,2); convex hulls may emit arbitrary nonnegative normals.
struct RateConstraint {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// A bounded convex region in the nonnegative rate quadrant, stored as an
/// intersection of half-planes (R1 >= 0 and R2 >= 0 are implicit).
/// Constraints are the source of truth; vertices are computed on demand.
class RatePolytope {
 public:
  RatePolytope() = default;

  /// Negative bounds are clamped to 0 and flagged; a clamped region is the
  /// legitimate degenerate answer for parameter corners such as NS = 0.
  explicit RatePolytope(std::vector<RateConstraint> constraints, std::string annotation = {});

  const std::vector<RateConstraint>& constraints() const { return constraints_; }
  const std::string& annotation() const { return annotation_; }
  void set_annotation(std::string a) { annotation_ = std::move(a); }
  bool clamped() const { return clamped_; }

 private:
  std::vector<RateConstraint> constraints_;
  std::string annotation_;
  bool clamped_ = false;
};

/// Counter-clockwise extreme points of the feasible set, starting at the
/// origin, with duplicates within 1e-12 merged. Throws UnboundedError if the
/// constraints do not bound the region on some axis.
std::vector<RatePoint> vertices(const RatePolytope& p);

/// Shoelace area of the vertex polygon, in nats^2.
double area(const RatePolytope& p);

/// True iff every constraint (and nonnegativity) holds within tol.
bool contains(const RatePolytope& p, RatePoint pt, double tol = 1e-9);

/// Smallest convex region containing every member: pooled member vertices,
/// monotone-chain hull, re-expressed as half-plane constraints.
/// Throws EmptyFamilyError on an empty list.
RatePolytope convex_hull_union(const std::vector<RatePolytope>& members);

/// A vertex of p that is not contained in q, or nullopt if p is a subset
/// of q (convexity makes the vertex check sufficient).
std::optional<RatePoint> region_difference_witness(const RatePolytope& p, const RatePolytope& q);

struct GridEstimate {
  double area_estimate = 0.0;
  std::vector<RatePoint> sample_points;  ///< feasible cell centers, strided to <= 1024
};

/// Independent area estimate: rasterizes the bounding box at resolution^2
/// cells and counts cells whose center is feasible. resolution >= 10.
GridEstimate grid_oracle(const RatePolytope& p, int resolution);

}  // namespace ichannel

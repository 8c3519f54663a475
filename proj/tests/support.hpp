#pragma once

#include <algorithm>
#include <cmath>
#include <random>
#include <vector>

#include "ichannel/channel.hpp"
#include "ichannel/region.hpp"

namespace ichannel::testing {

inline ChannelParams make_params(double self, double cross, double ns, double nb) {
  ChannelParams p;
  p.eta11 = p.eta22 = self;
  p.eta12 = p.eta21 = cross;
  p.ns1 = p.ns2 = ns;
  p.nb1 = p.nb2 = nb;
  return p;
}

/// Random valid channels: sample eta11, eta22 and a cross-coupling ratio t,
/// set eta21 = t*eta11 and eta12 = t*eta22 so the unitarity constraint holds
/// by construction, and reject draws violating passivity.
class RandomChannels {
 public:
  explicit RandomChannels(unsigned seed) : rng_(seed) {}

  ChannelParams next() {
    std::uniform_real_distribution<double> unit(0.01, 0.99);
    std::uniform_real_distribution<double> ratio(0.02, 8.0);
    std::uniform_real_distribution<double> photons(0.0, 3.0);  // log10 scale
    for (;;) {
      ChannelParams p;
      p.eta11 = unit(rng_);
      p.eta22 = unit(rng_);
      const double t = ratio(rng_);
      p.eta21 = t * p.eta11;
      p.eta12 = t * p.eta22;
      if (p.eta21 > 1.0 || p.eta12 > 1.0) continue;
      if (p.eta11 + p.eta12 > 1.0 || p.eta11 + p.eta21 > 1.0 || p.eta22 + p.eta21 > 1.0 ||
          p.eta22 + p.eta12 > 1.0) {
        continue;
      }
      p.ns1 = std::pow(10.0, photons(rng_)) - 1.0;
      p.ns2 = std::pow(10.0, photons(rng_)) - 1.0;
      p.nb1 = std::pow(10.0, photons(rng_) * 0.5) - 1.0;
      p.nb2 = std::pow(10.0, photons(rng_) * 0.5) - 1.0;
      return p;
    }
  }

  /// Same draw with both senders and receivers statistically identical.
  ChannelParams next_symmetric() {
    auto p = next();
    p.eta22 = p.eta11;
    p.eta12 = p.eta21;
    p.ns2 = p.ns1;
    p.nb2 = p.nb1;
    return p;
  }

  std::mt19937& rng() { return rng_; }

 private:
  std::mt19937 rng_;
};

/// The bound c of the unique constraint with coefficients (a, b), or NaN.
inline double bound_for(const RatePolytope& p, double a, double b) {
  for (const auto& c : p.constraints()) {
    if (c.a == a && c.b == b) return c.c;
  }
  return std::numeric_limits<double>::quiet_NaN();
}

inline double max_r1(const RatePolytope& p) {
  double m = 0.0;
  for (const auto& v : vertices(p)) m = std::max(m, v.r1);
  return m;
}

inline double max_r2(const RatePolytope& p) {
  double m = 0.0;
  for (const auto& v : vertices(p)) m = std::max(m, v.r2);
  return m;
}

inline double polygon_perimeter(const std::vector<RatePoint>& vs) {
  double per = 0.0;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const auto& a = vs[i];
    const auto& b = vs[(i + 1) % vs.size()];
    per += std::hypot(a.r1 - b.r1, a.r2 - b.r2);
  }
  return per;
}

/// Mirror of a polytope across the R1 = R2 diagonal.
inline RatePolytope mirrored(const RatePolytope& p) {
  std::vector<RateConstraint> out;
  for (const auto& c : p.constraints()) out.push_back({c.b, c.a, c.c});
  return RatePolytope(out);
}

}  // namespace ichannel::testing

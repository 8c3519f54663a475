#include "ichannel/han_kobayashi.hpp"

#include <algorithm>
#include <cmath>

#include "ichannel/entropies.hpp"
#include "ichannel/errors.hpp"

namespace ichannel {

namespace {

/// Received powers of the three decoded message parts at one receiver, the
/// residual power of the never-decoded part (the other sender's personal
/// message), and the receiver's noise figures.
struct MacView {
  double personal_self = 0.0;
  double common_self = 0.0;
  double common_other = 0.0;
  double residual = 0.0;
  double thermal_noise = 0.0;  // etaBar * NB, for entropy-based terms
};

MacView mac_view_r1(const ChannelParams& p, const PowerSplit& s) {
  MacView m;
  m.personal_self = p.eta11 * s.lambda1 * p.ns1;
  m.common_self = p.eta11 * (1.0 - s.lambda1) * p.ns1;
  m.common_other = p.eta21 * (1.0 - s.lambda2) * p.ns2;
  m.residual = p.eta21 * s.lambda2 * p.ns2;
  m.thermal_noise = p.eta_bar1() * p.nb1;
  return m;
}

MacView mac_view_r2(const ChannelParams& p, const PowerSplit& s) {
  MacView m;
  m.personal_self = p.eta22 * s.lambda2 * p.ns2;
  m.common_self = p.eta22 * (1.0 - s.lambda2) * p.ns2;
  m.common_other = p.eta12 * (1.0 - s.lambda1) * p.ns1;
  m.residual = p.eta12 * s.lambda1 * p.ns1;
  m.thermal_noise = p.eta_bar2() * p.nb2;
  return m;
}

double subset_power(const MacView& m, int mask) {
  double p = 0.0;
  if (mask & kPersonalSelf) p += m.personal_self;
  if (mask & kCommonSelf) p += m.common_self;
  if (mask & kCommonOther) p += m.common_other;
  return p;
}

enum class TermKind { Coherent, VonNeumann, MinEntropy };

/// One MAC decoding bound: the rate of the message subset `mask` given the
/// complement is decoded (conditioned away) and the residual is noise.
struct TermEval {
  const MacView& mac;
  TermKind all_kind;      // Coherent for the Shannon builders
  int vn_mask = 0;        // subset whose bound keeps the von Neumann term
  double shannon_noise = 0.0;  // N_m; used by TermKind::Coherent only
  Detection det = Detection::Homodyne;

  double operator()(int mask) const {
    const double signal = subset_power(mac, mask);
    if (all_kind == TermKind::Coherent) {
      return coherent_rate(signal / (mac.residual + shannon_noise), det);
    }
    const double floor = mac.residual + mac.thermal_noise;
    const bool von_neumann = all_kind == TermKind::VonNeumann || mask == vn_mask;
    const double lead = von_neumann ? thermal_entropy(signal + floor)
                                    : thermal_min_entropy(signal + floor);
    return lead - thermal_entropy(floor);
  }
};

/// The reduced rate-splitting inequality system. Writing a=({P}), b=({P,C}),
/// c=({P,X}), d=({P,C,X}), f=({X}) for each receiver's bounds:
///   R1 <= b1,  R1 <= a1 + f2,   (mirrored for R2)
///   R1+R2 <= min(a1 + d2, a2 + d1, c1 + c2)
///   2R1+R2 <= a1 + d1 + c2,  R1+2R2 <= a2 + d2 + c1.
RatePolytope assemble(const TermEval& t1, const TermEval& t2, std::string annotation) {
  constexpr int P = kPersonalSelf;
  constexpr int PC = kPersonalSelf | kCommonSelf;
  constexpr int PX = kPersonalSelf | kCommonOther;
  constexpr int PCX = kPersonalSelf | kCommonSelf | kCommonOther;
  constexpr int X = kCommonOther;

  const double a1 = t1(P), b1 = t1(PC), c1 = t1(PX), d1 = t1(PCX), f1 = t1(X);
  const double a2 = t2(P), b2 = t2(PC), c2 = t2(PX), d2 = t2(PCX), f2 = t2(X);

  const double r1_bound = std::min(b1, a1 + f2);
  const double r2_bound = std::min(b2, a2 + f1);
  const double sum_bound = std::min({a1 + d2, a2 + d1, c1 + c2});
  const double two1_bound = a1 + d1 + c2;
  const double two2_bound = a2 + d2 + c1;

  return RatePolytope({{1.0, 0.0, r1_bound},
                       {0.0, 1.0, r2_bound},
                       {1.0, 1.0, sum_bound},
                       {2.0, 1.0, two1_bound},
                       {1.0, 2.0, two2_bound}},
                      std::move(annotation));
}

}  // namespace

PowerSplit validate(const PowerSplit& split) {
  if (!(split.lambda1 >= 0.0 && split.lambda1 <= 1.0) ||
      !(split.lambda2 >= 0.0 && split.lambda2 <= 1.0)) {
    throw RangeError("power split fractions must be in [0,1]");
  }
  return split;
}

RatePolytope hk_region_coherent(const ChannelParams& p, const PowerSplit& split, Detection det) {
  const auto s = validate(split);
  const auto noise = detection_noise(p, det);
  const auto m1 = mac_view_r1(p, s);
  const auto m2 = mac_view_r2(p, s);
  const TermEval t1{m1, TermKind::Coherent, 0, noise.n1, det};
  const TermEval t2{m2, TermKind::Coherent, 0, noise.n2, det};
  return assemble(t1, t2, "achievable");
}

RatePolytope hk_region_quantum_conjectured(const ChannelParams& p, const PowerSplit& split) {
  const auto s = validate(split);
  const auto m1 = mac_view_r1(p, s);
  const auto m2 = mac_view_r2(p, s);
  const TermEval t1{m1, TermKind::VonNeumann, 0, 0.0, Detection::Joint};
  const TermEval t2{m2, TermKind::VonNeumann, 0, 0.0, Detection::Joint};
  return assemble(t1, t2, "conjectured");
}

RatePolytope hk_region_minentropy(const ChannelParams& p, const PowerSplit& split,
                                  const HKFlavorAssignment& flavor) {
  const auto s = validate(split);
  if (flavor.vn_subset_r1 < 1 || flavor.vn_subset_r1 > 7 || flavor.vn_subset_r2 < 1 ||
      flavor.vn_subset_r2 > 7) {
    throw FlavorError("von Neumann subset must be one of the seven nonempty message subsets");
  }
  const auto m1 = mac_view_r1(p, s);
  const auto m2 = mac_view_r2(p, s);
  const TermEval t1{m1, TermKind::MinEntropy, flavor.vn_subset_r1, 0.0, Detection::Joint};
  const TermEval t2{m2, TermKind::MinEntropy, flavor.vn_subset_r2, 0.0, Detection::Joint};
  return assemble(t1, t2, "achievable");
}

RatePolytope hk_region_minentropy_hull(const ChannelParams& p, const PowerSplit& split) {
  std::vector<RatePolytope> members;
  members.reserve(49);
  for (int v1 = 1; v1 <= 7; ++v1) {
    for (int v2 = 1; v2 <= 7; ++v2) {
      members.push_back(hk_region_minentropy(p, split, {v1, v2}));
    }
  }
  auto hull = convex_hull_union(members);
  hull.set_annotation("achievable");
  return hull;
}

RatePolytope sweep_splits(const ChannelParams& p, HkBuilder builder, int grid) {
  if (grid < 2) throw DomainError("sweep_splits: grid must be >= 2");
  std::vector<RatePolytope> members;
  members.reserve(static_cast<std::size_t>(grid) * grid);
  for (int i = 0; i < grid; ++i) {
    for (int j = 0; j < grid; ++j) {
      const PowerSplit s{static_cast<double>(i) / (grid - 1),
                         static_cast<double>(j) / (grid - 1)};
      switch (builder) {
        case HkBuilder::CoherentHomodyne:
          members.push_back(hk_region_coherent(p, s, Detection::Homodyne));
          break;
        case HkBuilder::CoherentHeterodyne:
          members.push_back(hk_region_coherent(p, s, Detection::Heterodyne));
          break;
        case HkBuilder::QuantumConjectured:
          members.push_back(hk_region_quantum_conjectured(p, s));
          break;
        case HkBuilder::MinEntropyHull:
          members.push_back(hk_region_minentropy_hull(p, s));
          break;
      }
    }
  }
  auto hull = convex_hull_union(members);
  hull.set_annotation(builder == HkBuilder::QuantumConjectured ? "conjectured" : "achievable");
  return hull;
}

}  // namespace ichannel

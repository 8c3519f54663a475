#include "ichannel/regimes.hpp"

#include <algorithm>
#include <cmath>

#include "ichannel/entropies.hpp"
#include "ichannel/errors.hpp"

namespace ichannel {

namespace {

/// Signal powers arriving at one receiver, plus its thermal load.
struct ReceiverView {
  double own = 0.0;    // partner sender's received power
  double cross = 0.0;  // interfering sender's received power
  double noise = 0.0;  // etaBar * NB
};

ReceiverView receiver1_view(const ChannelParams& p) {
  return {p.eta11 * p.ns1, p.eta21 * p.ns2, p.eta_bar1() * p.nb1};
}

ReceiverView receiver2_view(const ChannelParams& p) {
  return {p.eta22 * p.ns2, p.eta12 * p.ns1, p.eta_bar2() * p.nb2};
}

ConditionMargin make_margin(double lhs, double rhs) { return {lhs, rhs, lhs >= rhs}; }

/// Leading-term functional for one simultaneous-decoding bound.
double flavored_bound(Flavor f, double total, double noise) {
  const double lead =
      f == Flavor::VonNeumann ? thermal_entropy(total) : thermal_min_entropy(total);
  return lead - thermal_entropy(noise);
}

void require_at_most_one_vn(const ReceiverFlavors& f, const char* which) {
  const int vn = (f.own_rate == Flavor::VonNeumann) + (f.cross_rate == Flavor::VonNeumann) +
                 (f.sum_rate == Flavor::VonNeumann);
  if (vn > 1) {
    throw FlavorError(std::string("at most one von Neumann bound per receiver (") + which + ")");
  }
}

RatePolytope box_region(double c1, double c2, std::string annotation) {
  return RatePolytope({{1.0, 0.0, c1}, {0.0, 1.0, c2}}, std::move(annotation));
}

}  // namespace

std::string to_string(Regime r) {
  switch (r) {
    case Regime::VeryStrong:
      return "very-strong";
    case Regime::Strong:
      return "strong";
    case Regime::Neither:
      return "neither";
  }
  return "unknown";
}

RegimeReport classify_coherent(const ChannelParams& p, Detection det) {
  const int i = detection_index(det);
  const double two_i = static_cast<double>(1 << i);
  const double four_i = two_i * two_i;
  const double noise1 = two_i * p.eta_bar1() * p.nb1 + 1.0;
  const double noise2 = two_i * p.eta_bar2() * p.nb2 + 1.0;

  const double ratio21 = p.eta21 / p.eta22;  // interference into receiver 1
  const double ratio12 = p.eta12 / p.eta11;  // interference into receiver 2

  RegimeReport report;
  report.strategy = det;
  report.margins = {
      make_margin(ratio21, (four_i * p.eta11 * p.ns1 + noise1) / noise2),
      make_margin(ratio12, (four_i * p.eta22 * p.ns2 + noise2) / noise1),
      make_margin(ratio21, noise1 / noise2),
      make_margin(ratio12, noise2 / noise1),
  };
  if (report.margins[0].satisfied && report.margins[1].satisfied) {
    report.regime = Regime::VeryStrong;
  } else if (report.margins[2].satisfied && report.margins[3].satisfied) {
    report.regime = Regime::Strong;
  } else {
    report.regime = Regime::Neither;
  }
  return report;
}

RegimeReport check_quantum_vsi(const ChannelParams& p) {
  const auto r1 = receiver1_view(p);
  const auto r2 = receiver2_view(p);

  // Decoding sender 2 first at receiver 1 must not cost more than sender 2's
  // own link supports, and symmetrically for sender 1 at receiver 2.
  const double lhs1 = thermal_entropy(r2.own + r2.noise) - thermal_entropy(r2.noise);
  const double rhs1 =
      thermal_entropy(r1.cross + r1.own + r1.noise) - thermal_entropy(r1.own + r1.noise);
  const double lhs2 = thermal_entropy(r1.own + r1.noise) - thermal_entropy(r1.noise);
  const double rhs2 =
      thermal_entropy(r2.cross + r2.own + r2.noise) - thermal_entropy(r2.own + r2.noise);

  RegimeReport report;
  report.strategy = Detection::Joint;
  report.margins = {make_margin(rhs1, lhs1), make_margin(rhs2, lhs2)};
  report.regime = (report.margins[0].satisfied && report.margins[1].satisfied)
                      ? Regime::VeryStrong
                      : Regime::Neither;
  return report;
}

namespace {

/// Box corners for the very-strong capacity/achievable region.
std::pair<double, double> vsi_corners(const ChannelParams& p, Detection det) {
  if (det == Detection::Joint) {
    const auto r1 = receiver1_view(p);
    const auto r2 = receiver2_view(p);
    return {thermal_entropy(r1.own + r1.noise) - thermal_entropy(r1.noise),
            thermal_entropy(r2.own + r2.noise) - thermal_entropy(r2.noise)};
  }
  const int i = detection_index(det);
  const double two_i = static_cast<double>(1 << i);
  const double four_i = two_i * two_i;
  const double c1 =
      coherent_rate(four_i * p.eta11 * p.ns1 / (two_i * p.eta_bar1() * p.nb1 + 1.0), det);
  const double c2 =
      coherent_rate(four_i * p.eta22 * p.ns2 / (two_i * p.eta_bar2() * p.nb2 + 1.0), det);
  return {c1, c2};
}

}  // namespace

RatePolytope vsi_region(const ChannelParams& p, Detection det, bool force) {
  if (det == Detection::MinEntropySimultaneous) {
    throw StrategyError("vsi_region: use the strong-interference min-entropy builders");
  }
  const bool regime_ok = det == Detection::Joint
                             ? check_quantum_vsi(p).regime == Regime::VeryStrong
                             : classify_coherent(p, det).regime == Regime::VeryStrong;
  if (!regime_ok && !force) {
    throw RegimeError("channel is not in the very-strong interference regime for " +
                      to_string(det));
  }
  const auto [c1, c2] = vsi_corners(p, det);
  std::string note = regime_ok
                         ? (det == Detection::Joint ? "achievable" : "capacity")
                         : "achievable-only, not capacity";
  return box_region(c1, c2, std::move(note));
}

RatePolytope strong_region_coherent(const ChannelParams& p, Detection det, bool force) {
  const auto report = classify_coherent(p, det);
  if (!strong_conditions_hold(report) && !force) {
    throw RegimeError("channel is not in the strong interference regime for " + to_string(det));
  }
  const int i = detection_index(det);
  const double two_i = static_cast<double>(1 << i);
  const double four_i = two_i * two_i;
  const auto [c1, c2] = vsi_corners(p, det);
  const auto r1 = receiver1_view(p);
  const auto r2 = receiver2_view(p);
  const double sum1 =
      coherent_rate(four_i * (r1.own + r1.cross) / (two_i * r1.noise + 1.0), det);
  const double sum2 =
      coherent_rate(four_i * (r2.own + r2.cross) / (two_i * r2.noise + 1.0), det);
  std::string note = strong_conditions_hold(report) ? "capacity" : "achievable-only, not capacity";
  return RatePolytope({{1.0, 0.0, c1}, {0.0, 1.0, c2}, {1.0, 1.0, std::min(sum1, sum2)}},
                      std::move(note));
}

RatePolytope strong_region_minentropy(const ChannelParams& p, const FlavorAssignment& flavor) {
  require_at_most_one_vn(flavor.receiver1, "receiver 1");
  require_at_most_one_vn(flavor.receiver2, "receiver 2");

  const auto r1 = receiver1_view(p);
  const auto r2 = receiver2_view(p);

  // Receiver 1 decodes both messages: bounds on R1, R2, and the sum.
  const double b1_r1 = flavored_bound(flavor.receiver1.own_rate, r1.own + r1.noise, r1.noise);
  const double b1_r2 = flavored_bound(flavor.receiver1.cross_rate, r1.cross + r1.noise, r1.noise);
  const double b1_sum =
      flavored_bound(flavor.receiver1.sum_rate, r1.own + r1.cross + r1.noise, r1.noise);
  // At receiver 2 the partner sender is sender 2, so its own-rate bound
  // constrains R2 and its cross-rate bound constrains R1.
  const double b2_r2 = flavored_bound(flavor.receiver2.own_rate, r2.own + r2.noise, r2.noise);
  const double b2_r1 = flavored_bound(flavor.receiver2.cross_rate, r2.cross + r2.noise, r2.noise);
  const double b2_sum =
      flavored_bound(flavor.receiver2.sum_rate, r2.own + r2.cross + r2.noise, r2.noise);

  return RatePolytope({{1.0, 0.0, std::min(b1_r1, b2_r1)},
                       {0.0, 1.0, std::min(b1_r2, b2_r2)},
                       {1.0, 1.0, std::min(b1_sum, b2_sum)}},
                      "achievable");
}

std::vector<FlavorAssignment> minentropy_hull_assignments() {
  const ReceiverFlavors all_me{};
  ReceiverFlavors vn_own;
  vn_own.own_rate = Flavor::VonNeumann;
  ReceiverFlavors vn_sum;
  vn_sum.sum_rate = Flavor::VonNeumann;
  const ReceiverFlavors choices[] = {all_me, vn_own, vn_sum};
  std::vector<FlavorAssignment> out;
  for (const auto& f1 : choices) {
    for (const auto& f2 : choices) out.push_back({f1, f2});
  }
  return out;
}

RatePolytope strong_region_minentropy_hull(const ChannelParams& p) {
  std::vector<RatePolytope> members;
  for (const auto& assignment : minentropy_hull_assignments()) {
    members.push_back(strong_region_minentropy(p, assignment));
  }
  auto hull = convex_hull_union(members);
  hull.set_annotation("achievable");
  return hull;
}

RatePolytope strong_region_quantum_conjectured(const ChannelParams& p) {
  const auto r1 = receiver1_view(p);
  const auto r2 = receiver2_view(p);
  const double c1 = thermal_entropy(r1.own + r1.noise) - thermal_entropy(r1.noise);
  const double c2 = thermal_entropy(r2.own + r2.noise) - thermal_entropy(r2.noise);
  const double sum1 = thermal_entropy(r1.own + r1.cross + r1.noise) - thermal_entropy(r1.noise);
  const double sum2 = thermal_entropy(r2.own + r2.cross + r2.noise) - thermal_entropy(r2.noise);
  return RatePolytope(
      {{1.0, 0.0, c1}, {0.0, 1.0, c2}, {1.0, 1.0, std::min(sum1, sum2)}}, "conjectured");
}

}  // namespace ichannel

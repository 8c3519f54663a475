#pragma once

#include <vector>

#include "ichannel/channel.hpp"
#include "ichannel/region.hpp"

namespace ichannel {

enum class Regime { VeryStrong, Strong, Neither };

std::string to_string(Regime r);

/// One interference-condition check: lhs >= rhs.
struct ConditionMargin {
  double lhs = 0.0;
  double rhs = 0.0;
  bool satisfied = false;
};

/// Classification result for one detection strategy. For coherent detection
/// the margins are ordered [very-strong-1, very-strong-2, strong-1,
/// strong-2]; for the joint check they are the two entropy inequalities.
struct RegimeReport {
  Detection strategy = Detection::Homodyne;
  Regime regime = Regime::Neither;
  std::vector<ConditionMargin> margins;
};

/// True iff the strong-interference conditions hold (very strong implies
/// strong, so any regime other than Neither qualifies).
inline bool strong_conditions_hold(const RegimeReport& r) { return r.regime != Regime::Neither; }

/// Interference-regime test for homodyne/heterodyne detection: very strong
/// when both cross-coupling ratios dominate the signal-loaded noise ratios,
/// strong when they dominate the bare noise ratios, else neither.
RegimeReport classify_coherent(const ChannelParams& params, Detection det);

/// Very-strong-interference test for joint detection, phrased as two
/// thermal-entropy-difference inequalities.
RegimeReport check_quantum_vsi(const ChannelParams& params);

/// Capacity box under very strong interference. For coherent detection the
/// corners are (1/2^i) ln(1 + 4^i eta_mm NS_m / (2^i etaBar_m NB_m + 1)); for
/// joint detection they are thermal-entropy differences. Throws RegimeError
/// if the matching regime check fails, unless force is set (the region is
/// then annotated "achievable-only, not capacity").
RatePolytope vsi_region(const ChannelParams& params, Detection det, bool force = false);

/// Capacity pentagon under strong interference for coherent detection: the
/// very-strong box plus the sum-rate bound min over receivers of
/// (1/2^i) ln(1 + 4^i (received signal total)/(2^i etaBar NB + 1)).
RatePolytope strong_region_coherent(const ChannelParams& params, Detection det,
                                    bool force = false);

enum class Flavor { MinEntropy, VonNeumann };

/// Flavor tags for the three decoding bounds of one receiver's two-sender
/// MAC: the bound on its own sender's rate, on the other sender's rate, and
/// on the sum. At most one bound per receiver may be VonNeumann.
struct ReceiverFlavors {
  Flavor own_rate = Flavor::MinEntropy;
  Flavor cross_rate = Flavor::MinEntropy;
  Flavor sum_rate = Flavor::MinEntropy;
};

struct FlavorAssignment {
  ReceiverFlavors receiver1;
  ReceiverFlavors receiver2;
};

/// Simultaneous-decoding achievable region for one flavor assignment. Each
/// receiver contributes bounds on R1, R2, and R1+R2; a MinEntropy bound uses
/// ln(total+1) as its leading term, a VonNeumann bound uses the thermal
/// entropy of the total, and both subtract the thermal entropy of the
/// receiver's noise. Throws FlavorError on an invalid assignment.
RatePolytope strong_region_minentropy(const ChannelParams& params, const FlavorAssignment& flavor);

/// Convex hull over the min-entropy decoder variations. Per receiver the
/// enumerated choices are all-MinEntropy, VonNeumann on the own-rate bound,
/// and VonNeumann on the sum bound (9 variants in total).
RatePolytope strong_region_minentropy_hull(const ChannelParams& params);

/// Strong-interference pentagon with every bound at the Holevo (thermal
/// entropy) value. Achievable only if a quantum simultaneous decoder exists;
/// the output is annotated "conjectured".
RatePolytope strong_region_quantum_conjectured(const ChannelParams& params);

/// The nine flavor assignments used by strong_region_minentropy_hull.
std::vector<FlavorAssignment> minentropy_hull_assignments();

}  // namespace ichannel

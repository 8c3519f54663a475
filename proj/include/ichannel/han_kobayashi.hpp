#pragma once

#include <vector>

#include "ichannel/channel.hpp"
#include "ichannel/region.hpp"

namespace ichannel {

/// Fraction of each sender's photon budget spent on the personal message;
/// the remainder carries the common message.
struct PowerSplit {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
};

/// Throws RangeError unless both fractions are in [0,1].
PowerSplit validate(const PowerSplit& split);

/// Message-part subsets of one receiver's induced three-part MAC, encoded as
/// a bitmask: own personal, own common, other sender's common. The seven
/// nonempty subsets index that MAC's seven decoding bounds.
enum HkMacPart : int {
  kPersonalSelf = 1,
  kCommonSelf = 2,
  kCommonOther = 4,
};

/// Picks, for each receiver MAC, which one of its seven bounds keeps the
/// von Neumann leading term; the other six use min-entropy leading terms.
/// 7 x 7 = 49 valid assignments.
struct HKFlavorAssignment {
  int vn_subset_r1 = kPersonalSelf | kCommonSelf | kCommonOther;
  int vn_subset_r2 = kPersonalSelf | kCommonSelf | kCommonOther;
};

/// Rate-splitting achievable region for coherent detection: the reduced
/// system of nine inequalities (two bounds each on R1 and R2, three on
/// R1+R2, one each on 2R1+R2 and R1+2R2), with per-family minima applied.
RatePolytope hk_region_coherent(const ChannelParams& params, const PowerSplit& split,
                                Detection det);

/// Same inequality structure with every rate term at its Holevo value:
/// thermal_entropy(signal + residual + noise) - thermal_entropy(residual +
/// noise), where the residual is always the other sender's personal power.
/// Annotated "conjectured" (requires a quantum simultaneous decoder).
RatePolytope hk_region_quantum_conjectured(const ChannelParams& params, const PowerSplit& split);

/// Min-entropy simultaneous-decoder region for one of the 49 assignments.
RatePolytope hk_region_minentropy(const ChannelParams& params, const PowerSplit& split,
                                  const HKFlavorAssignment& flavor);

/// Convex hull over all 49 min-entropy assignments.
RatePolytope hk_region_minentropy_hull(const ChannelParams& params, const PowerSplit& split);

enum class HkBuilder {
  CoherentHomodyne,
  CoherentHeterodyne,
  QuantumConjectured,
  MinEntropyHull,
};

/// Convex hull of the selected region builder over the uniform power-split
/// grid {0, 1/(grid-1), ..., 1}^2. Deterministic for a fixed grid.
RatePolytope sweep_splits(const ChannelParams& params, HkBuilder builder, int grid);

}  // namespace ichannel

#pragma once

#include "ichannel/detection.hpp"

namespace ichannel {

/// von Neumann entropy of a thermal state with mean photon number n, in nats:
/// (n+1)ln(n+1) - n ln(n), with the n=0 limit evaluated as 0.
double thermal_entropy(double n);

/// Shannon rate term for coherent detection: ln(1+snr)/2^i, where i is the
/// detection index. Throws StrategyError for non-coherent strategies.
double coherent_rate(double snr, Detection det);

/// Min-entropy of a thermal state with mean photon number n: ln(n+1).
double thermal_min_entropy(double n);

}  // namespace ichannel

#include "ichannel/entropies.hpp"

#include <cmath>

#include "ichannel/errors.hpp"

namespace ichannel {

double thermal_entropy(double n) {
  if (n < 0.0) throw DomainError("thermal_entropy: photon number must be >= 0");
  if (n == 0.0) return 0.0;
  // First-order expansion below 1e-12 avoids the 0*ln(0) indeterminate form
  // while keeping the function monotone through zero.
  if (n < 1e-12) return n * (1.0 - std::log(n));
  return (n + 1.0) * std::log1p(n) - n * std::log(n);
}

double coherent_rate(double snr, Detection det) {
  if (snr < 0.0) throw DomainError("coherent_rate: snr must be >= 0");
  const int i = detection_index(det);  // throws StrategyError for non-coherent
  return std::log1p(snr) / static_cast<double>(1 << i);
}

double thermal_min_entropy(double n) {
  if (n < 0.0) throw DomainError("thermal_min_entropy: photon number must be >= 0");
  return std::log1p(n);
}

}  // namespace ichannel

#pragma once

#include <complex>
#include <utility>

#include "ichannel/detection.hpp"

namespace ichannel {

/// Physical description of the 2x2 mode-mixing channel: four power
/// transmissivities, mean signal photons per mode for each sender, and mean
/// thermal background photons per mode at each receiver.
struct ChannelParams {
  double eta11 = 0.0;  ///< sender 1 -> receiver 1
  double eta12 = 0.0;  ///< sender 1 -> receiver 2
  double eta21 = 0.0;  ///< sender 2 -> receiver 1
  double eta22 = 0.0;  ///< sender 2 -> receiver 2
  double ns1 = 0.0;
  double ns2 = 0.0;
  double nb1 = 0.0;
  double nb2 = 0.0;

  /// Fraction of receiver-1 input drawn from the thermal environment.
  double eta_bar1() const { return 1.0 - eta11 - eta21; }
  /// Fraction of receiver-2 input drawn from the thermal environment.
  double eta_bar2() const { return 1.0 - eta12 - eta22; }
};

/// Checks ranges, the four passivity sums, and the mixing unitarity
/// constraint sqrt(eta11*eta12) == sqrt(eta21*eta22) (tolerance 1e-12).
/// Returns the params unchanged on success. Idempotent.
ChannelParams validate(const ChannelParams& raw);

/// One real Gaussian measurement outcome distribution.
struct GaussianStat {
  double mean = 0.0;
  double variance = 0.0;       // quadrature-noise units
  bool per_quadrature = false; // true for heterodyne outputs
};

/// Real and imaginary quadrature statistics of a heterodyne outcome.
struct QuadratureStats {
  GaussianStat real_part;
  GaussianStat imag_part;
};

/// Homodyne outcome statistics at both receivers for real coherent-state
/// amplitudes alpha1, alpha2. Variance floor is 1/4 (vacuum).
std::pair<GaussianStat, GaussianStat> homodyne_statistics(const ChannelParams& params,
                                                          double alpha1, double alpha2);

/// Heterodyne outcome statistics at both receivers for complex amplitudes.
/// Per-quadrature variance floor is 1/2.
std::pair<QuadratureStats, QuadratureStats> heterodyne_statistics(const ChannelParams& params,
                                                                  std::complex<double> alpha1,
                                                                  std::complex<double> alpha2);

/// Effective noise denominators N_m = (2^i etaBar_m NB_m + 1) / 4^i used by
/// the coherent-detection rate formulas.
struct DetectionNoise {
  double n1 = 0.0;
  double n2 = 0.0;
};

/// Throws StrategyError unless det is homodyne or heterodyne.
DetectionNoise detection_noise(const ChannelParams& params, Detection det);

/// Free-space link geometry: aperture areas (m^2), center wavelength (m),
/// and path length (m). All strictly positive.
struct FresnelGeometry {
  double at = 0.0;
  double ar = 0.0;
  double wavelength = 0.0;
  double range = 0.0;
};

enum class PropagationRegime { NearField, FarField };

struct FresnelSummary {
  double df = 0.0;  ///< Fresnel number product At*Ar/(wavelength*range)^2
  PropagationRegime regime = PropagationRegime::FarField;
  /// Near field: usable mode count ~ 2*Df. Far field: per-mode
  /// transmissivity ~ Df.
  double mode_count_or_eta = 0.0;
};

FresnelSummary fresnel_summary(const FresnelGeometry& geom);

}  // namespace ichannel

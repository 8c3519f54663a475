#include "ichannel/channel.hpp"

#include <cmath>
#include <sstream>

#include "ichannel/errors.hpp"

namespace ichannel {

namespace {

constexpr double kUnitarityTol = 1e-12;

void check_unit_interval(double v, const char* name) {
  if (!(v >= 0.0 && v <= 1.0)) {
    std::ostringstream os;
    os << name << " = " << v << " is outside [0,1]";
    throw RangeError(os.str());
  }
}

void check_nonnegative(double v, const char* name) {
  if (!(v >= 0.0)) {
    std::ostringstream os;
    os << name << " = " << v << " must be >= 0";
    throw RangeError(os.str());
  }
}

}  // namespace

ChannelParams validate(const ChannelParams& raw) {
  check_unit_interval(raw.eta11, "eta11");
  check_unit_interval(raw.eta12, "eta12");
  check_unit_interval(raw.eta21, "eta21");
  check_unit_interval(raw.eta22, "eta22");
  check_nonnegative(raw.ns1, "NS1");
  check_nonnegative(raw.ns2, "NS2");
  check_nonnegative(raw.nb1, "NB1");
  check_nonnegative(raw.nb2, "NB2");

  const struct {
    double sum;
    const char* what;
  } sums[] = {
      {raw.eta11 + raw.eta12, "eta11+eta12"},
      {raw.eta11 + raw.eta21, "eta11+eta21"},
      {raw.eta22 + raw.eta21, "eta22+eta21"},
      {raw.eta22 + raw.eta12, "eta22+eta12"},
  };
  for (const auto& s : sums) {
    if (s.sum > 1.0) {
      std::ostringstream os;
      os << "passivity violated: " << s.what << " = " << s.sum << " > 1";
      throw PassivityError(os.str());
    }
  }

  const double lhs = std::sqrt(raw.eta11 * raw.eta12);
  const double rhs = std::sqrt(raw.eta21 * raw.eta22);
  if (std::abs(lhs - rhs) > kUnitarityTol) {
    std::ostringstream os;
    os << "unitarity violated: sqrt(eta11*eta12) = " << lhs
       << " != sqrt(eta21*eta22) = " << rhs;
    throw UnitarityError(os.str());
  }

  return raw;
}

std::pair<GaussianStat, GaussianStat> homodyne_statistics(const ChannelParams& p,
                                                          double alpha1, double alpha2) {
  GaussianStat r1;
  r1.mean = std::sqrt(p.eta11) * alpha1 + std::sqrt(p.eta21) * alpha2;
  r1.variance = (2.0 * p.eta_bar1() * p.nb1 + 1.0) / 4.0;
  GaussianStat r2;
  r2.mean = std::sqrt(p.eta12) * alpha1 + std::sqrt(p.eta22) * alpha2;
  r2.variance = (2.0 * p.eta_bar2() * p.nb2 + 1.0) / 4.0;
  return {r1, r2};
}

std::pair<QuadratureStats, QuadratureStats> heterodyne_statistics(const ChannelParams& p,
                                                                  std::complex<double> alpha1,
                                                                  std::complex<double> alpha2) {
  const double v1 = (p.eta_bar1() * p.nb1 + 1.0) / 2.0;
  const double v2 = (p.eta_bar2() * p.nb2 + 1.0) / 2.0;
  const double s11 = std::sqrt(p.eta11), s21 = std::sqrt(p.eta21);
  const double s12 = std::sqrt(p.eta12), s22 = std::sqrt(p.eta22);

  QuadratureStats r1;
  r1.real_part = {s11 * alpha1.real() + s21 * alpha2.real(), v1, true};
  r1.imag_part = {s11 * alpha1.imag() + s21 * alpha2.imag(), v1, true};
  QuadratureStats r2;
  r2.real_part = {s12 * alpha1.real() + s22 * alpha2.real(), v2, true};
  r2.imag_part = {s12 * alpha1.imag() + s22 * alpha2.imag(), v2, true};
  return {r1, r2};
}

DetectionNoise detection_noise(const ChannelParams& p, Detection det) {
  const int i = detection_index(det);
  const double two_i = static_cast<double>(1 << i);
  const double four_i = two_i * two_i;
  DetectionNoise out;
  out.n1 = (two_i * p.eta_bar1() * p.nb1 + 1.0) / four_i;
  out.n2 = (two_i * p.eta_bar2() * p.nb2 + 1.0) / four_i;
  return out;
}

FresnelSummary fresnel_summary(const FresnelGeometry& geom) {
  if (!(geom.at > 0.0 && geom.ar > 0.0 && geom.wavelength > 0.0 && geom.range > 0.0)) {
    throw RangeError("fresnel geometry fields must be strictly positive");
  }
  FresnelSummary out;
  const double denom = geom.wavelength * geom.range;
  out.df = geom.at * geom.ar / (denom * denom);
  if (out.df > 1.0) {
    out.regime = PropagationRegime::NearField;
    out.mode_count_or_eta = 2.0 * out.df;
  } else {
    out.regime = PropagationRegime::FarField;
    out.mode_count_or_eta = out.df;
  }
  return out;
}

}  // namespace ichannel

// Single-RF-chain noncoherent power measurements and their means.
#pragma once

#include <stdexcept>

#include "asl/array.hpp"
#include "asl/common.hpp"

namespace asl {

/// One training observation: the beam's lag coordinates, the measured
/// power, and the snapshot index it came from.
struct MeasurementRecord {
  RVec beam_autocorr;  // autocorr(v), zero-lag entry 1 for a unit beam
  double value = 0.0;  // r = |v^H y|^2
  Eigen::Index t = 0;
};

namespace detail {
// Beams must be unit norm; tolerate rounding noise, reject anything worse.
inline CVec checked_unit(const CVec& v, const char* who) {
  const double n = v.norm();
  if (std::abs(n - 1.0) > 1e-6)
    throw std::invalid_argument(std::string(who) + ": beam norm deviates from 1 by " +
                                std::to_string(std::abs(n - 1.0)));
  return v / n;
}
}  // namespace detail

/// Mean of the exponential measurement law for beam v under lag parameter
/// f: sigma^2 + v^H T(f) v, evaluated through the lag inner product.
/// The measurement variance equals the square of this mean.
inline double mean_power(const CVec& v, const CVec& f, double sigma2) {
  const CVec vn = detail::checked_unit(v, "mean_power");
  return sigma2 + autocorr(vn).dot(realify(f));
}

/// Noncoherent observation r = |v^H y|^2 of a snapshot y.
inline double take_measurement(const CVec& v, const CVec& y) {
  const CVec vn = detail::checked_unit(v, "take_measurement");
  return std::norm(vn.dot(y));
}

}  // namespace asl

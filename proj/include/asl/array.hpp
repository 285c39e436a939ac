// Complex ULA algebra: steering vectors, the lag-autocorrelation operator,
// the real<->complex lag coordinate maps, and Hermitian Toeplitz assembly.
//
// Lag coordinate convention used throughout the library: a complex lag
// vector c of length M (zero-lag entry real) is stored in real coordinates
// as a vector r of length 2M-1 with
//   r[0]       = c[0]          (zero lag)
//   r[k]       = Re(c[k]),  1 <= k <= M-1
//   r[M-1+k]   = Im(c[k]),  1 <= k <= M-1
#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

#include "asl/common.hpp"

namespace asl {

/// Array response of an M-element uniform linear array at normalized
/// angle u in [-1,1]; entry k equals exp(j*k*pi*u).
inline CVec steering(double u, Eigen::Index m) {
  if (!(u >= -1.0 && u <= 1.0))
    throw std::invalid_argument("steering: u outside [-1,1]: " + std::to_string(u));
  if (m < 1) throw std::invalid_argument("steering: M must be positive");
  CVec a(m);
  for (Eigen::Index k = 0; k < m; ++k) a[k] = std::polar(1.0, k * kPi * u);
  return a;
}

/// Real lag coordinates of the steering vector a(u); cheaper than
/// realify(steering(u, m)) and used in hot loops.
inline RVec realified_steering(double u, Eigen::Index m) {
  RVec r(real_dim(m));
  r[0] = 1.0;
  for (Eigen::Index k = 1; k < m; ++k) {
    r[k] = std::cos(k * kPi * u);
    r[m - 1 + k] = std::sin(k * kPi * u);
  }
  return r;
}

/// Lag autocorrelation of v in real coordinates: zero lag |v|^2, and for
/// k >= 1 the doubled lag sums 2 * sum_i v[i+k] * conj(v[i]).
inline RVec autocorr(const CVec& v) {
  const Eigen::Index m = v.size();
  if (m < 1) throw std::invalid_argument("autocorr: empty vector");
  RVec r = RVec::Zero(real_dim(m));
  r[0] = v.squaredNorm();
  for (Eigen::Index k = 1; k < m; ++k) {
    Complex lag = 0.0;
    for (Eigen::Index i = 0; i + k < m; ++i) lag += v[i + k] * std::conj(v[i]);
    lag *= 2.0;
    r[k] = lag.real();
    r[m - 1 + k] = lag.imag();
  }
  return r;
}

/// Real coordinates -> complex lag vector.
inline CVec complex_embed(const RVec& r) {
  const Eigen::Index n = r.size();
  if (n < 1 || n % 2 == 0)
    throw std::invalid_argument("complex_embed: length must be odd (2M-1)");
  const Eigen::Index m = (n + 1) / 2;
  CVec c(m);
  c[0] = r[0];
  for (Eigen::Index k = 1; k < m; ++k) c[k] = Complex(r[k], r[m - 1 + k]);
  return c;
}

/// Complex lag vector -> real coordinates. The zero-lag entry must be
/// real up to numerical noise (tolerance 1e-12, scale-relative).
inline RVec realify(const CVec& c) {
  const Eigen::Index m = c.size();
  if (m < 1) throw std::invalid_argument("realify: empty vector");
  const double imag0 = std::abs(c[0].imag());
  if (imag0 > 1e-12 * std::max(1.0, std::abs(c[0].real())))
    throw std::invalid_argument("realify: zero-lag entry has imaginary part " +
                                std::to_string(c[0].imag()));
  RVec r(real_dim(m));
  r[0] = c[0].real();
  for (Eigen::Index k = 1; k < m; ++k) {
    r[k] = c[k].real();
    r[m - 1 + k] = c[k].imag();
  }
  return r;
}

/// Hermitian Toeplitz matrix whose first column is f (f[0] real).
inline CMat toeplitz(const CVec& f) {
  const Eigen::Index m = f.size();
  if (m < 1) throw std::invalid_argument("toeplitz: empty first column");
  CMat t(m, m);
  for (Eigen::Index r = 0; r < m; ++r) {
    for (Eigen::Index c = 0; c <= r; ++c) {
      t(r, c) = f[r - c];
      t(c, r) = std::conj(f[r - c]);
    }
  }
  for (Eigen::Index i = 0; i < m; ++i) t(i, i) = f[0].real();
  return t;
}

/// Trigonometric lag polynomial of r evaluated at normalized angle u.
/// For r = autocorr(v) this equals |v^H a(u)|^2 and is nonnegative.
inline double corr_poly(const RVec& r, double u) {
  const Eigen::Index m = (r.size() + 1) / 2;
  double acc = r[0];
  for (Eigen::Index k = 1; k < m; ++k)
    acc += r[k] * std::cos(k * kPi * u) + r[m - 1 + k] * std::sin(k * kPi * u);
  return acc;
}

}  // namespace asl

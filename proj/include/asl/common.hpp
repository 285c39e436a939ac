// Shared aliases and small numeric helpers used across the library.
#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>

namespace asl {

using Complex = std::complex<double>;
using CVec = Eigen::VectorXcd;
using CMat = Eigen::MatrixXcd;
using RVec = Eigen::VectorXd;
using RMat = Eigen::MatrixXd;
using Rng = std::mt19937_64;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }
inline double deg_to_rad(double deg) { return deg * kPi / 180.0; }

/// Number of real lag coordinates for an M-antenna array: one zero-lag
/// entry plus real and imaginary parts of the M-1 higher lags.
inline Eigen::Index real_dim(Eigen::Index m) { return 2 * m - 1; }

/// Standard complex Gaussian vector, CN(0, I): each entry has unit
/// variance split evenly between real and imaginary parts.
inline CVec sample_cn(Eigen::Index m, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double s = 1.0 / std::sqrt(2.0);
  CVec z(m);
  for (Eigen::Index i = 0; i < m; ++i) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    z[i] = Complex(re * s, im * s);
  }
  return z;
}

/// Random beam drawn uniformly on the complex unit sphere.
inline CVec random_unit_beam(Eigen::Index m, Rng& rng) {
  CVec v = sample_cn(m, rng);
  const double n = v.norm();
  if (n == 0.0) {
    v.setZero();
    v[0] = 1.0;
    return v;
  }
  return v / n;
}

}  // namespace asl

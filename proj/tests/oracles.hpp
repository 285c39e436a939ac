// Test-only oracles, kept independent of the library code paths they check.
#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <functional>
#include <vector>

#include "asl/common.hpp"

namespace oracle {

using asl::Complex;
using asl::CMat;
using asl::CVec;
using asl::RVec;

// Dense Hermitian Toeplitz built with explicit index arithmetic.
inline CMat dense_toeplitz(const CVec& f) {
  const Eigen::Index m = f.size();
  CMat t(m, m);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c)
      t(r, c) = (r >= c) ? f[r - c] : std::conj(f[c - r]);
  return t;
}

// Quadratic form v^H T(f) v by direct double loop.
inline double quad_form(const CVec& v, const CVec& f) {
  const Eigen::Index m = v.size();
  Complex acc = 0.0;
  const CMat t = dense_toeplitz(f);
  for (Eigen::Index r = 0; r < m; ++r)
    for (Eigen::Index c = 0; c < m; ++c) acc += std::conj(v[r]) * t(r, c) * v[c];
  return acc.real();
}

// Adaptive Simpson quadrature to absolute tolerance `tol`.
inline double adaptive_simpson(const std::function<double(double)>& fn, double a, double b,
                               double tol, int depth = 30) {
  const double c = 0.5 * (a + b);
  const double fa = fn(a), fb = fn(b), fc = fn(c);
  std::function<double(double, double, double, double, double, double, double, int)> rec =
      [&](double x0, double x2, double f0, double f1, double f2, double whole, double eps,
          int d) -> double {
    const double x1l = 0.5 * (x0 + 0.5 * (x0 + x2));
    const double x1r = 0.5 * (0.5 * (x0 + x2) + x2);
    const double fl = fn(x1l), fr = fn(x1r);
    const double xm = 0.5 * (x0 + x2);
    const double left = (xm - x0) / 6.0 * (f0 + 4.0 * fl + f1);
    const double right = (x2 - xm) / 6.0 * (f1 + 4.0 * fr + f2);
    if (d <= 0 || std::abs(left + right - whole) < 15.0 * eps)
      return left + right + (left + right - whole) / 15.0;
    return rec(x0, xm, f0, fl, f1, left, 0.5 * eps, d - 1) +
           rec(xm, x2, f1, fr, f2, right, 0.5 * eps, d - 1);
  };
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fc + fb);
  return rec(a, b, fa, fc, fb, whole, tol, depth);
}

// One-sample Kolmogorov-Smirnov statistic against a CDF.
inline double ks_statistic(std::vector<double> xs, const std::function<double(double)>& cdf) {
  std::sort(xs.begin(), xs.end());
  const double n = static_cast<double>(xs.size());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max(d, std::max(f - static_cast<double>(i) / n,
                             static_cast<double>(i + 1) / n - f));
  }
  return d;
}

// Asymptotic two-sided KS critical value at significance alpha.
inline double ks_critical(double alpha, std::size_t n) {
  return std::sqrt(std::log(2.0 / alpha) / (2.0 * static_cast<double>(n)));
}

inline double exp1_cdf(double x) { return x <= 0.0 ? 0.0 : 1.0 - std::exp(-x); }

}  // namespace oracle

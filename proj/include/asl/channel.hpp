// Ground-truth channel model: angular power scenarios, their Fourier lag
// coefficients, the induced array covariance, and i.i.d. snapshot sampling.
#pragma once

#include <Eigen/Eigenvalues>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "asl/array.hpp"
#include "asl/common.hpp"

namespace asl {

/// Angular power measure on u in [-1,1]: piecewise-uniform segments plus
/// discrete point masses.
struct PowerDensity {
  struct Segment {
    double u_lo = 0.0;
    double u_hi = 0.0;
    double level = 0.0;  // power per unit u
  };
  struct PointMass {
    double u = 0.0;
    double power = 0.0;
  };

  std::vector<Segment> segments;
  std::vector<PointMass> point_masses;

  double total_power() const {
    double p = 0.0;
    for (const auto& s : segments) p += s.level * (s.u_hi - s.u_lo);
    for (const auto& pm : point_masses) p += pm.power;
    return p;
  }

  void scale(double factor) {
    for (auto& s : segments) s.level *= factor;
    for (auto& pm : point_masses) pm.power *= factor;
  }
};

/// Scenario description in degrees, as read from config files.
struct ScenarioConfig {
  Eigen::Index M = 0;
  double theta_max_deg = 90.0;  // scan half-range; u = sin(theta)/sin(theta_max)
  std::vector<std::array<double, 3>> segments;      // {theta_lo_deg, theta_hi_deg, level}
  std::vector<std::array<double, 2>> point_masses;  // {theta_deg, variance}
  double noise_var = 1.0;
  std::optional<double> snr_db;  // when set, density is rescaled to hit f0/sigma^2
  std::uint64_t seed = 1;

  void validate() const {
    if (M < 1) throw std::invalid_argument("scenario: M must be positive");
    if (!(theta_max_deg > 0.0 && theta_max_deg <= 90.0))
      throw std::invalid_argument("scenario: theta_max_deg must lie in (0, 90]");
    if (!(noise_var > 0.0)) throw std::invalid_argument("scenario: noise_var must be > 0");
    for (const auto& s : segments) {
      if (!(s[0] < s[1]))
        throw std::invalid_argument("scenario: degenerate segment [" +
                                    std::to_string(s[0]) + ", " + std::to_string(s[1]) + "]");
      if (s[2] < 0.0) throw std::invalid_argument("scenario: negative segment level");
    }
    for (const auto& pm : point_masses)
      if (pm[1] < 0.0) throw std::invalid_argument("scenario: negative point-mass variance");
    if (snr_db && segments.empty() && point_masses.empty())
      throw std::invalid_argument("scenario: snr_db given but no signal component");
  }
};

/// Map a degree-domain scenario to the u-domain density. Levels carry over
/// unchanged; only the support endpoints move through u = sin(t)/sin(t_max).
inline PowerDensity scenario_to_density(const ScenarioConfig& cfg) {
  cfg.validate();
  const double sin_max = std::sin(deg_to_rad(cfg.theta_max_deg));
  auto to_u = [&](double theta_deg) {
    if (std::abs(theta_deg) > cfg.theta_max_deg + 1e-12)
      throw std::invalid_argument("scenario: angle " + std::to_string(theta_deg) +
                                  " outside +-theta_max");
    return std::sin(deg_to_rad(theta_deg)) / sin_max;
  };
  PowerDensity d;
  for (const auto& s : cfg.segments)
    d.segments.push_back({to_u(s[0]), to_u(s[1]), s[2]});
  for (const auto& pm : cfg.point_masses) d.point_masses.push_back({to_u(pm[0]), pm[1]});
  if (cfg.snr_db) {
    const double want = cfg.noise_var * db_to_linear(*cfg.snr_db);
    const double have = d.total_power();
    if (!(have > 0.0)) throw std::invalid_argument("scenario: zero power, cannot set snr");
    d.scale(want / have);
  }
  return d;
}

/// Fourier lag coefficients f[k] = integral of gamma(u) * exp(j*k*pi*u),
/// in closed form per uniform segment plus the point-mass sum.
inline CVec fourier_coeffs(const PowerDensity& density, Eigen::Index m) {
  if (m < 1) throw std::invalid_argument("fourier_coeffs: M must be positive");
  CVec f = CVec::Zero(m);
  for (const auto& s : density.segments) {
    f[0] += s.level * (s.u_hi - s.u_lo);
    for (Eigen::Index k = 1; k < m; ++k) {
      const Complex jk(0.0, k * kPi);
      f[k] += s.level * (std::exp(jk * s.u_hi) - std::exp(jk * s.u_lo)) / jk;
    }
  }
  for (const auto& pm : density.point_masses)
    for (Eigen::Index k = 0; k < m; ++k) f[k] += pm.power * std::polar(1.0, k * kPi * pm.u);
  f[0] = Complex(f[0].real(), 0.0);
  return f;
}

/// Ground-truth covariance C = T(f_true) + sigma^2 I together with a
/// factor L (C = L L^H) used for exact Gaussian snapshot sampling.
struct TrueCovariance {
  CVec f_true;
  double sigma2 = 0.0;
  CMat C;
  CMat factor;
  double snr = 0.0;

  Eigen::Index M() const { return f_true.size(); }
  CMat signal_cov() const { return toeplitz(f_true); }
};

inline TrueCovariance build_covariance(const CVec& f_true, double sigma2) {
  if (!(sigma2 > 0.0)) throw std::invalid_argument("build_covariance: sigma2 must be > 0");
  const Eigen::Index m = f_true.size();
  TrueCovariance tc;
  tc.f_true = f_true;
  tc.sigma2 = sigma2;
  tc.snr = f_true[0].real() / sigma2;

  const CMat s = toeplitz(f_true);
  Eigen::SelfAdjointEigenSolver<CMat> es(s);
  const double f0 = std::max(f_true[0].real(), 0.0);
  if (es.eigenvalues().minCoeff() < -1e-6 * std::max(f0, 1e-300))
    throw std::invalid_argument("build_covariance: signal covariance not PSD (min eig " +
                                std::to_string(es.eigenvalues().minCoeff()) + ")");
  tc.C = s + sigma2 * CMat::Identity(m, m);

  // Factor through the eigenbasis of C; tiny negative signal eigenvalues
  // are clamped so the factor stays real-rooted.
  Eigen::SelfAdjointEigenSolver<CMat> esc(tc.C);
  RVec lam = esc.eigenvalues().cwiseMax(0.0);
  tc.factor = esc.eigenvectors() * lam.cwiseSqrt().asDiagonal();
  return tc;
}

/// One circularly-symmetric Gaussian array snapshot y ~ CN(0, C).
inline CVec sample_snapshot(const TrueCovariance& cov, Rng& rng) {
  return cov.factor * sample_cn(cov.M(), rng);
}

/// Scenario -> sampled channel in one step.
inline TrueCovariance make_channel(const ScenarioConfig& cfg) {
  return build_covariance(fourier_coeffs(scenario_to_density(cfg), cfg.M), cfg.noise_var);
}

/// Two-cluster benchmark scenario: power uniform over [-50,-48] and
/// [10,12] degrees, rescaled to the requested acquisition SNR.
inline ScenarioConfig two_cluster_scenario(Eigen::Index m, double snr_db, std::uint64_t seed) {
  ScenarioConfig cfg;
  cfg.M = m;
  cfg.theta_max_deg = 90.0;
  cfg.segments = {{-50.0, -48.0, 1.0}, {10.0, 12.0, 1.0}};
  cfg.noise_var = 1.0;
  cfg.snr_db = snr_db;
  cfg.seed = seed;
  return cfg;
}

}  // namespace asl

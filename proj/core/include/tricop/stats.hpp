#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "tricop/corrmat.hpp"
#include "tricop/sampler.hpp"

namespace tricop {

/// Pearson correlation of two equally long samples (two-pass).
double pearson(std::span<const double> x, std::span<const double> y);

struct CorrelationEstimate {
  CorrelationMatrix3 matrix;
  std::size_t n = 0;
  /// (1 - rho^2) / sqrt(n) per entry, in (p, q, r) order.
  std::array<double, 3> standard_error{};
};

/// Throws Error(TooFewSamples) for fewer than 3 triples.
CorrelationEstimate estimate_correlation(const SampleBatch& batch);

struct CorrelationCheck {
  std::array<double, 3> deviation{};  // |estimate - target| in units of stderr
  double threshold = 3.5;
  bool pass = false;
};

CorrelationCheck check_correlation(const CorrelationEstimate& est, const CorrelationMatrix3& target,
                                   double threshold = 3.5);

/// Regularized incomplete beta I_x(k, k), via a continued fraction on the
/// half of [0, 1] where it converges fast and symmetry on the other.
/// Throws Error(OutOfRange) unless 0 <= x <= 1.
double beta_cdf(double x, BetaParameter k);

struct KsResult {
  double statistic = 0.0;
  double critical = 0.0;  // 1.628 / sqrt(n), the asymptotic 1% point
  bool pass = false;
};

/// One-sample Kolmogorov-Smirnov test against beta(k, k).
/// Throws Error(TooFewSamples) for n < 100.
KsResult ks_test(std::span<const double> samples, BetaParameter k);

/// E|T|^s for T ~ nu_k: Gamma(k + 1/2) Gamma((s+1)/2) / (sqrt(pi) Gamma(k + (s+1)/2)).
double mellin_oracle(double s, BetaParameter k);

struct MellinMoment {
  double s = 0.0;
  double empirical = 0.0;
  double oracle = 0.0;
  double standard_error = 0.0;
  double z = 0.0;  // (empirical - oracle) / standard_error
};

struct CoordinateReport {
  KsResult ks;
  std::vector<MellinMoment> mellin;
  double mellin_threshold = 4.0;
  bool mellin_pass = false;
  bool pass() const noexcept { return ks.pass && mellin_pass; }
};

struct MarginalTestReport {
  std::array<CoordinateReport, 3> coords;
  bool pass() const noexcept;
};

/// Mellin moments of |2u - 1| at the given orders against mellin_oracle.
std::vector<MellinMoment> mellin_moments(std::span<const double> unit_samples, BetaParameter k,
                                         std::span<const double> orders);

/// KS plus Mellin moments at s = 1..4 for each coordinate of the batch.
MarginalTestReport test_marginals(const SampleBatch& batch, double mellin_threshold = 4.0);

}  // namespace tricop

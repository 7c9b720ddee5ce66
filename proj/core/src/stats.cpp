#include "tricop/stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "tricop/error.hpp"

namespace tricop {

namespace {

constexpr double kKsCritical = 1.628;

double log_beta(double a, double b) { return std::lgamma(a) + std::lgamma(b) - std::lgamma(a + b); }

// Modified Lentz evaluation of the incomplete-beta continued fraction.
double beta_continued_fraction(double a, double b, double x) {
  constexpr double tiny = 1e-300;
  constexpr double eps = 1e-16;
  double c = 1.0;
  double d = 1.0 - (a + b) * x / (a + 1.0);
  if (std::abs(d) < tiny) d = tiny;
  d = 1.0 / d;
  double h = d;
  for (int m = 1; m <= 10000; ++m) {
    const double m2 = 2.0 * m;
    double num = m * (b - m) * x / ((a + m2 - 1.0) * (a + m2));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    h *= d * c;

    num = -(a + m) * (a + b + m) * x / ((a + m2) * (a + m2 + 1.0));
    d = 1.0 + num * d;
    if (std::abs(d) < tiny) d = tiny;
    c = 1.0 + num / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double step = d * c;
    h *= step;
    if (std::abs(step - 1.0) < eps) break;
  }
  return h;
}

// I_x(k, k) for x <= 1/2.
double lower_beta(double x, double k) {
  if (x <= 0.0) return 0.0;
  const double front = std::exp(k * std::log(x) + k * std::log1p(-x) - log_beta(k, k)) / k;
  return front * beta_continued_fraction(k, k, x);
}

}  // namespace

double pearson(std::span<const double> x, std::span<const double> y) {
  const std::size_t n = x.size();
  if (y.size() != n) throw Error(ErrorCode::MalformedData, "pearson: length mismatch");
  if (n < 3) throw Error(ErrorCode::TooFewSamples, "pearson needs at least 3 samples");
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= static_cast<double>(n);
  my /= static_cast<double>(n);
  double sxx = 0.0;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double dx = x[i] - mx;
    const double dy = y[i] - my;
    sxx += dx * dx;
    syy += dy * dy;
    sxy += dx * dy;
  }
  if (sxx <= 0.0 || syy <= 0.0) return std::numeric_limits<double>::quiet_NaN();
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

CorrelationEstimate estimate_correlation(const SampleBatch& batch) {
  const std::size_t n = batch.size();
  if (n < 3) throw Error(ErrorCode::TooFewSamples, "correlation estimate needs at least 3 samples");
  if (batch.ys.size() != n || batch.zs.size() != n) {
    throw Error(ErrorCode::MalformedData, "batch columns differ in length");
  }
  CorrelationEstimate est;
  est.n = n;
  est.matrix = {pearson(batch.ys, batch.zs), pearson(batch.xs, batch.zs), pearson(batch.xs, batch.ys)};
  const auto e = est.matrix.entries();
  const double root_n = std::sqrt(static_cast<double>(n));
  for (int i = 0; i < 3; ++i) est.standard_error[i] = (1.0 - e[i] * e[i]) / root_n;
  return est;
}

CorrelationCheck check_correlation(const CorrelationEstimate& est, const CorrelationMatrix3& target,
                                   double threshold) {
  CorrelationCheck out;
  out.threshold = threshold;
  out.pass = true;
  const auto got = est.matrix.entries();
  const auto want = target.entries();
  const double root_n = std::sqrt(static_cast<double>(est.n));
  for (int i = 0; i < 3; ++i) {
    // At |rho| = 1 the nominal error is zero; fall back to one ulp-scale floor.
    const double se = std::max((1.0 - want[i] * want[i]) / root_n, 1e-12);
    out.deviation[i] = std::abs(got[i] - want[i]) / se;
    if (!(out.deviation[i] <= threshold)) out.pass = false;
  }
  return out;
}

double beta_cdf(double x, BetaParameter k) {
  if (!(x >= 0.0 && x <= 1.0)) throw Error(ErrorCode::OutOfRange, "beta_cdf argument outside [0, 1]");
  if (x == 0.5) return 0.5;
  if (x < 0.5) return lower_beta(x, k.k());
  return 1.0 - lower_beta(1.0 - x, k.k());
}

KsResult ks_test(std::span<const double> samples, BetaParameter k) {
  const std::size_t n = samples.size();
  if (n < 100) throw Error(ErrorCode::TooFewSamples, "KS test needs at least 100 samples");
  std::vector<double> sorted(samples.begin(), samples.end());
  std::sort(sorted.begin(), sorted.end());
  const double dn = static_cast<double>(n);
  double stat = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double f = beta_cdf(std::clamp(sorted[i], 0.0, 1.0), k);
    stat = std::max({stat, (static_cast<double>(i) + 1.0) / dn - f, f - static_cast<double>(i) / dn});
  }
  KsResult out;
  out.statistic = stat;
  out.critical = kKsCritical / std::sqrt(dn);
  out.pass = stat <= out.critical;
  return out;
}

double mellin_oracle(double s, BetaParameter k) {
  if (!(s > 0.0)) throw Error(ErrorCode::OutOfRange, "Mellin order must be positive");
  const double kk = k.k();
  const double log_val = std::lgamma(kk + 0.5) + std::lgamma((s + 1.0) / 2.0) -
                         std::lgamma(kk + (s + 1.0) / 2.0) - 0.5 * std::log(std::numbers::pi);
  return std::exp(log_val);
}

std::vector<MellinMoment> mellin_moments(std::span<const double> unit_samples, BetaParameter k,
                                         std::span<const double> orders) {
  const std::size_t n = unit_samples.size();
  if (n < 2) throw Error(ErrorCode::TooFewSamples, "Mellin moments need at least 2 samples");
  std::vector<MellinMoment> out;
  for (double s : orders) {
    double sum = 0.0;
    double sum_sq = 0.0;
    for (double u : unit_samples) {
      const double v = std::pow(std::abs(unit_to_nu(u)), s);
      sum += v;
      sum_sq += v * v;
    }
    const double dn = static_cast<double>(n);
    const double mean = sum / dn;
    const double var = std::max(sum_sq / dn - mean * mean, 0.0) * dn / (dn - 1.0);
    MellinMoment m;
    m.s = s;
    m.empirical = mean;
    m.oracle = mellin_oracle(s, k);
    m.standard_error = std::sqrt(var / dn);
    m.z = m.standard_error > 0.0 ? (mean - m.oracle) / m.standard_error
                                 : (mean == m.oracle ? 0.0 : std::numeric_limits<double>::infinity());
    out.push_back(m);
  }
  return out;
}

bool MarginalTestReport::pass() const noexcept {
  return std::all_of(coords.begin(), coords.end(), [](const CoordinateReport& c) { return c.pass(); });
}

MarginalTestReport test_marginals(const SampleBatch& batch, double mellin_threshold) {
  static constexpr std::array<double, 4> kOrders{1.0, 2.0, 3.0, 4.0};
  MarginalTestReport report;
  const std::array<const std::vector<double>*, 3> cols{&batch.xs, &batch.ys, &batch.zs};
  for (int i = 0; i < 3; ++i) {
    CoordinateReport& c = report.coords[i];
    c.ks = ks_test(*cols[i], batch.k);
    c.mellin = mellin_moments(*cols[i], batch.k, kOrders);
    c.mellin_threshold = mellin_threshold;
    c.mellin_pass = std::all_of(c.mellin.begin(), c.mellin.end(),
                                [&](const MellinMoment& m) { return std::abs(m.z) <= mellin_threshold; });
  }
  return report;
}

}  // namespace tricop

#include "tricop/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <utility>

#include "tricop/error.hpp"

namespace tricop {

namespace {

constexpr double kPi = std::numbers::pi;

}  // namespace

GaussianCorrelation::GaussianCorrelation(double r) : r_(r) {
  if (!(std::abs(r) <= 1.0)) throw Error(ErrorCode::OutOfRange, "normal correlation outside [-1, 1]");
}

double phi(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double t_map(double x) noexcept {
  // erf keeps full relative precision near 0, where phi(x) - 1/2 would cancel.
  return std::numbers::sqrt3 * std::erf(x / std::numbers::sqrt2);
}

// 3 - (6/pi) arccos(r/2) == (6/pi) arcsin(r/2); the arcsine form is exactly odd.
double corr_transfer(GaussianCorrelation r) noexcept {
  return 6.0 / kPi * std::asin(r.value() / 2.0);
}

GaussianCorrelation corr_transfer_inverse(double r_star) {
  if (!(std::abs(r_star) <= 1.0)) throw Error(ErrorCode::OutOfRange, "target correlation outside [-1, 1]");
  return GaussianCorrelation(std::clamp(2.0 * std::sin(kPi * r_star / 6.0), -1.0, 1.0));
}

double phi_covariance(GaussianCorrelation r) noexcept {
  return 0.25 + std::asin(r.value() / 2.0) / (2.0 * kPi);
}

double HermiteCoefficients::total() const noexcept {
  double s = 0.0;
  for (double v : p) s += v;
  return s;
}

HermiteCoefficients t_hermite_coefficients(int order) {
  if (order < 1) throw Error(ErrorCode::OutOfRange, "truncation order must be >= 1");
  HermiteCoefficients out;
  out.order = order;
  out.p.assign(static_cast<std::size_t>(order) + 1, 0.0);
  out.signs.assign(static_cast<std::size_t>(order) + 1, 1);
  const double log_lead = std::log(3.0 / kPi);
  for (int n = 0; 2 * n + 1 <= order; ++n) {
    const double m = 2.0 * n + 1.0;
    const double log_p = log_lead + std::lgamma(m + 1.0) - n * std::log(16.0) -
                         2.0 * std::lgamma(n + 1.0) - 2.0 * std::log(m);
    out.p[2 * n + 1] = std::exp(log_p);
    out.signs[2 * n + 1] = n % 2 == 0 ? 1 : -1;
  }
  return out;
}

double series_transfer(const HermiteCoefficients& coeffs, double r) {
  if (!(std::abs(r) <= 1.0)) throw Error(ErrorCode::OutOfRange, "correlation outside [-1, 1]");
  // Horner from the top coefficient down.
  double acc = 0.0;
  for (std::size_t n = coeffs.p.size(); n-- > 1;) acc = (acc + coeffs.p[n]) * r;
  return acc;
}

CorrelationMatrix3 gaussian_copula_matrix(const CorrelationMatrix3& m) {
  if (!is_valid(m)) throw Error(ErrorCode::InvalidMatrix, "input is not a correlation matrix");
  const auto map = [](double x) { return corr_transfer(GaussianCorrelation(std::clamp(x, -1.0, 1.0))); };
  return {map(m.p), map(m.q), map(m.r)};
}

GaussianAttainability gaussian_attainable(const CorrelationMatrix3& target, double tol) {
  if (!is_valid(target, tol)) throw Error(ErrorCode::InvalidMatrix, "target is not a correlation matrix");
  const auto inv = [](double x) { return corr_transfer_inverse(std::clamp(x, -1.0, 1.0)).value(); };
  GaussianAttainability out;
  out.preimage = {inv(target.p), inv(target.q), inv(target.r)};
  out.delta = delta(out.preimage);
  out.attainable = is_valid(out.preimage, 0.0);
  return out;
}

Matrix3 pivoted_cholesky(const CorrelationMatrix3& m) {
  Matrix3 a{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) a[i][j] = m(i, j);

  std::array<int, 3> order{0, 1, 2};
  Matrix3 l{};  // factor of the permuted matrix
  for (int k = 0; k < 3; ++k) {
    // Largest remaining diagonal entry becomes the pivot.
    int best = k;
    for (int i = k + 1; i < 3; ++i)
      if (a[order[i]][order[i]] > a[order[best]][order[best]]) best = i;
    std::swap(order[k], order[best]);
    std::swap(l[k], l[best]);

    const double pivot = a[order[k]][order[k]];
    if (pivot <= 1e-14) break;  // remaining Schur complement is numerically zero
    const double root = std::sqrt(pivot);
    l[k][k] = root;
    for (int i = k + 1; i < 3; ++i) l[i][k] = a[order[i]][order[k]] / root;
    for (int i = k + 1; i < 3; ++i)
      for (int j = k + 1; j < 3; ++j) a[order[i]][order[j]] -= l[i][k] * l[j][k];
  }

  // Undo the permutation: row order[i] of S is row i of l.
  Matrix3 s{};
  for (int i = 0; i < 3; ++i) s[order[i]] = l[i];
  return s;
}

SampleBatch sample_gaussian_copula(const CorrelationMatrix3& m, std::size_t n, RngStream& rng) {
  const CorrelationMatrix3 target = gaussian_copula_matrix(m);
  const Matrix3 s = pivoted_cholesky(m);
  SampleBatch batch;
  batch.k = BetaParameter(1.0);
  batch.target = target;
  batch.seed = rng.seed();
  batch.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::array<double, 3> z{rng.normal(), rng.normal(), rng.normal()};
    std::array<double, 3> x{};
    for (int row = 0; row < 3; ++row)
      for (int col = 0; col < 3; ++col) x[row] += s[row][col] * z[col];
    batch.xs.push_back(phi(x[0]));
    batch.ys.push_back(phi(x[1]));
    batch.zs.push_back(phi(x[2]));
  }
  return batch;
}

}  // namespace tricop

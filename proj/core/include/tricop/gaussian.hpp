#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "tricop/corrmat.hpp"
#include "tricop/rng.hpp"
#include "tricop/sampler.hpp"

namespace tricop {

/// Correlation of a standard bivariate normal pair.
class GaussianCorrelation {
 public:
  /// Throws Error(OutOfRange) when |r| > 1.
  explicit GaussianCorrelation(double r);
  double value() const noexcept { return r_; }

 private:
  double r_;
};

/// Standard normal CDF.
double phi(double x) noexcept;

/// T(x) = 2 sqrt(3) (phi(x) - 1/2); T(X) is uniform on (-sqrt 3, sqrt 3) for X ~ N(0, 1).
double t_map(double x) noexcept;

/// Correlation of (phi(X), phi(Y)) for a normal pair with correlation r:
/// 3 - (6/pi) arccos(r/2).
double corr_transfer(GaussianCorrelation r) noexcept;

/// r = 2 sin(pi r* / 6). Throws Error(OutOfRange) when |r*| > 1.
GaussianCorrelation corr_transfer_inverse(double r_star);

/// E(phi(X) phi(Y)) = 1/2 - arccos(r/2) / (2 pi).
double phi_covariance(GaussianCorrelation r) noexcept;

/// Squared Hermite coefficients p_n of a standardized function of a normal
/// variable, f = sum_n eps_n sqrt(p_n) H_n / sqrt(n!).
struct HermiteCoefficients {
  std::vector<double> p;    // p[n]; p[0] == 0
  std::vector<int> signs;   // eps_n
  int order = 0;            // highest n kept

  double total() const noexcept;
};

/// Coefficients of T: p_{2n+1} = (3/pi) (2n+1)! / (16^n (n!)^2 (2n+1)^2) with
/// sign (-1)^n for 2n+1 <= order; even terms vanish. Throws Error(OutOfRange)
/// for order < 1.
HermiteCoefficients t_hermite_coefficients(int order = 41);

/// sum_n p_n r^n: the correlation of (f(X), f(Y)). Throws Error(OutOfRange) for |r| > 1.
double series_transfer(const HermiteCoefficients& coeffs, double r);

/// Entrywise corr_transfer: the correlation matrix of the Gaussian copula on R.
/// Throws Error(InvalidMatrix) when R is not a correlation matrix.
CorrelationMatrix3 gaussian_copula_matrix(const CorrelationMatrix3& m);

struct GaussianAttainability {
  bool attainable = false;
  CorrelationMatrix3 preimage;  // entrywise corr_transfer_inverse of the target
  double delta = 0.0;           // negative witness when not attainable
};

/// Whether some Gaussian copula has correlation matrix `target`.
/// Throws Error(InvalidMatrix) when target is not a correlation matrix.
GaussianAttainability gaussian_attainable(const CorrelationMatrix3& target, double tol = kUserTol);

/// Lower-triangular S with S S^T = R, found with diagonal pivoting so that
/// singular (rank 1 or 2) matrices factor too. Negative pivots within
/// rounding are clamped to zero.
using Matrix3 = std::array<std::array<double, 3>, 3>;
Matrix3 pivoted_cholesky(const CorrelationMatrix3& m);

/// (phi(X1), phi(X2), phi(X3)) for X ~ N(0, R). The batch target is
/// gaussian_copula_matrix(R), the correlation the draws converge to.
SampleBatch sample_gaussian_copula(const CorrelationMatrix3& m, std::size_t n, RngStream& rng);

}  // namespace tricop

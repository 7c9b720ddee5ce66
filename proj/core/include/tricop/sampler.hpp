#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "tricop/corrmat.hpp"
#include "tricop/decompose.hpp"
#include "tricop/rng.hpp"

namespace tricop {

/// Shape k >= 1/2 of the symmetric beta law beta(k, k) on (0, 1). k = 1 is
/// uniform and k = 1/2 the arcsine law.
class BetaParameter {
 public:
  /// Throws Error(InvalidK) when k < 1/2 or k is not finite.
  explicit BetaParameter(double k);
  double k() const noexcept { return k_; }
  bool is_arcsine() const noexcept { return k_ == 0.5; }

 private:
  double k_;
};

/// Phase data for the ellipse parameterization of a rank-2 extreme point.
struct EllipseParam {
  double c_half = 0.0;
  double tau = 0.0;
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// tau from cos tau = (sin a + sin b) cos(c/2) / sin c and
/// sin tau = (sin a - sin b) sin(c/2) / sin c.
/// Throws Error(DegenerateC) when |sin c| < 1e-12.
EllipseParam make_ellipse_param(const ExtremePoint3& e);

struct SamplingFrame {
  ExtremePoint3 point;
  /// perm[i] is the original coordinate placed at position i.
  std::array<int, 3> perm;
};

/// Moves an angle of maximal |sin| into position c so the ellipse
/// parameterization is well conditioned. The identity is kept when c already
/// attains the maximum; otherwise the smallest-index maximizer is swapped in.
/// Throws Error(RankOne) when every sine vanishes.
SamplingFrame permute_for_sampling(const ExtremePoint3& e);

/// Inverse survival function of the radial law (2k-1)(1-r^2)^(k-3/2) r dr on
/// (0, 1): sqrt(1 - u^(2/(2k-1))), i.e. the (1 - u) quantile, which has the
/// same law for uniform u. Returns 1 for k = 1/2.
double radius_quantile(const BetaParameter& k, double u) noexcept;
double sample_radius(const BetaParameter& k, RngStream& rng);

/// (-1, 1) -> (0, 1)
constexpr double nu_to_unit(double t) noexcept { return (t + 1.0) / 2.0; }
/// (0, 1) -> (-1, 1)
constexpr double unit_to_nu(double u) noexcept { return 2.0 * u - 1.0; }

/// Triples on the (0, 1) copula scale plus the metadata needed to reproduce them.
struct SampleBatch {
  std::vector<double> xs;
  std::vector<double> ys;
  std::vector<double> zs;
  BetaParameter k{1.0};
  CorrelationMatrix3 target;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return xs.size(); }
  void reserve(std::size_t n);
  void push_centered(const std::array<double, 3>& t);
};

struct SampleBatch2D {
  std::vector<double> xs;
  std::vector<double> ys;
  BetaParameter k{1.0};
  double r = 0.0;
  std::uint64_t seed = 0;

  std::size_t size() const noexcept { return xs.size(); }
};

/// Exact sampler for the copula mu_k attached to one extreme point.
///
/// Rank 2: with Theta uniform on [0, 2pi) and R from the radial law,
///   x = R sin(Theta + c/2),  y = R sin(Theta - c/2),  z = -R sin(Theta + tau)
/// in the permuted frame, which keeps every draw on the plane
/// x sin a + y sin b + z sin c = 0 and gives nu_k marginals.
/// Rank 1: T = R sin(Theta) ~ nu_k and (x, y, z) = (e1 T, e2 T, e3 T).
class ExtremalCopula {
 public:
  ExtremalCopula(const ExtremePoint3& e, BetaParameter k);

  /// One draw on the centered (-1, 1) scale, in the original coordinate order.
  std::array<double, 3> draw_centered(RngStream& rng) const;

  const ExtremePoint3& point() const noexcept { return point_; }
  int rank() const noexcept { return rank_; }

 private:
  ExtremePoint3 point_;
  BetaParameter k_;
  int rank_;
  std::array<int, 3> perm_{0, 1, 2};
  EllipseParam ellipse_{};
  RankOneSigns signs_{};
};

/// Component selection with probability weight_j, then one extremal draw.
class MixtureCopula {
 public:
  MixtureCopula(const MixtureDecomposition& d, BetaParameter k);
  std::array<double, 3> draw_centered(RngStream& rng) const;

 private:
  std::vector<double> cumulative_;
  std::vector<ExtremalCopula> parts_;
};

SampleBatch sample_extremal(const ExtremePoint3& e, BetaParameter k, std::size_t n, RngStream& rng);
SampleBatch sample_mixture(const MixtureDecomposition& d, BetaParameter k, std::size_t n, RngStream& rng);

/// Chunked variant for reproducible runs: rows [i*chunk, (i+1)*chunk) are drawn
/// from RngStream::derive(seed, i), so the output depends only on (seed, chunk)
/// and not on how many worker threads fill the chunks. threads = 0 uses the
/// hardware concurrency.
inline constexpr std::size_t kDefaultChunk = 1u << 16;
SampleBatch sample_mixture_seeded(const MixtureDecomposition& d, BetaParameter k, std::size_t n,
                                  std::uint64_t seed, unsigned threads = 1,
                                  std::size_t chunk = kDefaultChunk);

/// Pairs with correlation r: (T, T) with probability (1+r)/2, else (T, -T).
/// Throws Error(OutOfRange) when |r| > 1.
SampleBatch2D sample_2d(double r, BetaParameter k, std::size_t n, RngStream& rng);

/// Density of a coordinate pair of mu_k on the centered scale,
///
///   (2k-1)/(2 pi) |sin c|^(2-2k) delta(x, y, cos c)^(k-3/2)
///
/// inside the ellipse delta(x, y, cos c) > 0 and zero outside. The exponent of
/// |sin c| follows from the Jacobian r|sin c| of (r, theta) -> (x, y); the
/// often-quoted |sin c|^(1/2-k) only agrees at k = 3/2 (see
/// pair_density_printed and check_pair_density_normalization).
///
/// Throws Error(UnsupportedK) for k = 1/2 and Error(OutOfRange) for |cos_c| >= 1.
double pair_density(double x, double y, double cos_c, BetaParameter k);

/// Same expression with the |sin c|^(1/2-k) constant.
double pair_density_printed(double x, double y, double cos_c, BetaParameter k);

struct PairDensityNormalization {
  double k = 0.0;
  double cos_c = 0.0;
  double printed_mass = 0.0;    // integral of pair_density_printed
  double corrected_mass = 0.0;  // integral of pair_density
  bool printed_normalized = false;  // |printed_mass - 1| <= tolerance
  double tolerance = 1e-6;
};

/// Integrates both normalizations over the ellipse with nested tanh-sinh
/// quadrature and reports which one has unit mass.
PairDensityNormalization check_pair_density_normalization(BetaParameter k, double cos_c);

}  // namespace tricop

#include "tricop/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>
#include <utility>

#include <boost/math/quadrature/tanh_sinh.hpp>

#include "tricop/error.hpp"

namespace tricop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSinGuard = 1e-12;

void require_density_args(double cos_c, const BetaParameter& k) {
  if (k.is_arcsine()) {
    throw Error(ErrorCode::UnsupportedK, "pair law is singular (concentrated on the ellipse) for k = 1/2");
  }
  if (!(std::abs(cos_c) < 1.0)) throw Error(ErrorCode::OutOfRange, "pair density needs |cos c| < 1");
}

double pair_density_with_exponent(double x, double y, double cos_c, double k, double sin_exponent) {
  const double d = delta({x, y, cos_c});
  if (!(d > 0.0)) return 0.0;
  const double sin_c = std::sqrt((1.0 - cos_c) * (1.0 + cos_c));
  return (2.0 * k - 1.0) / (2.0 * kPi) * std::pow(sin_c, sin_exponent) * std::pow(d, k - 1.5);
}

template <class Density>
double ellipse_mass(double cos_c, Density density) {
  const double sin_c = std::sqrt((1.0 - cos_c) * (1.0 + cos_c));
  boost::math::quadrature::tanh_sinh<double> integrator;
  // For fixed x the ellipse spans y in x cos c +- sqrt(1 - x^2) sin c.
  const auto slice = [&](double x) {
    const double mid = x * cos_c;
    const double half = std::sqrt((1.0 - x) * (1.0 + x)) * sin_c;
    if (half <= 0.0) return 0.0;
    const auto along = [&](double t) { return density(x, mid + half * t) * half; };
    return integrator.integrate(along, -1.0, 1.0);
  };
  return integrator.integrate(slice, -1.0, 1.0);
}

}  // namespace

BetaParameter::BetaParameter(double k) : k_(k) {
  if (!(k >= 0.5) || !std::isfinite(k)) {
    throw Error(ErrorCode::InvalidK, "beta shape must satisfy k >= 1/2");
  }
}

EllipseParam make_ellipse_param(const ExtremePoint3& e) {
  const double sa = std::sin(e.a());
  const double sb = std::sin(e.b());
  const double sc = std::sin(e.c());
  if (std::abs(sc) < kSinGuard) {
    throw Error(ErrorCode::DegenerateC, "sin c vanishes; permute coordinates first");
  }
  const double c_half = e.c() / 2.0;
  const double cos_tau = (sa + sb) / sc * std::cos(c_half);
  const double sin_tau = (sa - sb) / sc * std::sin(c_half);
  return {c_half, std::atan2(sin_tau, cos_tau), e.a(), e.b(), e.c()};
}

SamplingFrame permute_for_sampling(const ExtremePoint3& e) {
  const auto angles = e.angles();
  std::array<double, 3> mag{};
  for (int i = 0; i < 3; ++i) mag[i] = std::abs(std::sin(angles[i]));
  const double top = *std::max_element(mag.begin(), mag.end());
  if (top < kSinGuard) throw Error(ErrorCode::RankOne, "rank-one extreme point has no ellipse");

  std::array<int, 3> perm{0, 1, 2};
  if (mag[2] < top - kSinGuard) {
    const int pick = mag[0] >= top - kSinGuard ? 0 : 1;
    std::swap(perm[pick], perm[2]);
  }
  return {ExtremePoint3(angles[perm[0]], angles[perm[1]], angles[perm[2]]), perm};
}

double radius_quantile(const BetaParameter& k, double u) noexcept {
  if (k.is_arcsine()) return 1.0;
  // 1 - u^(2/(2k-1)), written to keep precision when the power is close to 1.
  const double tail = -std::expm1(2.0 / (2.0 * k.k() - 1.0) * std::log(u));
  return std::sqrt(tail);
}

double sample_radius(const BetaParameter& k, RngStream& rng) {
  if (k.is_arcsine()) return 1.0;
  return radius_quantile(k, rng.uniform());
}

void SampleBatch::reserve(std::size_t n) {
  xs.reserve(n);
  ys.reserve(n);
  zs.reserve(n);
}

void SampleBatch::push_centered(const std::array<double, 3>& t) {
  xs.push_back(nu_to_unit(t[0]));
  ys.push_back(nu_to_unit(t[1]));
  zs.push_back(nu_to_unit(t[2]));
}

ExtremalCopula::ExtremalCopula(const ExtremePoint3& e, BetaParameter k)
    : point_(e), k_(k), rank_(e.rank()) {
  if (rank_ == 1) {
    signs_ = RankOneSigns::from(e);
    return;
  }
  const SamplingFrame frame = permute_for_sampling(e);
  perm_ = frame.perm;
  ellipse_ = make_ellipse_param(frame.point);
}

std::array<double, 3> ExtremalCopula::draw_centered(RngStream& rng) const {
  const double theta = 2.0 * kPi * rng.uniform();
  const double radius = sample_radius(k_, rng);
  if (rank_ == 1) {
    const double t = radius * std::sin(theta);
    return {signs_.e1 * t, signs_.e2 * t, signs_.e3 * t};
  }
  const std::array<double, 3> local{
      radius * std::sin(theta + ellipse_.c_half),
      radius * std::sin(theta - ellipse_.c_half),
      -radius * std::sin(theta + ellipse_.tau),
  };
  std::array<double, 3> out{};
  for (int i = 0; i < 3; ++i) out[perm_[i]] = local[i];
  return out;
}

MixtureCopula::MixtureCopula(const MixtureDecomposition& d, BetaParameter k) {
  if (d.components.empty()) throw Error(ErrorCode::InvalidMatrix, "empty mixture");
  double acc = 0.0;
  for (const auto& comp : d.components) {
    if (!(comp.weight >= 0.0)) throw Error(ErrorCode::InvalidMatrix, "negative mixture weight");
    acc += comp.weight;
    cumulative_.push_back(acc);
    parts_.emplace_back(comp.point, k);
  }
  for (double& c : cumulative_) c /= acc;
}

std::array<double, 3> MixtureCopula::draw_centered(RngStream& rng) const {
  if (parts_.size() == 1) return parts_.front().draw_centered(rng);
  const double u = rng.uniform();
  std::size_t j = 0;
  while (j + 1 < parts_.size() && u >= cumulative_[j]) ++j;
  return parts_[j].draw_centered(rng);
}

SampleBatch sample_extremal(const ExtremePoint3& e, BetaParameter k, std::size_t n, RngStream& rng) {
  const ExtremalCopula copula(e, k);
  SampleBatch batch;
  batch.k = k;
  batch.target = e.matrix();
  batch.seed = rng.seed();
  batch.reserve(n);
  for (std::size_t i = 0; i < n; ++i) batch.push_centered(copula.draw_centered(rng));
  return batch;
}

SampleBatch sample_mixture(const MixtureDecomposition& d, BetaParameter k, std::size_t n, RngStream& rng) {
  const MixtureCopula copula(d, k);
  SampleBatch batch;
  batch.k = k;
  batch.target = d.target;
  batch.seed = rng.seed();
  batch.reserve(n);
  for (std::size_t i = 0; i < n; ++i) batch.push_centered(copula.draw_centered(rng));
  return batch;
}

SampleBatch sample_mixture_seeded(const MixtureDecomposition& d, BetaParameter k, std::size_t n,
                                  std::uint64_t seed, unsigned threads, std::size_t chunk) {
  if (chunk == 0) throw Error(ErrorCode::OutOfRange, "chunk size must be positive");
  const MixtureCopula copula(d, k);
  SampleBatch batch;
  batch.k = k;
  batch.target = d.target;
  batch.seed = seed;
  batch.xs.resize(n);
  batch.ys.resize(n);
  batch.zs.resize(n);

  const std::size_t chunks = (n + chunk - 1) / chunk;
  const auto fill = [&](std::size_t first_chunk, std::size_t stride) {
    for (std::size_t c = first_chunk; c < chunks; c += stride) {
      RngStream rng = RngStream::derive(seed, c);
      const std::size_t end = std::min(n, (c + 1) * chunk);
      for (std::size_t i = c * chunk; i < end; ++i) {
        const auto t = copula.draw_centered(rng);
        batch.xs[i] = nu_to_unit(t[0]);
        batch.ys[i] = nu_to_unit(t[1]);
        batch.zs[i] = nu_to_unit(t[2]);
      }
    }
  };

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  const std::size_t workers = std::min<std::size_t>(threads, std::max<std::size_t>(chunks, 1));
  if (workers <= 1) {
    fill(0, 1);
    return batch;
  }
  std::vector<std::jthread> pool;
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(fill, w, workers);
  pool.clear();
  return batch;
}

SampleBatch2D sample_2d(double r, BetaParameter k, std::size_t n, RngStream& rng) {
  const auto [plus, minus] = decompose_2d(r);
  (void)minus;
  SampleBatch2D batch;
  batch.k = k;
  batch.r = r;
  batch.seed = rng.seed();
  batch.xs.reserve(n);
  batch.ys.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const bool same = rng.uniform() < plus;
    const double theta = 2.0 * kPi * rng.uniform();
    const double t = sample_radius(k, rng) * std::sin(theta);
    batch.xs.push_back(nu_to_unit(t));
    batch.ys.push_back(nu_to_unit(same ? t : -t));
  }
  return batch;
}

double pair_density(double x, double y, double cos_c, BetaParameter k) {
  require_density_args(cos_c, k);
  return pair_density_with_exponent(x, y, cos_c, k.k(), 2.0 - 2.0 * k.k());
}

double pair_density_printed(double x, double y, double cos_c, BetaParameter k) {
  require_density_args(cos_c, k);
  return pair_density_with_exponent(x, y, cos_c, k.k(), 0.5 - k.k());
}

PairDensityNormalization check_pair_density_normalization(BetaParameter k, double cos_c) {
  require_density_args(cos_c, k);
  PairDensityNormalization report;
  report.k = k.k();
  report.cos_c = cos_c;
  report.printed_mass =
      ellipse_mass(cos_c, [&](double x, double y) { return pair_density_printed(x, y, cos_c, k); });
  report.corrected_mass =
      ellipse_mass(cos_c, [&](double x, double y) { return pair_density(x, y, cos_c, k); });
  report.printed_normalized = std::abs(report.printed_mass - 1.0) <= report.tolerance;
  return report;
}

}  // namespace tricop

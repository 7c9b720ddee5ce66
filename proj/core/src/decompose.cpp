#include "tricop/decompose.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "tricop/error.hpp"

namespace tricop {

namespace {

constexpr double kAxisGuard = 1e-14;
constexpr double kSnapDistance = 1e-10;

double clamp_unit(double x) noexcept { return std::clamp(x, -1.0, 1.0); }

struct SplitAxis {
  int split;  // coordinate that varies along the segment
  int first;  // held coordinates
  int second;
  double spread;  // (1 - x_first^2)(1 - x_second^2)
};

SplitAxis choose_axis(const std::array<double, 3>& v) {
  const auto make = [&](int split) {
    const int first = (split + 1) % 3;
    const int second = (split + 2) % 3;
    const int lo = std::min(first, second);
    const int hi = std::max(first, second);
    return SplitAxis{split, lo, hi, (1.0 - v[lo] * v[lo]) * (1.0 - v[hi] * v[hi])};
  };
  const SplitAxis along_r = make(2);
  if (1.0 - v[0] * v[0] >= kAxisGuard && 1.0 - v[1] * v[1] >= kAxisGuard) return along_r;
  SplitAxis best = along_r;
  for (int split : {0, 1}) {
    const SplitAxis cand = make(split);
    if (cand.spread > best.spread) best = cand;
  }
  return best;
}

// Extreme point whose held coordinates match v and whose split coordinate is
// the upper (upper = true) or lower root of delta.
ExtremePoint3 endpoint(const SplitAxis& ax, const std::array<double, 3>& v, bool upper) {
  const double u = std::acos(clamp_unit(v[ax.first]));
  const double w = std::acos(clamp_unit(v[ax.second]));
  // cos(u - w) is the upper root, cos(u + w) the lower.
  std::array<double, 3> angles{};
  angles[ax.first] = u;
  angles[ax.second] = upper ? -w : w;
  angles[ax.split] = reduce_angle(-(angles[ax.first] + angles[ax.second]));
  return ExtremePoint3(angles[0], angles[1], angles[2]);
}

}  // namespace

CorrelationMatrix3 MixtureDecomposition::reconstruct() const noexcept {
  std::array<double, 3> acc{};
  for (const auto& comp : components) {
    const auto e = comp.point.matrix().entries();
    for (int i = 0; i < 3; ++i) acc[i] += comp.weight * e[i];
  }
  return CorrelationMatrix3::from_entries(acc);
}

double MixtureDecomposition::total_weight() const noexcept {
  double w = 0.0;
  for (const auto& comp : components) w += comp.weight;
  return w;
}

MixtureDecomposition decompose(const CorrelationMatrix3& m, double tol) {
  if (!is_valid(m, tol)) {
    throw Error(ErrorCode::InvalidMatrix, "cannot decompose a matrix outside the correlation set");
  }
  std::array<double, 3> v = m.entries();
  for (double& x : v) x = clamp_unit(x);

  const SplitAxis ax = choose_axis(v);
  const double d = delta(CorrelationMatrix3::from_entries(v));
  if (ax.spread <= 0.0 && d > 0.0) {
    throw Error(ErrorCode::DegenerateAxis, "held coordinates are all +-1 while delta > 0");
  }

  const double centre = v[ax.first] * v[ax.second];
  const double half = std::sqrt(std::max(ax.spread, 0.0));
  const double upper = clamp_unit(centre + half);
  const double lower = clamp_unit(centre - half);
  const double x = v[ax.split];

  MixtureDecomposition out{m, {}};
  const double dist_upper = std::abs(x - upper);
  const double dist_lower = std::abs(x - lower);
  if (d < 0.0 || std::min(dist_upper, dist_lower) <= kSnapDistance) {
    out.components.push_back({1.0, endpoint(ax, v, dist_upper <= dist_lower)});
    return out;
  }

  const double lambda = std::clamp((x - lower) / (upper - lower), 0.0, 1.0);
  out.components.push_back({lambda, endpoint(ax, v, true)});
  out.components.push_back({1.0 - lambda, endpoint(ax, v, false)});
  return out;
}

std::pair<double, double> decompose_2d(double r) {
  if (!(std::abs(r) <= 1.0)) throw Error(ErrorCode::OutOfRange, "2x2 correlation outside [-1, 1]");
  return {(1.0 + r) / 2.0, (1.0 - r) / 2.0};
}

}  // namespace tricop

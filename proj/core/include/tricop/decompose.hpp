#pragma once

#include <utility>
#include <vector>

#include "tricop/corrmat.hpp"

namespace tricop {

struct MixtureComponent {
  double weight = 0.0;
  ExtremePoint3 point;
};

/// Convex combination of one or two extreme points reproducing `target`.
struct MixtureDecomposition {
  CorrelationMatrix3 target;
  std::vector<MixtureComponent> components;

  /// Sum of weight * cos(angles) over the components.
  CorrelationMatrix3 reconstruct() const noexcept;
  double total_weight() const noexcept;
};

/// Writes a valid matrix as a mixture of at most two extreme points.
///
/// Delta is quadratic in each coordinate, so holding two coordinates fixed
/// leaves a segment whose endpoints r+- = pq +- sqrt((1-p^2)(1-q^2)) are both
/// extremal. The split runs along r unless 1-p^2 or 1-q^2 is below 1e-14, in
/// which case the held pair maximizing (1-x^2)(1-y^2) is used instead.
/// Inputs already on the boundary (delta < 0 within tol, or within 1e-10 of
/// the nearest root) are projected there and returned as one component.
///
/// Throws Error(InvalidMatrix) when !is_valid(m, tol) and
/// Error(DegenerateAxis) when no held pair leaves room to split.
MixtureDecomposition decompose(const CorrelationMatrix3& m, double tol = kUserTol);

/// Weights ((1+r)/2, (1-r)/2) on the 2x2 extreme points R(1) and R(-1).
std::pair<double, double> decompose_2d(double r);

}  // namespace tricop

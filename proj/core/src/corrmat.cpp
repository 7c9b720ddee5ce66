#include "tricop/corrmat.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "tricop/error.hpp"

namespace tricop {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kAngleSumTol = 1e-12;

double clamp_unit(double x) noexcept { return std::clamp(x, -1.0, 1.0); }

}  // namespace

double CorrelationMatrix3::operator()(int i, int j) const noexcept {
  if (i == j) return 1.0;
  // The entry for the pair {i, j} is indexed by the remaining coordinate.
  switch (3 - i - j) {
    case 0: return p;
    case 1: return q;
    default: return r;
  }
}

double reduce_angle(double x) noexcept {
  double y = std::remainder(x, kTwoPi);  // [-pi, pi]
  if (y <= -kPi) y += kTwoPi;
  return y;
}

ExtremePoint3::ExtremePoint3(double a, double b, double c) : a_(a), b_(b), c_(c) {
  const double residual = std::remainder(a + b + c, kTwoPi);
  if (!(std::abs(residual) <= kAngleSumTol)) {
    std::ostringstream os;
    os << "angles (" << a << ", " << b << ", " << c << ") do not sum to 0 mod 2pi";
    throw Error(ErrorCode::OutOfRange, os.str());
  }
}

ExtremePoint3 ExtremePoint3::from_ab(double a, double b) {
  return ExtremePoint3(a, b, reduce_angle(-(a + b)));
}

CorrelationMatrix3 ExtremePoint3::matrix() const noexcept {
  return {std::cos(a_), std::cos(b_), std::cos(c_)};
}

int ExtremePoint3::rank(double tol) const noexcept {
  const bool flat = std::abs(std::sin(a_)) <= tol && std::abs(std::sin(b_)) <= tol &&
                    std::abs(std::sin(c_)) <= tol;
  return flat ? 1 : 2;
}

CorrelationMatrix3 RankOneSigns::matrix() const noexcept {
  return {static_cast<double>(e2 * e3), static_cast<double>(e1 * e3),
          static_cast<double>(e1 * e2)};
}

ExtremePoint3 RankOneSigns::angles() const {
  const auto angle = [](int s) { return s > 0 ? 0.0 : kPi; };
  const double a = angle(e2 * e3);
  const double b = angle(e1 * e3);
  const double c = angle(e1 * e2);
  return ExtremePoint3(a, b, c);
}

RankOneSigns RankOneSigns::from(const ExtremePoint3& e) {
  if (e.rank() != 1) throw Error(ErrorCode::NotExtremal, "extreme point is not rank one");
  const auto sign = [](double angle) { return std::cos(angle) > 0.0 ? 1 : -1; };
  return {1, sign(e.c()), sign(e.b())};
}

std::string_view to_string(MatrixClass c) noexcept {
  switch (c) {
    case MatrixClass::Interior: return "Interior";
    case MatrixClass::ExtremeRank2: return "ExtremeRank2";
    case MatrixClass::ExtremeRank1: return "ExtremeRank1";
    case MatrixClass::Invalid: return "Invalid";
  }
  return "Invalid";
}

double delta(const CorrelationMatrix3& m) noexcept {
  const double p = m.p;
  const double q = m.q;
  const double r = m.r;
  return 1.0 - p * p - q * q - r * r + 2.0 * p * q * r;
}

bool is_valid(const CorrelationMatrix3& m, double tol) noexcept {
  const double lowest =
      std::min({1.0 - m.p * m.p, 1.0 - m.q * m.q, 1.0 - m.r * m.r, delta(m)});
  // NaN entries fail the comparison.
  return lowest >= -tol;
}

MatrixClass classify(const CorrelationMatrix3& m, double tol) noexcept {
  if (!is_valid(m, tol)) return MatrixClass::Invalid;
  const bool unit_entries = std::abs(m.p) >= 1.0 - tol && std::abs(m.q) >= 1.0 - tol &&
                            std::abs(m.r) >= 1.0 - tol;
  if (unit_entries && std::abs(m.p * m.q * m.r - 1.0) <= tol) return MatrixClass::ExtremeRank1;
  if (delta(m) <= tol) return MatrixClass::ExtremeRank2;
  return MatrixClass::Interior;
}

ExtremePoint3 to_angles(const CorrelationMatrix3& m, double tol) {
  const MatrixClass cls = classify(m, tol);
  if (cls == MatrixClass::Invalid) {
    throw Error(ErrorCode::InvalidMatrix, "matrix is not a correlation matrix");
  }
  if (cls == MatrixClass::Interior) {
    throw Error(ErrorCode::NotExtremal, "delta exceeds tolerance; matrix is interior");
  }

  const double a = std::acos(clamp_unit(m.p));
  const double b0 = std::acos(clamp_unit(m.q));
  const double err_plus = std::abs(std::cos(a + b0) - m.r);
  const double err_minus = std::abs(std::cos(a - b0) - m.r);
  const double b = err_plus <= err_minus ? b0 : -b0;

  // Input noise that keeps |delta| <= tol can still move r by up to sqrt(tol)
  // near rank one; that case is reported rather than silently absorbed.
  const double match_tol = std::max(tol, 1e-10);
  if (std::min(err_plus, err_minus) > match_tol) {
    throw Error(ErrorCode::NoConsistentSign, "no sign of arccos(q) reproduces r");
  }
  return ExtremePoint3::from_ab(a, b);
}

}  // namespace tricop

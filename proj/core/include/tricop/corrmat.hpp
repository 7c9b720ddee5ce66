#pragma once

#include <array>
#include <string_view>

namespace tricop {

/// Tolerance applied to user-supplied matrices.
inline constexpr double kUserTol = 1e-9;
/// Tolerance applied to matrices the library builds itself.
inline constexpr double kInternalTol = 1e-12;

/// Off-diagonal triple of a unit-diagonal symmetric 3x3 matrix
///
///     | 1 r q |
///     | r 1 p |
///     | q p 1 |
///
/// so p couples coordinates (2,3), q couples (1,3) and r couples (1,2).
struct CorrelationMatrix3 {
  double p = 0.0;
  double q = 0.0;
  double r = 0.0;

  /// Entries in (p, q, r) order.
  std::array<double, 3> entries() const noexcept { return {p, q, r}; }
  static CorrelationMatrix3 from_entries(const std::array<double, 3>& e) noexcept {
    return {e[0], e[1], e[2]};
  }

  /// Full matrix element (i, j), zero-based.
  double operator()(int i, int j) const noexcept;

  friend bool operator==(const CorrelationMatrix3&, const CorrelationMatrix3&) = default;
};

/// Angle form R(a, b, c) of an extreme point: p = cos a, q = cos b, r = cos c
/// with a + b + c = 0 (mod 2 pi).
class ExtremePoint3 {
 public:
  /// Throws Error(OutOfRange) when the angles do not sum to 0 mod 2 pi.
  ExtremePoint3(double a, double b, double c);

  /// Completes the triple with c = -(a + b), reduced to (-pi, pi].
  static ExtremePoint3 from_ab(double a, double b);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  double c() const noexcept { return c_; }
  std::array<double, 3> angles() const noexcept { return {a_, b_, c_}; }

  CorrelationMatrix3 matrix() const noexcept;

  /// 1 when every sine vanishes (within tol), otherwise 2.
  int rank(double tol = kInternalTol) const noexcept;

 private:
  double a_;
  double b_;
  double c_;
};

/// Sign vector of a rank-one correlation matrix (e_i e_j), with e1 = +1.
struct RankOneSigns {
  int e1 = 1;
  int e2 = 1;
  int e3 = 1;

  CorrelationMatrix3 matrix() const noexcept;
  ExtremePoint3 angles() const;
  /// Reads the signs off a rank-one extreme point.
  static RankOneSigns from(const ExtremePoint3& e);
};

enum class MatrixClass { Interior, ExtremeRank2, ExtremeRank1, Invalid };

std::string_view to_string(MatrixClass c) noexcept;

/// Reduces an angle to (-pi, pi].
double reduce_angle(double x) noexcept;

/// det R = 1 - p^2 - q^2 - r^2 + 2pqr.
double delta(const CorrelationMatrix3& m) noexcept;

bool is_valid(const CorrelationMatrix3& m, double tol = kUserTol) noexcept;

MatrixClass classify(const CorrelationMatrix3& m, double tol = kUserTol) noexcept;

/// Angle triple of an extremal matrix. a = arccos p, b = +-arccos q with the
/// sign that reproduces r, c = -(a + b) reduced to (-pi, pi].
///
/// Throws Error(InvalidMatrix) for matrices outside the set, Error(NotExtremal)
/// when delta(m) > tol and Error(NoConsistentSign) when neither sign of b
/// reproduces r.
ExtremePoint3 to_angles(const CorrelationMatrix3& m, double tol = kUserTol);

}  // namespace tricop

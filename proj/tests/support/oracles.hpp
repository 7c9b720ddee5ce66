#pragma once

// Independent reference computations used only by the tests. Nothing here
// calls into the code paths it is used to check.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "tricop/corrmat.hpp"

namespace tricop::testing {

/// det of the full 3x3 matrix by cofactor expansion along the first row.
double cofactor_det(const CorrelationMatrix3& m);

/// Probabilists' Gauss-Hermite rule: sum w_i f(x_i) ~ E f(X), X ~ N(0, 1).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};
QuadratureRule gauss_hermite(int n);

/// E f(X, Y) for a standard normal pair with correlation r, tensor rule on
/// (X, Z) with Y = rX + sqrt(1 - r^2) Z.
double normal_pair_expectation(const QuadratureRule& rule, double r,
                               const std::function<double(double, double)>& f);

/// Probabilists' Hermite polynomial He_n(x) (generating function exp(xt - t^2/2)).
double hermite_he(int n, double x);

/// Adaptive Gauss-Kronrod on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-13);

/// Roots of delta(p, q, .) = 0 found by bisection from the interval ends.
std::pair<double, double> delta_roots_by_bisection(double p, double q);

/// Uniform draw from the cube, rejected until delta >= margin.
CorrelationMatrix3 random_valid_matrix(std::mt19937_64& gen, double margin = 0.0);

/// Random extreme point of rank 2 with |sin| of every angle above 1e-6.
ExtremePoint3 random_rank2_point(std::mt19937_64& gen);

/// Normal CDF by quadrature of the defining integral.
double phi_by_quadrature(double x);

}  // namespace tricop::testing

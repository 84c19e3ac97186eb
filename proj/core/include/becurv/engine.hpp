#pragma once

#include "becurv/graph.hpp"
#include "becurv/numeric.hpp"
#include "becurv/operators.hpp"

namespace becurv {

/// Quadratic form over the two-ball values with f(x) = 0 fixed:
/// f^T coeff f = 2 * Gamma2(f)(x). Variables are sphere1 followed by
/// sphere2, both ascending. Sphere-2 variables never couple to each other,
/// only to their intermediaries on sphere1; elimination leans on that.
struct TwoBallForm {
  int center;
  std::vector<int> variables;
  int sphere1_count;
  SymmetricMatrix coeff;
};

TwoBallForm assemble_gamma2_form(const WeightedGraph& g, const BallDecomposition& ball);

/// Optimal sphere-2 value as a linear function of the sphere-1 values:
/// f(u) = sum_i coeffs[i] * f(sphere1[i]).
struct SphereTwoElimination {
  int u;
  std::vector<double> coeffs;
};

/// Reduced form after minimizing out sphere2, scaled so that
/// f^T matrix f = Gamma2(f)(x) for the minimizing extension of f.
struct QuadraticForm {
  int center;
  std::vector<int> variables;  // sphere1, ascending
  SymmetricMatrix matrix;
  std::vector<SphereTwoElimination> eliminations;
};

QuadraticForm eliminate_sphere2(const TwoBallForm& form, const BallDecomposition& ball);

/// Congruence transform that turns the curvature question into an ordinary
/// symmetric eigenproblem: M = 2 w(x) D^{-1/2} Q D^{-1/2} with
/// D = diag(w_xv). Its least eigenvalue is the curvature at x.
SymmetricMatrix curvature_matrix(const WeightedGraph& g, const QuadraticForm& q);

struct CurvatureResult {
  double curvature;
  std::vector<double> spectrum;  // all eigenvalues of the curvature matrix, ascending
  /// Minimizing function: zero at x and off the two-ball, achieves
  /// Gamma2 / Gamma = curvature at x.
  VertexFunction witness;
};

/// Bakry-Emery curvature at a vertex: the largest K with
/// Gamma2(f)(x) >= K * Gamma(f)(x) for every f.
CurvatureResult bakry_emery_curvature(const WeightedGraph& g, int x, const Tolerances& tol = {});

std::vector<CurvatureResult> curvature_all(const WeightedGraph& g, const Tolerances& tol = {});

}  // namespace becurv

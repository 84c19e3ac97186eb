#pragma once

#include <functional>
#include <vector>

namespace becurv {

/// Every tolerance used by the library, in one place. Functions take this
/// record as an optional trailing parameter; the defaults below are the
/// values the test suite pins.
struct Tolerances {
  /// Jacobi stop: off-diagonal Frobenius mass relative to the full norm.
  double eigen_tol = 1e-14;
  /// Bisection stops once the bracket width falls below this.
  double bisect_tol = 1e-12;
  /// Allowed asymmetry when a matrix is handed to the eigensolver.
  double form_symmetry_tol = 1e-14;
  /// Rim weight within this of the flat value classifies as euclidean.
  double euclidean_match_tol = 1e-12;
};

/// Small dense symmetric matrix, row-major. Kept deliberately minimal:
/// curvature matrices have order = vertex degree, so no sparsity games.
class SymmetricMatrix {
 public:
  SymmetricMatrix() = default;
  explicit SymmetricMatrix(int order) : d_(order), a_(static_cast<size_t>(order) * order, 0.0) {}

  int order() const { return d_; }
  double operator()(int i, int j) const { return a_[static_cast<size_t>(i) * d_ + j]; }
  double& operator()(int i, int j) { return a_[static_cast<size_t>(i) * d_ + j]; }

  double frobenius_norm() const;
  double max_abs() const;
  double max_asymmetry() const;
  /// Replace A by (A + A^T)/2.
  void symmetrize();

 private:
  int d_ = 0;
  std::vector<double> a_;
};

struct EigenDecomposition {
  std::vector<double> values;                 // ascending
  std::vector<std::vector<double>> vectors;   // vectors[k] is unit, pairs with values[k]
};

/// Cyclic Jacobi rotations on a symmetric matrix. Sweeps until the
/// off-diagonal Frobenius mass drops below tol.eigen_tol * ||A||_F; throws
/// NoConvergence after 100 sweeps (unreachable for well-formed input).
/// Eigenvalues come back ascending, ties in the order the sweep produced
/// them, so repeated runs are byte-identical.
EigenDecomposition eigen_symmetric(const SymmetricMatrix& a, const Tolerances& tol = {});

/// Plain bisection. Requires fn(lo) * fn(hi) <= 0, else throws NoBracket.
/// Stops when the bracket width reaches `tol` (200 iteration cap) and
/// returns the midpoint of the final bracket.
double bisect_root(const std::function<double(double)>& fn, double lo, double hi, double tol);

}  // namespace becurv

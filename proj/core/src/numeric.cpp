#include "becurv/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "becurv/errors.hpp"

namespace becurv {

double SymmetricMatrix::frobenius_norm() const {
  double s = 0.0;
  for (double v : a_) s += v * v;
  return std::sqrt(s);
}

double SymmetricMatrix::max_abs() const {
  double m = 0.0;
  for (double v : a_) m = std::max(m, std::abs(v));
  return m;
}

double SymmetricMatrix::max_asymmetry() const {
  double m = 0.0;
  for (int i = 0; i < d_; ++i)
    for (int j = i + 1; j < d_; ++j)
      m = std::max(m, std::abs((*this)(i, j) - (*this)(j, i)));
  return m;
}

void SymmetricMatrix::symmetrize() {
  for (int i = 0; i < d_; ++i)
    for (int j = i + 1; j < d_; ++j) {
      const double v = 0.5 * ((*this)(i, j) + (*this)(j, i));
      (*this)(i, j) = v;
      (*this)(j, i) = v;
    }
}

namespace {

double off_diagonal_norm(const std::vector<std::vector<double>>& m) {
  const int d = static_cast<int>(m.size());
  double s = 0.0;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      if (i != j) s += m[i][j] * m[i][j];
  return std::sqrt(s);
}

}  // namespace

EigenDecomposition eigen_symmetric(const SymmetricMatrix& a, const Tolerances& tol) {
  const int d = a.order();
  if (a.max_asymmetry() > tol.form_symmetry_tol * std::max(1.0, a.max_abs()))
    throw DomainError("eigen_symmetric: matrix is not symmetric");

  EigenDecomposition out;
  if (d == 0) return out;

  std::vector<std::vector<double>> m(d, std::vector<double>(d));
  std::vector<std::vector<double>> v(d, std::vector<double>(d, 0.0));
  for (int i = 0; i < d; ++i) {
    v[i][i] = 1.0;
    for (int j = 0; j < d; ++j) m[i][j] = 0.5 * (a(i, j) + a(j, i));
  }

  const double norm = a.frobenius_norm();
  const int max_sweeps = 100;
  bool converged = norm == 0.0 || d == 1;
  for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
    if (off_diagonal_norm(m) <= tol.eigen_tol * norm) {
      converged = true;
      break;
    }
    for (int p = 0; p < d - 1; ++p) {
      for (int q = p + 1; q < d; ++q) {
        const double apq = m[p][q];
        // Entries this tiny cannot keep the off-diagonal mass above the
        // stopping threshold (at most d^2 of them), so skip the rotation.
        if (std::abs(apq) <= 1e-300 || std::abs(apq) <= 1e-20 * norm) continue;
        const double theta = (m[q][q] - m[p][p]) / (2.0 * apq);
        double t;
        if (std::isinf(theta)) {
          t = 0.0;
        } else {
          const double sign = theta >= 0.0 ? 1.0 : -1.0;
          t = sign / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double app = m[p][p];
        const double aqq = m[q][q];
        m[p][p] = app - t * apq;
        m[q][q] = aqq + t * apq;
        m[p][q] = m[q][p] = 0.0;
        for (int k = 0; k < d; ++k) {
          if (k == p || k == q) continue;
          const double akp = m[k][p];
          const double akq = m[k][q];
          m[k][p] = m[p][k] = c * akp - s * akq;
          m[k][q] = m[q][k] = s * akp + c * akq;
        }
        for (int k = 0; k < d; ++k) {
          const double vkp = v[k][p];
          const double vkq = v[k][q];
          v[k][p] = c * vkp - s * vkq;
          v[k][q] = s * vkp + c * vkq;
        }
      }
    }
  }
  if (!converged && off_diagonal_norm(m) > tol.eigen_tol * norm)
    throw NoConvergence("eigen_symmetric: Jacobi sweeps did not converge");

  std::vector<int> order(d);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int i, int j) { return m[i][i] < m[j][j]; });

  out.values.resize(d);
  out.vectors.assign(d, std::vector<double>(d));
  for (int k = 0; k < d; ++k) {
    const int col = order[k];
    out.values[k] = m[col][col];
    for (int i = 0; i < d; ++i) out.vectors[k][i] = v[i][col];
    // Fix the sign so the output is canonical: largest component positive.
    int imax = 0;
    for (int i = 1; i < d; ++i)
      if (std::abs(out.vectors[k][i]) > std::abs(out.vectors[k][imax])) imax = i;
    if (out.vectors[k][imax] < 0.0)
      for (double& x : out.vectors[k]) x = -x;
  }
  return out;
}

double bisect_root(const std::function<double(double)>& fn, double lo, double hi, double tol) {
  if (!(lo < hi)) throw DomainError("bisect_root: requires lo < hi");
  double flo = fn(lo);
  double fhi = fn(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw NoBracket("bisect_root: fn(lo) and fn(hi) have the same sign");

  const int max_iter = 200;
  for (int i = 0; i < max_iter && hi - lo > tol; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double fmid = fn(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace becurv

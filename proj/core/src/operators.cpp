#include "becurv/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "becurv/errors.hpp"
#include "becurv/numeric.hpp"

namespace becurv {

namespace {

void check_function(const WeightedGraph& g, const VertexFunction& f) {
  if (static_cast<int>(f.size()) != g.num_vertices())
    throw DomainError("vertex function has length " + std::to_string(f.size()) +
                      ", graph has " + std::to_string(g.num_vertices()) + " vertices");
}

}  // namespace

double laplacian(const WeightedGraph& g, const VertexFunction& f, int x) {
  g.check_vertex(x);
  check_function(g, f);
  double acc = 0.0;
  for (const auto& [v, w] : g.incident(x)) acc += w * (f[v] - f[x]);
  return acc / g.vertex_weight(x);
}

double gamma(const WeightedGraph& g, const VertexFunction& f, const VertexFunction& h, int x) {
  g.check_vertex(x);
  check_function(g, f);
  check_function(g, h);
  double acc = 0.0;
  // Grouping the difference product first keeps gamma(f,h) == gamma(h,f) exact.
  for (const auto& [v, w] : g.incident(x)) acc += w * ((f[v] - f[x]) * (h[v] - h[x]));
  return acc / (2.0 * g.vertex_weight(x));
}

double gamma(const WeightedGraph& g, const VertexFunction& f, int x) {
  return gamma(g, f, f, x);
}

double gamma2_direct(const WeightedGraph& g, const VertexFunction& f, int x) {
  g.check_vertex(x);
  check_function(g, f);
  const int n = g.num_vertices();
  VertexFunction gf(n), lf(n);
  for (int y = 0; y < n; ++y) {
    gf[y] = gamma(g, f, y);
    lf[y] = laplacian(g, f, y);
  }
  return 0.5 * (laplacian(g, gf, x) - 2.0 * gamma(g, f, lf, x));
}

namespace {

// Uniform in [-1, 1] through an explicit bit mapping, so a seed pins the
// whole trajectory regardless of standard library internals.
double uniform_pm1(std::mt19937_64& eng) {
  const double u = static_cast<double>(eng() >> 11) * 0x1.0p-53;
  return 2.0 * u - 1.0;
}

double quad(const SymmetricMatrix& m, const std::vector<double>& f) {
  const int d = m.order();
  double acc = 0.0;
  for (int i = 0; i < d; ++i) {
    double row = 0.0;
    for (int j = 0; j < d; ++j) row += m(i, j) * f[j];
    acc += f[i] * row;
  }
  return acc;
}

}  // namespace

double rayleigh_oracle(const WeightedGraph& g, int x, int trials, std::uint64_t seed) {
  g.check_vertex(x);
  if (g.degree(x) == 0) throw DegenerateVertex("vertex " + std::to_string(x) + " has no neighbours");
  if (trials < 1) throw DomainError("rayleigh_oracle needs at least one trial");

  const BallDecomposition ball = decompose_ball(g, x);
  std::vector<int> vars = ball.sphere1;
  vars.insert(vars.end(), ball.sphere2.begin(), ball.sphere2.end());
  const int m = static_cast<int>(vars.size());
  const int n = g.num_vertices();

  // Polarize the two quadratic forms out of the nested definitions. This
  // touches only gamma / gamma2_direct, never the assembled pipeline.
  SymmetricMatrix num(m), den(m);
  {
    std::vector<VertexFunction> units(m, VertexFunction(n, 0.0));
    for (int k = 0; k < m; ++k) units[k][vars[k]] = 1.0;
    std::vector<double> num_diag(m), den_diag(m);
    for (int k = 0; k < m; ++k) {
      num_diag[k] = gamma2_direct(g, units[k], x);
      den_diag[k] = gamma(g, units[k], x);
      num(k, k) = num_diag[k];
      den(k, k) = den_diag[k];
    }
    VertexFunction sum(n, 0.0);
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l) {
        sum[vars[k]] = 1.0;
        sum[vars[l]] = 1.0;
        const double nv = 0.5 * (gamma2_direct(g, sum, x) - num_diag[k] - num_diag[l]);
        const double dv = 0.5 * (gamma(g, sum, x) - den_diag[k] - den_diag[l]);
        num(k, l) = num(l, k) = nv;
        den(k, l) = den(l, k) = dv;
        sum[vars[k]] = 0.0;
        sum[vars[l]] = 0.0;
      }
  }

  const double scale = std::max({1.0, num.max_abs(), den.max_abs()});
  const double tiny = 1e-14 * scale;
  const int max_sweeps = 10000;
  const double rel_stop = 1e-12;

  double best = std::numeric_limits<double>::infinity();
  std::vector<double> f(m);
  for (int trial = 0; trial < trials; ++trial) {
    std::mt19937_64 eng(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(trial + 1));
    double dval = 0.0;
    for (int attempt = 0; attempt < 64 && dval <= tiny; ++attempt) {
      for (int k = 0; k < m; ++k) f[k] = uniform_pm1(eng);
      dval = quad(den, f);
    }
    if (dval <= tiny) continue;
    double ratio = quad(num, f) / dval;

    for (int sweep = 0; sweep < max_sweeps; ++sweep) {
      for (int i = 0; i < m; ++i) {
        const double fi = f[i];
        f[i] = 0.0;
        double bn = 0.0, bd = 0.0;
        for (int j = 0; j < m; ++j) {
          bn += num(i, j) * f[j];
          bd += den(i, j) * f[j];
        }
        bn *= 2.0;
        bd *= 2.0;
        const double an = num(i, i), ad = den(i, i);
        const double cn = quad(num, f), cd = quad(den, f);

        // Stationary points of (an t^2 + bn t + cn)/(ad t^2 + bd t + cd).
        const double qa = an * bd - bn * ad;
        const double qb = an * cd - cn * ad;
        const double qc = bn * cd - cn * bd;
        double cand[3];
        int ncand = 0;
        cand[ncand++] = fi;
        if (std::abs(qa) > tiny * 1e-2) {
          const double disc = qb * qb - qa * qc;
          if (disc >= 0.0) {
            const double root = std::sqrt(disc);
            cand[ncand++] = (-qb + root) / qa;
            cand[ncand++] = (-qb - root) / qa;
          }
        } else if (std::abs(qb) > tiny * 1e-2) {
          cand[ncand++] = -qc / (2.0 * qb);
        }

        double best_t = fi;
        double best_r = std::numeric_limits<double>::infinity();
        for (int k = 0; k < ncand; ++k) {
          const double t = cand[k];
          if (!std::isfinite(t)) continue;
          const double dt = (ad * t + bd) * t + cd;
          if (dt <= tiny) continue;
          const double r = ((an * t + bn) * t + cn) / dt;
          if (r < best_r) {
            best_r = r;
            best_t = t;
          }
        }
        f[i] = best_t;
      }

      // Rescale so repeated sweeps cannot drift to extreme magnitudes.
      double fmax = 0.0;
      for (double v : f) fmax = std::max(fmax, std::abs(v));
      if (fmax > 0.0)
        for (double& v : f) v /= fmax;

      dval = quad(den, f);
      if (dval <= tiny) break;
      const double next = quad(num, f) / dval;
      const double gain = ratio - next;
      ratio = next;
      if (gain < rel_stop * std::max(1.0, std::abs(next))) break;
    }

    if (std::isfinite(ratio) && ratio < best) best = ratio;
  }

  if (!std::isfinite(best))
    throw NoConvergence("rayleigh_oracle: every trial collapsed to a degenerate function");
  return best;
}

}  // namespace becurv

#include "becurv/engine.hpp"

#include <cmath>
#include <unordered_map>

#include "becurv/errors.hpp"

namespace becurv {

namespace {

// Accumulate alpha * f_p * f_q into a quadratic form matrix.
void add_term(SymmetricMatrix& c, int p, int q, double alpha) {
  if (p == q) {
    c(p, p) += alpha;
  } else {
    c(p, q) += 0.5 * alpha;
    c(q, p) += 0.5 * alpha;
  }
}

}  // namespace

TwoBallForm assemble_gamma2_form(const WeightedGraph& g, const BallDecomposition& ball) {
  const int x = ball.center;
  const double wx = g.vertex_weight(x);

  TwoBallForm form;
  form.center = x;
  form.variables = ball.sphere1;
  form.variables.insert(form.variables.end(), ball.sphere2.begin(), ball.sphere2.end());
  form.sphere1_count = static_cast<int>(ball.sphere1.size());
  const int m = static_cast<int>(form.variables.size());
  form.coeff = SymmetricMatrix(m);

  std::unordered_map<int, int> index;
  index.reserve(m);
  for (int k = 0; k < m; ++k) index[form.variables[k]] = k;

  // Degenerate (x, v, x) constellations merged with the lone sum of
  // w_xv f(v)^2: diagonal weight (w_xv + w_xv^2 / w(v)) / (2 w(x)).
  for (int v : ball.sphere1) {
    const double wxv = g.weight(x, v);
    add_term(form.coeff, index[v], index[v], (wxv + wxv * wxv / g.vertex_weight(v)) / (2.0 * wx));
  }

  // Triangles and linears share one kernel: the ordered constellation
  // (x, v, u) contributes (w_xv w_uv / w(v) w(x)) [ (f(u) - f(v))^2 / 2 - f(u) f(v) ].
  auto add_constellations = [&](const std::vector<VertexPair>& pairs) {
    for (const VertexPair& p : pairs) {
      const double c = g.weight(x, p.v) * g.weight(p.u, p.v) / (g.vertex_weight(p.v) * wx);
      const int iv = index[p.v];
      const int iu = index[p.u];
      add_term(form.coeff, iu, iu, 0.5 * c);
      add_term(form.coeff, iv, iv, 0.5 * c);
      add_term(form.coeff, iu, iv, -2.0 * c);
    }
  };
  add_constellations(ball.triangles);
  add_constellations(ball.linears);

  // Rank-one piece (sum_v w_xv f(v))^2 / w(x)^2.
  const int s1 = form.sphere1_count;
  for (int a = 0; a < s1; ++a) {
    const double wa = g.weight(x, form.variables[a]);
    add_term(form.coeff, a, a, wa * wa / (wx * wx));
    for (int b = a + 1; b < s1; ++b) {
      const double wb = g.weight(x, form.variables[b]);
      add_term(form.coeff, a, b, 2.0 * wa * wb / (wx * wx));
    }
  }

  return form;
}

QuadraticForm eliminate_sphere2(const TwoBallForm& form, const BallDecomposition& ball) {
  const int m = static_cast<int>(form.variables.size());
  const int s1 = form.sphere1_count;

  // Work on a copy; the Schur updates below only ever touch the sphere-1
  // block because sphere-2 variables are mutually decoupled.
  SymmetricMatrix c = form.coeff;
  for (int j = s1; j < m; ++j)
    for (int k = j + 1; k < m; ++k)
      if (c(j, k) != 0.0)
        throw Error("eliminate_sphere2: sphere-2 variables are unexpectedly coupled");

  QuadraticForm q;
  q.center = form.center;
  q.variables = ball.sphere1;
  q.matrix = SymmetricMatrix(s1);
  for (int j = s1; j < m; ++j) {
    const double pivot = c(j, j);
    if (!(pivot > 0.0)) throw Error("eliminate_sphere2: nonpositive pivot");
    SphereTwoElimination elim;
    elim.u = form.variables[j];
    elim.coeffs.resize(s1);
    for (int i = 0; i < s1; ++i) elim.coeffs[i] = -c(j, i) / pivot;
    for (int i = 0; i < s1; ++i)
      for (int k = i; k < s1; ++k) {
        const double update = c(i, j) * c(j, k) / pivot;
        c(i, k) -= update;
        if (k != i) c(k, i) -= update;
      }
    q.eliminations.push_back(std::move(elim));
  }

  // Halve to pass from the 2*Gamma2 coefficients to Gamma2 itself.
  for (int i = 0; i < s1; ++i)
    for (int k = 0; k < s1; ++k) q.matrix(i, k) = 0.5 * c(i, k);
  q.matrix.symmetrize();
  return q;
}

SymmetricMatrix curvature_matrix(const WeightedGraph& g, const QuadraticForm& q) {
  const int d = static_cast<int>(q.variables.size());
  const double wx = g.vertex_weight(q.center);
  std::vector<double> inv_sqrt(d);
  for (int i = 0; i < d; ++i) inv_sqrt[i] = 1.0 / std::sqrt(g.weight(q.center, q.variables[i]));
  SymmetricMatrix m(d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) m(i, j) = 2.0 * wx * q.matrix(i, j) * inv_sqrt[i] * inv_sqrt[j];
  m.symmetrize();
  return m;
}

CurvatureResult bakry_emery_curvature(const WeightedGraph& g, int x, const Tolerances& tol) {
  g.check_vertex(x);
  if (g.degree(x) == 0) throw DegenerateVertex("vertex " + std::to_string(x) + " has no neighbours");

  const BallDecomposition ball = decompose_ball(g, x);
  const TwoBallForm form = assemble_gamma2_form(g, ball);
  const QuadraticForm q = eliminate_sphere2(form, ball);
  const SymmetricMatrix m = curvature_matrix(g, q);
  const EigenDecomposition eig = eigen_symmetric(m, tol);

  CurvatureResult result;
  result.curvature = eig.values.front();
  result.spectrum = eig.values;

  // Map the least eigenvector back through the congruence, then extend to
  // sphere2 with the substitution the elimination recorded. Ties in the
  // least eigenvalue resolve to the solver's first eigenvector.
  const int d = static_cast<int>(q.variables.size());
  result.witness.assign(g.num_vertices(), 0.0);
  std::vector<double> f1(d);
  for (int i = 0; i < d; ++i) {
    f1[i] = eig.vectors.front()[i] / std::sqrt(g.weight(x, q.variables[i]));
    result.witness[q.variables[i]] = f1[i];
  }
  for (const SphereTwoElimination& elim : q.eliminations) {
    double value = 0.0;
    for (int i = 0; i < d; ++i) value += elim.coeffs[i] * f1[i];
    result.witness[elim.u] = value;
  }
  return result;
}

std::vector<CurvatureResult> curvature_all(const WeightedGraph& g, const Tolerances& tol) {
  std::vector<CurvatureResult> results;
  results.reserve(g.num_vertices());
  for (int x = 0; x < g.num_vertices(); ++x) results.push_back(bakry_emery_curvature(g, x, tol));
  return results;
}

}  // namespace becurv

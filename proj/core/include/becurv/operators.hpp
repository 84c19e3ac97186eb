#pragma once

#include <cstdint>

#include "becurv/graph.hpp"

namespace becurv {

/// Total function on the vertex set; values[i] belongs to vertex i.
using VertexFunction = std::vector<double>;

/// Weighted graph Laplacian at x: (1/w(x)) * sum over v~x of w_xv (f(v) - f(x)).
double laplacian(const WeightedGraph& g, const VertexFunction& f, int x);

/// Carre du champ at x: (1/2w(x)) * sum over v~x of w_xv (f(v) - f(x))(h(v) - h(x)).
double gamma(const WeightedGraph& g, const VertexFunction& f, const VertexFunction& h, int x);
double gamma(const WeightedGraph& g, const VertexFunction& f, int x);

/// Iterated form straight from the definition,
///   Gamma2(f)(x) = (1/2) (Lap Gamma(f)(x) - 2 Gamma(f, Lap f)(x)),
/// with no algebraic rearrangement. Slow but independent of the assembled
/// pipeline; the cross-checks in the test suite rely on that independence.
double gamma2_direct(const WeightedGraph& g, const VertexFunction& f, int x);

/// Lower-bounds the curvature at x by random-restart coordinate descent on
/// the Rayleigh quotient Gamma2(f)(x) / Gamma(f)(x) over functions on the
/// two-ball with f(x) = 0. Every quotient it evaluates is an upper bound on
/// the true infimum, so the returned minimum converges from above as trials
/// grow. Deterministic for a fixed (trials, seed) pair.
double rayleigh_oracle(const WeightedGraph& g, int x, int trials, std::uint64_t seed);

}  // namespace becurv

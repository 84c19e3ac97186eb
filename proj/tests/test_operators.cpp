#include "becurv/operators.hpp"

#include <cmath>

#include "becurv/errors.hpp"
#include "doctest.h"
#include "support/test_util.hpp"

using becurv::Edge;
using becurv::VertexFunction;
using becurv::WeightedGraph;
using becurv::gamma;
using becurv::gamma2_direct;
using becurv::laplacian;
using becurv::rayleigh_oracle;

namespace {

WeightedGraph umbrella(int n, double rho) {
  std::vector<Edge> edges;
  for (int i = 1; i <= n; ++i) edges.push_back({0, i, 1.0});
  for (int i = 1; i <= n; ++i) edges.push_back({i, i % n + 1, rho});
  return WeightedGraph(n + 1, edges);
}

WeightedGraph star(int leaves) {
  std::vector<Edge> edges;
  for (int i = 1; i <= leaves; ++i) edges.push_back({0, i, 1.0});
  return WeightedGraph(leaves + 1, edges);
}

const WeightedGraph kPath(3, {{0, 1, 1.0}, {1, 2, 1.0}});

}  // namespace

TEST_CASE("operators on the single edge") {
  const WeightedGraph g(2, {{0, 1, 1.0}});
  for (double a : {1.0, 3.0, -0.7}) {
    const VertexFunction f{0.0, a};
    CHECK(laplacian(g, f, 0) == doctest::Approx(a).epsilon(1e-15));
    CHECK(gamma(g, f, 0) == doctest::Approx(0.5 * a * a).epsilon(1e-15));
    // Expanding the definition by hand gives Gamma2 = a^2 exactly.
    CHECK(gamma2_direct(g, f, 0) == doctest::Approx(a * a).epsilon(1e-14));
  }
}

TEST_CASE("iterated form on the 3-path end") {
  // Direct expansion with f = (0, a, t): Gamma2(f)(0) = t^2/8 - a t/2 + a^2.
  testutil::Rng rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    const double a = rng.uniform(-2.0, 2.0);
    const double t = rng.uniform(-4.0, 4.0);
    const VertexFunction f{0.0, a, t};
    const double expected = t * t / 8.0 - a * t / 2.0 + a * a;
    CHECK(gamma2_direct(kPath, f, 0) == doctest::Approx(expected).epsilon(1e-13));
  }
  // The minimizing far value t = 2a leaves a^2 / 2.
  const VertexFunction f{0.0, 1.0, 2.0};
  CHECK(gamma2_direct(kPath, f, 0) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("laplacian of an indicator at the 3-rim hub") {
  const WeightedGraph g = umbrella(3, 1.0);
  VertexFunction f(4, 0.0);
  f[1] = 1.0;
  CHECK(laplacian(g, f, 0) == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
}

TEST_CASE("hub forms on a 3-rim umbrella match the expanded expressions") {
  testutil::Rng rng(22);
  for (double rho : {0.4, 1.0, std::sqrt(3.0), 2.3}) {
    const WeightedGraph g = umbrella(3, rho);
    for (int trial = 0; trial < 5; ++trial) {
      VertexFunction f{0.0, rng.uniform(-2, 2), rng.uniform(-2, 2), rng.uniform(-2, 2)};
      double sq = 0.0, cross = 0.0;
      for (int i = 1; i <= 3; ++i) sq += f[i] * f[i];
      for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j) cross += f[i] * f[j];
      CHECK(gamma(g, f, 0) == doctest::Approx(sq / 6.0).epsilon(1e-13));
      const double den = 1.0 + 2.0 * rho;
      const double expected =
          (rho / (6.0 * den) + 2.0 / 9.0) * sq + (1.0 / 9.0 - 2.0 * rho / (3.0 * den)) * cross;
      CHECK(gamma2_direct(g, f, 0) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("hub form on a 4-rim umbrella matches the expanded expression") {
  testutil::Rng rng(23);
  for (double rho : {0.5, 1.2, std::sqrt(2.0)}) {
    const WeightedGraph g = umbrella(4, rho);
    VertexFunction f(5, 0.0);
    for (int trial = 0; trial < 5; ++trial) {
      for (int i = 1; i <= 4; ++i) f[i] = rng.uniform(-2, 2);
      double sq = 0.0, all = 0.0, adj = 0.0;
      for (int i = 1; i <= 4; ++i) sq += f[i] * f[i];
      for (int i = 1; i <= 4; ++i)
        for (int j = i + 1; j <= 4; ++j) all += f[i] * f[j];
      for (int i = 1; i <= 4; ++i) adj += f[i] * f[i % 4 + 1];
      CHECK(gamma(g, f, 0) == doctest::Approx(sq / 8.0).epsilon(1e-13));
      const double den = 1.0 + 2.0 * rho;
      const double expected =
          (rho / (8.0 * den) + 5.0 / 32.0) * sq + all / 16.0 - rho / (2.0 * den) * adj;
      CHECK(gamma2_direct(g, f, 0) == doctest::Approx(expected).epsilon(1e-12));
    }
  }
}

TEST_CASE("star hub iterated form") {
  // With unit spokes and f(hub) = 0:
  // Gamma2 = ((1/n) sum a_i^2 + (1/n^2) (sum a_i)^2) / 2.
  testutil::Rng rng(33);
  for (int n : {2, 4, 7}) {
    const WeightedGraph g = star(n);
    VertexFunction f(n + 1, 0.0);
    double sq = 0.0, sum = 0.0;
    for (int i = 1; i <= n; ++i) {
      f[i] = rng.uniform(-1, 1);
      sq += f[i] * f[i];
      sum += f[i];
    }
    const double expected = 0.5 * (sq / n + sum * sum / (n * n));
    CHECK(gamma2_direct(g, f, 0) == doctest::Approx(expected).epsilon(1e-13));
  }
}

TEST_CASE("operators ignore additive constants and weight scaling") {
  testutil::Rng rng(44);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = rng.uniform_int(3, 8);
    const WeightedGraph g = testutil::random_connected_graph(rng, n, 0.1, 10.0, 0.3);
    VertexFunction f(n), shifted(n);
    for (int v = 0; v < n; ++v) {
      f[v] = rng.uniform(-3, 3);
      shifted[v] = f[v] + 7.25;
    }
    std::vector<Edge> scaled_edges = g.edges();
    const double c = 3.7;
    for (Edge& e : scaled_edges) e.w *= c;
    const WeightedGraph scaled(n, scaled_edges);
    for (int x = 0; x < n; ++x) {
      CHECK(testutil::close_rel(laplacian(g, f, x), laplacian(g, shifted, x), 1e-12));
      CHECK(testutil::close_rel(gamma(g, f, x), gamma(g, shifted, x), 1e-12));
      CHECK(testutil::close_rel(gamma2_direct(g, f, x), gamma2_direct(g, shifted, x), 1e-11));
      CHECK(testutil::close_rel(laplacian(g, f, x), laplacian(scaled, f, x), 1e-12));
      CHECK(testutil::close_rel(gamma(g, f, x), gamma(scaled, f, x), 1e-12));
      CHECK(testutil::close_rel(gamma2_direct(g, f, x), gamma2_direct(scaled, f, x), 1e-11));
      CHECK(gamma(g, f, x) >= 0.0);
    }
  }
}

TEST_CASE("gamma is bilinear") {
  testutil::Rng rng(55);
  const WeightedGraph g = testutil::random_connected_graph(rng, 6, 0.5, 2.0, 0.4);
  VertexFunction f(6), h(6), k(6);
  for (int v = 0; v < 6; ++v) {
    f[v] = rng.uniform(-1, 1);
    h[v] = rng.uniform(-1, 1);
    k[v] = rng.uniform(-1, 1);
  }
  VertexFunction hk(6);
  for (int v = 0; v < 6; ++v) hk[v] = 2.0 * h[v] - 3.0 * k[v];
  for (int x = 0; x < 6; ++x) {
    const double lhs = gamma(g, f, hk, x);
    const double rhs = 2.0 * gamma(g, f, h, x) - 3.0 * gamma(g, f, k, x);
    CHECK(testutil::close_rel(lhs, rhs, 1e-13));
    CHECK(gamma(g, f, h, x) == gamma(g, h, f, x));
  }
}

TEST_CASE("functions vanishing on the closed neighbourhood have nonnegative gamma2") {
  testutil::Rng rng(66);
  for (int trial = 0; trial < 20; ++trial) {
    const int n = rng.uniform_int(4, 9);
    const WeightedGraph g = testutil::random_connected_graph(rng, n, 0.1, 10.0, 0.3);
    const int x = rng.uniform_int(0, n - 1);
    VertexFunction f(n);
    for (int v = 0; v < n; ++v) f[v] = rng.uniform(-5, 5);
    f[x] = 0.0;
    for (const auto& [v, w] : g.incident(x)) f[v] = 0.0;
    CHECK(gamma(g, f, x) == 0.0);
    CHECK(gamma2_direct(g, f, x) >= -1e-12);
  }
}

TEST_CASE("operators validate their arguments") {
  const WeightedGraph g(2, {{0, 1, 1.0}});
  const VertexFunction short_f{0.0};
  CHECK_THROWS_AS(laplacian(g, short_f, 0), becurv::DomainError);
  CHECK_THROWS_AS(gamma(g, short_f, 0), becurv::DomainError);
  CHECK_THROWS_AS(gamma2_direct(g, short_f, 0), becurv::DomainError);
  CHECK_THROWS_AS(laplacian(g, {0.0, 1.0}, 5), becurv::DomainError);
}

TEST_CASE("rayleigh oracle pins the single edge at 2") {
  const WeightedGraph g(2, {{0, 1, 1.0}});
  CHECK(testutil::close_abs(rayleigh_oracle(g, 0, 8, 1), 2.0, 1e-9));
  CHECK(testutil::close_abs(rayleigh_oracle(g, 1, 8, 1), 2.0, 1e-9));
}

TEST_CASE("rayleigh oracle on small frozen cases") {
  // Wheel with 3 rim vertices, all weights 1: hub curvature is 1.
  CHECK(testutil::close_abs(rayleigh_oracle(umbrella(3, 1.0), 0, 40, 7), 1.0, 1e-6));
  // Path end and middle both sit at 1.
  CHECK(testutil::close_abs(rayleigh_oracle(kPath, 0, 40, 7), 1.0, 1e-6));
  CHECK(testutil::close_abs(rayleigh_oracle(kPath, 1, 40, 7), 1.0, 1e-6));
  // Star hub sits at 1 for any number of leaves.
  CHECK(testutil::close_abs(rayleigh_oracle(star(3), 0, 40, 7), 1.0, 1e-6));
  CHECK(testutil::close_abs(rayleigh_oracle(star(5), 0, 40, 7), 1.0, 1e-6));
}

TEST_CASE("rayleigh oracle is deterministic and validates input") {
  const WeightedGraph g = umbrella(4, 1.3);
  CHECK(rayleigh_oracle(g, 2, 12, 99) == rayleigh_oracle(g, 2, 12, 99));
  CHECK_THROWS_AS(rayleigh_oracle(g, 0, 0, 1), becurv::DomainError);
  const WeightedGraph lonely(1, {});
  CHECK_THROWS_AS(rayleigh_oracle(lonely, 0, 4, 1), becurv::DegenerateVertex);
}

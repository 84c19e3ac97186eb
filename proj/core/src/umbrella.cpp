#include "becurv/umbrella.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "becurv/errors.hpp"

namespace becurv {

namespace {

constexpr double kPi = std::numbers::pi;

void check_spec(const UmbrellaSpec& spec) {
  if (spec.n < 3) throw DomainError("umbrella needs a rim of at least 3 vertices");
  if (!(spec.rho > 0.0) || !std::isfinite(spec.rho))
    throw DomainError("umbrella rim weight must be positive and finite");
}

}  // namespace

WeightedGraph make_umbrella(const UmbrellaSpec& spec) {
  check_spec(spec);
  std::vector<Edge> edges;
  edges.reserve(2 * spec.n);
  for (int i = 1; i <= spec.n; ++i) edges.push_back({0, i, 1.0});
  for (int i = 1; i <= spec.n; ++i) edges.push_back({i, i % spec.n + 1, spec.rho});
  return WeightedGraph(spec.n + 1, edges);
}

double rho_euclidean(int n) {
  if (n < 3) throw DomainError("rim needs at least 3 vertices");
  return std::sqrt(2.0 - 2.0 * std::cos(2.0 * kPi / n));
}

double rho_spherical(int n, double radius) {
  if (n < 3) throw DomainError("rim needs at least 3 vertices");
  const double theta = 1.0 / radius;  // spoke length in radians
  if (!(theta > 0.0) || !(theta < kPi))
    throw DomainError("unit spokes only fit on a sphere with 1/R in (0, pi)");
  return 2.0 * radius * std::asin(std::sin(theta) * std::sin(kPi / n));
}

double rho_hyperbolic(int n, double scale) {
  if (n < 3) throw DomainError("rim needs at least 3 vertices");
  if (!(scale > 0.0)) throw DomainError("hyperbolic scale must be positive");
  const double theta = 1.0 / scale;
  // sinh overflows past ~710; switch to the asymptotic expansion
  // asinh(sinh(theta) k) = theta + log(k) + log1p(-exp(-2 theta))/... which
  // at this magnitude is theta + log(k) to well below double precision.
  if (theta > 700.0) return 2.0 * scale * (theta + std::log(std::sin(kPi / n)));
  return 2.0 * scale * std::asinh(std::sinh(theta) * std::sin(kPi / n));
}

const char* to_string(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::euclidean: return "euclidean";
    case EmbeddingKind::spherical: return "spherical";
    case EmbeddingKind::hyperbolic: return "hyperbolic";
    case EmbeddingKind::none: return "none";
  }
  return "none";
}

EmbeddingInfo classify_embedding(const UmbrellaSpec& spec, const Tolerances& tol) {
  check_spec(spec);
  const int n = spec.n;
  const double rho = spec.rho;
  const double rho_flat = rho_euclidean(n);

  EmbeddingInfo info;
  if (std::abs(rho - rho_flat) <= tol.euclidean_match_tol) {
    info.kind = EmbeddingKind::euclidean;
    return info;
  }
  try {
    if (rho < rho_flat) {
      // Wider brackets would admit spokes past the equator, where the rim
      // length is no longer monotone in the radius.
      const double lo = 2.0 / kPi + 1e-9;
      const double hi = 1e6;
      auto fn = [&](double r) { return rho_spherical(n, r) - rho; };
      if ((fn(lo) > 0.0) == (fn(hi) > 0.0)) {
        info.diagnostic = "rim weight " + std::to_string(rho) +
                          " is below what any sphere radius in the search bracket reaches";
        return info;
      }
      info.kind = EmbeddingKind::spherical;
      info.scale = bisect_root(fn, lo, hi, tol.bisect_tol);
    } else if (rho < 2.0) {
      auto fn = [&](double s) { return rho_hyperbolic(n, s) - rho; };
      info.kind = EmbeddingKind::hyperbolic;
      info.scale = bisect_root(fn, 1e-6, 1e6, tol.bisect_tol);
    } else {
      info.diagnostic = "rim weight " + std::to_string(rho) +
                        " reaches or exceeds the two-spoke limit 2";
    }
  } catch (const Error& e) {
    info.kind = EmbeddingKind::none;
    info.scale.reset();
    info.diagnostic = e.what();
  }
  return info;
}

std::vector<double> closed_form_spectrum(int n, double rho) {
  if (!(rho > 0.0) || !std::isfinite(rho))
    throw DomainError("rim weight must be positive and finite");
  const double d = 1.0 + 2.0 * rho;
  std::vector<double> values;
  switch (n) {
    case 3:
      values = {(2.0 + rho) / d, (1.0 + 5.0 * rho) / d, (1.0 + 5.0 * rho) / d};
      break;
    case 4:
      values = {(2.0 + rho) / d, (1.0 + 3.0 * rho) / d, (1.0 + 3.0 * rho) / d,
                (1.0 + 7.0 * rho) / d};
      break;
    case 5: {
      const double r5 = std::sqrt(5.0);
      values = {(2.0 + rho) / d,
                (1.0 + (4.0 - r5) * rho) / d, (1.0 + (4.0 - r5) * rho) / d,
                (1.0 + (4.0 + r5) * rho) / d, (1.0 + (4.0 + r5) * rho) / d};
      break;
    }
    case 6:
      values = {(2.0 + rho) / d, (1.0 + 7.0 * rho) / d,
                (1.0 + rho) / d, (1.0 + rho) / d,
                (1.0 + 5.0 * rho) / d, (1.0 + 5.0 * rho) / d};
      break;
    default:
      throw Unsupported("closed-form spectrum exists only for rims of 3 to 6 vertices");
  }
  std::sort(values.begin(), values.end());
  return values;
}

std::vector<UmbrellaTableRow> curvature_table(const std::vector<int>& ns, const Tolerances& tol) {
  std::vector<UmbrellaTableRow> rows;
  rows.reserve(ns.size());
  for (int n : ns) {
    UmbrellaTableRow row;
    row.n = n;
    row.rho_spherical = rho_spherical(n, 1.0);
    row.rho_euclidean = rho_euclidean(n);
    row.rho_hyperbolic = rho_hyperbolic(n, 1.0);
    auto hub_curvature = [&](double rho) {
      return bakry_emery_curvature(make_umbrella({n, rho}), 0, tol).curvature;
    };
    row.k_spherical = hub_curvature(row.rho_spherical);
    row.k_euclidean = hub_curvature(row.rho_euclidean);
    row.k_hyperbolic = hub_curvature(row.rho_hyperbolic);
    rows.push_back(row);
  }
  return rows;
}

std::vector<SweepRow> sweep(int n, double rho_min, double rho_max, int steps,
                            const Tolerances& tol) {
  if (n < 3) throw DomainError("umbrella needs a rim of at least 3 vertices");
  if (!(rho_min > 0.0) || !(rho_min < rho_max))
    throw DomainError("sweep needs 0 < rho_min < rho_max");
  if (steps < 2) throw DomainError("sweep needs at least 2 steps");

  std::vector<SweepRow> rows;
  rows.reserve(steps);
  for (int k = 0; k < steps; ++k) {
    SweepRow row;
    row.rho = rho_min + (rho_max - rho_min) * k / (steps - 1);
    row.hub = bakry_emery_curvature(make_umbrella({n, row.rho}), 0, tol);
    row.embedding = classify_embedding({n, row.rho}, tol);
    if (n <= 6) row.closed_form = closed_form_spectrum(n, row.rho);
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace becurv

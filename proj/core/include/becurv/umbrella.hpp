#pragma once

#include <optional>
#include <string>

#include "becurv/engine.hpp"

namespace becurv {

/// Hub-and-rim graph: vertex 0 is the hub, vertices 1..n the rim cycle.
/// Spokes carry weight 1, rim edges carry weight rho.
struct UmbrellaSpec {
  int n;
  double rho;
};

WeightedGraph make_umbrella(const UmbrellaSpec& spec);

/// Rim edge length when n unit spokes fan out evenly in the plane.
double rho_euclidean(int n);

/// Rim geodesic distance for unit spokes on a sphere of the given radius.
/// Uses the half-angle form of the law of cosines,
///   sin(rho / 2R) = sin(1/R) sin(pi/n),
/// which is stable for every admissible radius. Requires 0 < 1/R < pi.
double rho_spherical(int n, double radius);

/// Rim geodesic distance for unit spokes in the hyperbolic plane of
/// curvature -1/scale^2: sinh(rho / 2s) = sinh(1/s) sin(pi/n).
double rho_hyperbolic(int n, double scale);

enum class EmbeddingKind { euclidean, spherical, hyperbolic, none };
const char* to_string(EmbeddingKind kind);

struct EmbeddingInfo {
  EmbeddingKind kind = EmbeddingKind::none;
  /// Sphere radius or hyperbolic scale; absent for euclidean and none.
  std::optional<double> scale;
  /// Why classification failed, when kind == none.
  std::string diagnostic;
};

/// Decide which constant-curvature plane realizes the umbrella with unit
/// spokes and the requested rim length, inverting the matching law of
/// cosines by bisection. Rim weights at or beyond 2 (and rims shorter than
/// the search bracket can reach) come back as kind none.
EmbeddingInfo classify_embedding(const UmbrellaSpec& spec, const Tolerances& tol = {});

/// Hub curvature-matrix spectrum as explicit rational functions of rho,
/// available for n in {3, 4, 5, 6}; ascending with multiplicity. Throws
/// Unsupported for other n.
std::vector<double> closed_form_spectrum(int n, double rho);

struct UmbrellaTableRow {
  int n;
  double rho_spherical;   // rim length on the unit sphere
  double k_spherical;     // hub curvature at that rim weight
  double rho_euclidean;
  double k_euclidean;
  double rho_hyperbolic;  // rim length at unit hyperbolic scale
  double k_hyperbolic;
};

/// Reference table: for each n, the three unit-scale rim lengths and the
/// hub curvature the full pipeline computes for them.
std::vector<UmbrellaTableRow> curvature_table(const std::vector<int>& ns, const Tolerances& tol = {});

struct SweepRow {
  double rho;
  CurvatureResult hub;
  EmbeddingInfo embedding;
  std::vector<double> closed_form;  // empty when n > 6
};

/// Hub curvature across a uniform rho grid, with the embedding class of
/// each point and, for n <= 6, the closed-form spectrum alongside.
std::vector<SweepRow> sweep(int n, double rho_min, double rho_max, int steps,
                            const Tolerances& tol = {});

}  // namespace becurv

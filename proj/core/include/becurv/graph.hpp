#pragma once

#include <string>
#include <utility>
#include <vector>

namespace becurv {

struct Edge {
  int i;
  int j;
  double w;
};

/// Finite simple connected graph with positive symmetric edge weights.
/// Construction validates everything once; afterwards the object is
/// immutable and all accessors are cheap.
class WeightedGraph {
 public:
  WeightedGraph(int num_vertices, const std::vector<Edge>& edges);

  int num_vertices() const { return n_; }
  int degree(int x) const { return static_cast<int>(adj_[x].size()); }

  /// Incident (neighbour, weight) pairs, ascending by neighbour index.
  const std::vector<std::pair<int, double>>& incident(int x) const { return adj_[x]; }

  bool has_edge(int i, int j) const;
  /// Edge weight, 0.0 when the edge is absent.
  double weight(int i, int j) const;
  /// Vertex weight: sum of incident edge weights.
  double vertex_weight(int x) const { return vertex_weight_[x]; }

  /// Canonical edge list: i < j, sorted lexicographically.
  const std::vector<Edge>& edges() const { return edges_; }

  void check_vertex(int x) const;

 private:
  int n_ = 0;
  std::vector<std::vector<std::pair<int, double>>> adj_;
  std::vector<double> vertex_weight_;
  std::vector<Edge> edges_;
};

enum class GraphFormat { edge_list, json };

/// Edge-list format: first non-comment line is the vertex count, then one
/// `i j w` line per edge; `#` starts a comment line. JSON format:
/// {"num_vertices": N, "edges": [[i, j, w], ...]}.
WeightedGraph parse_graph(const std::string& text, GraphFormat format);

/// Inverse of parse_graph; weights are written with 17 significant digits
/// so a parse / serialize / parse cycle reproduces the graph exactly.
std::string serialize_graph(const WeightedGraph& g, GraphFormat format);

/// One ordered constellation (x, v, u): v is the middle vertex adjacent to
/// the centre, u the far endpoint. The centre is implied by the decomposition.
struct VertexPair {
  int v;
  int u;
};

inline bool operator==(const VertexPair& a, const VertexPair& b) {
  return a.v == b.v && a.u == b.u;
}

/// The two-ball around a centre, split the way the curvature form needs it:
/// triangles are constellations whose far endpoint is again a neighbour of
/// the centre, linears reach sphere2. Together with the degenerate (x, v, x)
/// pairs they cover every walk of length two from the centre exactly once.
struct BallDecomposition {
  int center;
  std::vector<int> sphere1;          // ascending
  std::vector<int> sphere2;          // ascending, disjoint from sphere1
  std::vector<VertexPair> triangles; // ordered by (v, u)
  std::vector<VertexPair> linears;   // ordered by (u, v), so groups by u are contiguous
};

BallDecomposition decompose_ball(const WeightedGraph& g, int x);

}  // namespace becurv

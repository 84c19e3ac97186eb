#include "becurv/graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <queue>
#include <set>
#include <sstream>

#include "becurv/errors.hpp"
#include "json.hpp"

namespace becurv {

namespace {

std::string edge_name(int i, int j) {
  return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

std::string fmt17(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

}  // namespace

WeightedGraph::WeightedGraph(int num_vertices, const std::vector<Edge>& edges) : n_(num_vertices) {
  if (n_ < 1) throw DomainError("graph needs at least one vertex");

  edges_.reserve(edges.size());
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : edges) {
    if (e.i < 0 || e.i >= n_ || e.j < 0 || e.j >= n_)
      throw DomainError("edge " + edge_name(e.i, e.j) + " has a vertex outside [0, " +
                        std::to_string(n_) + ")");
    if (e.i == e.j) throw SelfLoop("self-loop at vertex " + std::to_string(e.i));
    if (!(e.w > 0.0) || !std::isfinite(e.w))
      throw NonPositiveWeight("edge " + edge_name(e.i, e.j) +
                              " needs a positive finite weight, got " + fmt17(e.w));
    const auto key = std::minmax(e.i, e.j);
    if (!seen.insert(key).second)
      throw DuplicateEdge("duplicate edge " + edge_name(key.first, key.second));
    edges_.push_back({key.first, key.second, e.w});
  }
  std::sort(edges_.begin(), edges_.end(), [](const Edge& a, const Edge& b) {
    return std::pair(a.i, a.j) < std::pair(b.i, b.j);
  });

  adj_.resize(n_);
  for (const Edge& e : edges_) {
    adj_[e.i].push_back({e.j, e.w});
    adj_[e.j].push_back({e.i, e.w});
  }
  for (auto& list : adj_) std::sort(list.begin(), list.end());

  vertex_weight_.assign(n_, 0.0);
  for (int x = 0; x < n_; ++x)
    for (const auto& [v, w] : adj_[x]) vertex_weight_[x] += w;

  // Connectivity by BFS from vertex 0.
  std::vector<char> reached(n_, 0);
  std::queue<int> q;
  q.push(0);
  reached[0] = 1;
  int count = 1;
  while (!q.empty()) {
    const int x = q.front();
    q.pop();
    for (const auto& [v, w] : adj_[x])
      if (!reached[v]) {
        reached[v] = 1;
        ++count;
        q.push(v);
      }
  }
  if (count != n_) {
    int missing = 0;
    while (reached[missing]) ++missing;
    throw Disconnected("vertex " + std::to_string(missing) + " is not reachable from vertex 0");
  }
}

bool WeightedGraph::has_edge(int i, int j) const {
  return weight(i, j) != 0.0;
}

double WeightedGraph::weight(int i, int j) const {
  check_vertex(i);
  check_vertex(j);
  const auto& list = adj_[i];
  auto it = std::lower_bound(list.begin(), list.end(), std::pair(j, 0.0));
  if (it != list.end() && it->first == j) return it->second;
  return 0.0;
}

void WeightedGraph::check_vertex(int x) const {
  if (x < 0 || x >= n_)
    throw DomainError("vertex " + std::to_string(x) + " outside [0, " + std::to_string(n_) + ")");
}

namespace {

WeightedGraph parse_edge_list(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  long line_no = 0;
  long n = -1;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    std::istringstream fields(line);
    std::string extra;
    if (n < 0) {
      if (!(fields >> n)) throw ParseError("expected the vertex count", line_no);
      if (n < 1) throw ParseError("vertex count must be positive", line_no);
      if (fields >> extra) throw ParseError("unexpected token after the vertex count", line_no);
    } else {
      long i = 0, j = 0;
      double w = 0.0;
      if (!(fields >> i >> j >> w)) throw ParseError("expected an edge line `i j w`", line_no);
      if (fields >> extra) throw ParseError("unexpected token after an edge line", line_no);
      edges.push_back({static_cast<int>(i), static_cast<int>(j), w});
    }
  }
  if (n < 0) throw ParseError("missing the vertex count", std::max(line_no, 1L));
  return WeightedGraph(static_cast<int>(n), edges);
}

WeightedGraph parse_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("invalid JSON: ") + e.what(), static_cast<long>(e.byte));
  }
  if (!doc.is_object() || !doc.contains("num_vertices") || !doc.contains("edges"))
    throw ParseError("expected an object with num_vertices and edges", 0);
  if (!doc["num_vertices"].is_number_integer())
    throw ParseError("num_vertices must be an integer", 0);
  if (!doc["edges"].is_array()) throw ParseError("edges must be an array", 0);
  std::vector<Edge> edges;
  for (const auto& item : doc["edges"]) {
    if (!item.is_array() || item.size() != 3 || !item[0].is_number_integer() ||
        !item[1].is_number_integer() || !item[2].is_number())
      throw ParseError("each edge must be [i, j, w]", 0);
    edges.push_back({item[0].get<int>(), item[1].get<int>(), item[2].get<double>()});
  }
  return WeightedGraph(doc["num_vertices"].get<int>(), edges);
}

}  // namespace

WeightedGraph parse_graph(const std::string& text, GraphFormat format) {
  return format == GraphFormat::edge_list ? parse_edge_list(text) : parse_json(text);
}

std::string serialize_graph(const WeightedGraph& g, GraphFormat format) {
  std::string out;
  if (format == GraphFormat::edge_list) {
    out += std::to_string(g.num_vertices());
    out += '\n';
    for (const Edge& e : g.edges()) {
      out += std::to_string(e.i);
      out += ' ';
      out += std::to_string(e.j);
      out += ' ';
      out += fmt17(e.w);
      out += '\n';
    }
  } else {
    out += "{\"edges\":[";
    bool first = true;
    for (const Edge& e : g.edges()) {
      if (!first) out += ',';
      first = false;
      out += '[' + std::to_string(e.i) + ',' + std::to_string(e.j) + ',' + fmt17(e.w) + ']';
    }
    out += "],\"num_vertices\":" + std::to_string(g.num_vertices()) + "}";
  }
  return out;
}

BallDecomposition decompose_ball(const WeightedGraph& g, int x) {
  g.check_vertex(x);
  BallDecomposition ball;
  ball.center = x;
  std::vector<char> in_sphere1(g.num_vertices(), 0);
  for (const auto& [v, w] : g.incident(x)) {
    ball.sphere1.push_back(v);
    in_sphere1[v] = 1;
  }
  for (int v : ball.sphere1) {
    for (const auto& [u, w] : g.incident(v)) {
      if (u == x) continue;  // the degenerate (x, v, x) constellation
      if (in_sphere1[u])
        ball.triangles.push_back({v, u});
      else
        ball.linears.push_back({v, u});
    }
  }
  std::sort(ball.linears.begin(), ball.linears.end(), [](const VertexPair& a, const VertexPair& b) {
    return std::pair(a.u, a.v) < std::pair(b.u, b.v);
  });
  for (const VertexPair& p : ball.linears)
    if (ball.sphere2.empty() || ball.sphere2.back() != p.u) ball.sphere2.push_back(p.u);
  return ball;
}

}  // namespace becurv

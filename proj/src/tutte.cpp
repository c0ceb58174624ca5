#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "luneknot/io.hpp"

namespace luneknot {

namespace {

std::vector<std::vector<int>> neighbours(const PlanarMap& m) {
  std::vector<std::vector<int>> adj(m.num_vertices());
  for (Dart d = 0; d < m.num_darts(); ++d) adj[m.vertex_of(d)].push_back(m.vertex_of(alpha(d)));
  return adj;
}

bool connected_without(const std::vector<std::vector<int>>& adj, int a, int b) {
  const int n = static_cast<int>(adj.size());
  std::vector<char> seen(n, 0);
  seen[a] = seen[b] = 1;
  int start = 0;
  while (start == a || start == b) ++start;
  std::vector<int> stack = {start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w : adj[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == n - (a == b ? 1 : 2);
}

}  // namespace

bool is_three_connected(const PlanarMap& map) {
  const int n = map.num_vertices();
  if (n < 4 || !map.is_connected() || !is_simple(map)) return false;
  const auto adj = neighbours(map);
  for (int a = 0; a < n; ++a)
    for (int b = a; b < n; ++b)
      if (!connected_without(adj, a, b)) return false;
  return true;
}

Embedding tutte_embed(const PlanarMap& map, int outer_face) {
  if (outer_face < 0 || outer_face >= map.num_faces())
    throw Error(ErrorCode::BadParams, "face " + std::to_string(outer_face) + " does not exist");
  if (!is_three_connected(map)) throw Error(ErrorCode::NotThreeConnected, "Tutte drawing needs a 3-connected simple map");
  const int n = map.num_vertices();
  std::vector<int> boundary;
  const Dart first = map.face_dart(outer_face);
  Dart d = first;
  do {
    boundary.push_back(map.vertex_of(d));
    d = map.phi(d);
  } while (d != first);

  Embedding emb;
  emb.xy.assign(n, {0.0, 0.0});
  std::vector<int> index(n, -1);
  std::vector<char> fixed(n, 0);
  const int k = static_cast<int>(boundary.size());
  for (int i = 0; i < k; ++i) {
    // Walking the outer face keeps it on the right, so the polygon runs
    // counterclockwise.
    const double t = 2.0 * std::numbers::pi * i / k;
    emb.xy[boundary[i]] = {std::cos(t), std::sin(t)};
    fixed[boundary[i]] = 1;
  }
  int m = 0;
  for (int v = 0; v < n; ++v)
    if (!fixed[v]) index[v] = m++;
  if (m == 0) return emb;

  const auto adj = neighbours(map);
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  Eigen::MatrixXd rhs = Eigen::MatrixXd::Zero(m, 2);
  for (int v = 0; v < n; ++v) {
    if (fixed[v]) continue;
    const int i = index[v];
    a(i, i) = static_cast<double>(adj[v].size());
    for (int w : adj[v]) {
      if (fixed[w]) {
        rhs(i, 0) += emb.xy[w][0];
        rhs(i, 1) += emb.xy[w][1];
      } else {
        a(i, index[w]) -= 1.0;
      }
    }
  }
  Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
  if (!lu.isInvertible()) throw Error(ErrorCode::SingularSystem, "barycentric system is singular");
  const Eigen::MatrixXd x = lu.solve(rhs);
  emb.max_residual = (a * x - rhs).cwiseAbs().maxCoeff();
  if (!std::isfinite(emb.max_residual) || emb.max_residual > 1e-9)
    throw Error(ErrorCode::SingularSystem, "residual " + std::to_string(emb.max_residual));
  for (int v = 0; v < n; ++v)
    if (!fixed[v]) emb.xy[v] = {x(index[v], 0), x(index[v], 1)};
  return emb;
}

Embedding circular_layout(const PlanarMap& map) {
  Embedding emb;
  const int n = map.num_vertices();
  for (int v = 0; v < n; ++v) {
    const double t = 2.0 * std::numbers::pi * v / n;
    emb.xy.push_back({std::cos(t), std::sin(t)});
  }
  return emb;
}

Embedding best_layout(const PlanarMap& map) {
  if (!is_three_connected(map)) return circular_layout(map);
  int outer = 0;
  for (int f = 1; f < map.num_faces(); ++f)
    if (map.face_degree(f) > map.face_degree(outer)) outer = f;
  return tutte_embed(map, outer);
}

namespace {

double cross(std::array<double, 2> o, std::array<double, 2> a, std::array<double, 2> b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

bool segments_cross(std::array<double, 2> p1, std::array<double, 2> p2, std::array<double, 2> q1,
                    std::array<double, 2> q2, double tol) {
  const double d1 = cross(q1, q2, p1), d2 = cross(q1, q2, p2);
  const double d3 = cross(p1, p2, q1), d4 = cross(p1, p2, q2);
  return ((d1 > tol && d2 < -tol) || (d1 < -tol && d2 > tol)) && ((d3 > tol && d4 < -tol) || (d3 < -tol && d4 > tol));
}

}  // namespace

bool has_crossing_edges(const PlanarMap& map, const Embedding& emb, double tol) {
  for (int e = 0; e < map.num_edges(); ++e) {
    const int a = map.vertex_of(2 * e), b = map.vertex_of(2 * e + 1);
    for (int f = e + 1; f < map.num_edges(); ++f) {
      const int c = map.vertex_of(2 * f), d = map.vertex_of(2 * f + 1);
      if (a == c || a == d || b == c || b == d) continue;
      if (segments_cross(emb.xy[a], emb.xy[b], emb.xy[c], emb.xy[d], tol)) return true;
    }
  }
  return false;
}

}  // namespace luneknot

#include "luneknot/medial.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

namespace luneknot {

PlaneGraph::PlaneGraph(PlanarMap map) : map_(std::move(map)) { require_sphere(map_); }

PlaneGraph dual(const PlaneGraph& g) { return PlaneGraph(dual(g.map())); }

int FaceColoring::black_count() const { return static_cast<int>(std::count(black.begin(), black.end(), true)); }

const char* to_string(SpecialTag tag) {
  switch (tag) {
    case SpecialTag::Wheel: return "Wheel";
    case SpecialTag::Cubic: return "Cubic";
    case SpecialTag::Triangulation: return "Triangulation";
    case SpecialTag::Other: return "Other";
  }
  return "Other";
}

Universe medial(const PlaneGraph& g) {
  const PlanarMap& m = g.map();
  if (m.num_edges() < 2) throw Error(ErrorCode::TooSmall, "medial needs at least two edges");
  // Medial edge x is the corner (x, sigma x). Its dart 2x sits on edge(x),
  // dart 2x+1 on edge(sigma x).
  std::vector<std::vector<Dart>> rot(m.num_edges());
  for (int k = 0; k < m.num_edges(); ++k) {
    const Dart x = 2 * k;
    const Dart y = alpha(x);
    rot[k] = {2 * x, 2 * m.sigma_inv(x) + 1, 2 * y, 2 * m.sigma_inv(y) + 1};
  }
  return as_universe(PlanarMap::from_dart_rotations(rot));
}

FaceColoring checkerboard(const Universe& u, bool seed_black) {
  const PlanarMap& m = u.map();
  std::vector<int> color(m.num_faces(), -1);
  // Faces adjacent across each edge, gathered once.
  std::vector<std::vector<int>> adj(m.num_faces());
  for (Dart d = 0; d < m.num_darts(); ++d) adj[m.face_of(d)].push_back(m.face_of(alpha(d)));
  std::deque<int> queue;
  const int seed = m.face_of(0);
  color[seed] = seed_black ? 1 : 0;
  queue.push_back(seed);
  while (!queue.empty()) {
    const int f = queue.front();
    queue.pop_front();
    for (int h : adj[f]) {
      if (color[h] == -1) {
        color[h] = 1 - color[f];
        queue.push_back(h);
      } else if (color[h] == color[f]) {
        throw Error(ErrorCode::ImproperColoring, "faces are not two-colorable");
      }
    }
  }
  FaceColoring c;
  c.black.resize(m.num_faces());
  for (int f = 0; f < m.num_faces(); ++f) c.black[f] = color[f] == 1;
  return c;
}

PlaneGraph premedial(const Universe& u, const FaceColoring& coloring) {
  const PlanarMap& m = u.map();
  if (static_cast<int>(coloring.black.size()) != m.num_faces())
    throw Error(ErrorCode::ImproperColoring, "coloring size does not match face count");
  for (Dart d = 0; d < m.num_darts(); ++d)
    if (coloring.black[m.face_of(d)] == coloring.black[m.face_of(alpha(d))])
      throw Error(ErrorCode::ImproperColoring, "edge " + std::to_string(edge_of(d)) + " has equal colors on both sides");
  // Each dart y of a black face marks the corner (sigma^-1 y, y) at
  // vertex(y); the face is walked clockwise so the rotation is reversed.
  std::vector<std::vector<long>> rot;
  for (const auto& cycle : faces(m)) {
    if (!coloring.black[m.face_of(cycle.front())]) continue;
    std::vector<long> r;
    for (auto it = cycle.rbegin(); it != cycle.rend(); ++it) r.push_back(m.vertex_of(*it));
    rot.push_back(std::move(r));
  }
  return PlaneGraph(build_map(rot));
}

PlaneGraph premedial(const Universe& u) { return premedial(u, checkerboard(u, true)); }

AngleGraph angle_graph(const PlaneGraph& g) {
  const PlanarMap& m = g.map();
  AngleGraph a;
  a.angles.reserve(m.num_darts());
  a.neighbors.reserve(m.num_darts());
  for (Dart x = 0; x < m.num_darts(); ++x) {
    a.angles.push_back({m.vertex_of(x), m.face_of(alpha(x))});
    // Across edge(x) to the far corner on the other side, and across
    // edge(sigma x) likewise.
    a.neighbors.emplace_back(alpha(x), m.sigma_inv(alpha(m.sigma(x))));
  }
  return a;
}

int angle_components(const PlaneGraph& g) {
  const AngleGraph a = angle_graph(g);
  const int n = static_cast<int>(a.angles.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (int i = 0; i < n; ++i) {
    for (int j : {a.neighbors[i].first, a.neighbors[i].second}) {
      int ri = find(i), rj = find(j);
      if (ri != rj) {
        parent[ri] = rj;
        --comps;
      }
    }
  }
  return comps;
}

bool is_special(const PlaneGraph& g) {
  const PlanarMap& m = g.map();
  for (int v = 0; v < m.num_vertices(); ++v)
    if (m.degree(v) < 3) return false;
  for (int f = 0; f < m.num_faces(); ++f)
    if (m.face_degree(f) < 3) return false;
  for (Dart x = 0; x < m.num_darts(); ++x)
    if (m.degree(m.vertex_of(x)) != 3 && m.face_degree(m.face_of(alpha(x))) != 3) return false;
  return true;
}

namespace {

std::optional<int> wheel_size_of(const PlanarMap& m) {
  const int n = m.num_vertices() - 1;
  if (n < 3 || m.num_edges() != 2 * n || !is_simple(m)) return std::nullopt;
  for (int hub = 0; hub <= n; ++hub) {
    if (m.degree(hub) != n) continue;
    bool rim_cubic = true;
    for (int v = 0; v <= n; ++v)
      if (v != hub && m.degree(v) != 3) rim_cubic = false;
    if (!rim_cubic) continue;
    // Rim edges avoid the hub; they must form one cycle through all n rim
    // vertices.
    std::vector<std::vector<int>> rim(n + 1);
    for (int e = 0; e < m.num_edges(); ++e) {
      const int a = m.vertex_of(2 * e), b = m.vertex_of(2 * e + 1);
      if (a == hub || b == hub) continue;
      rim[a].push_back(b);
      rim[b].push_back(a);
    }
    const int start = hub == 0 ? 1 : 0;
    int prev = -1, cur = start, steps = 0;
    bool ok = true;
    do {
      if (rim[cur].size() != 2) {
        ok = false;
        break;
      }
      const int next = rim[cur][0] != prev ? rim[cur][0] : rim[cur][1];
      prev = cur;
      cur = next;
      ++steps;
    } while (cur != start && steps <= n);
    if (ok && cur == start && steps == n) return n;
  }
  return std::nullopt;
}

}  // namespace

SpecialClass classify_special(const PlaneGraph& g) {
  const PlanarMap& m = g.map();
  int min_vdeg = m.degree(0), max_vdeg = m.degree(0), min_fdeg = m.face_degree(0), max_fdeg = m.face_degree(0);
  for (int v = 0; v < m.num_vertices(); ++v) {
    min_vdeg = std::min(min_vdeg, m.degree(v));
    max_vdeg = std::max(max_vdeg, m.degree(v));
  }
  for (int f = 0; f < m.num_faces(); ++f) {
    min_fdeg = std::min(min_fdeg, m.face_degree(f));
    max_fdeg = std::max(max_fdeg, m.face_degree(f));
  }
  SpecialClass c;
  // Sphere cubic graphs and sphere triangulations have no face (resp.
  // vertex) of degree below 3; this excludes the lone triangle.
  c.cubic = min_vdeg == 3 && max_vdeg == 3 && min_fdeg >= 3;
  c.triangulation = min_fdeg == 3 && max_fdeg == 3 && min_vdeg >= 3;
  c.wheel_size = wheel_size_of(m);
  c.wheel = c.wheel_size.has_value();
  if (c.wheel) c.tag = SpecialTag::Wheel;
  else if (c.cubic) c.tag = SpecialTag::Cubic;
  else if (c.triangulation) c.tag = SpecialTag::Triangulation;
  return c;
}

PlaneGraph wheel(int n) {
  if (n < 3) throw Error(ErrorCode::BadSize, "wheel needs n >= 3, got " + std::to_string(n));
  // Spoke i-1 joins the hub to rim vertex i; rim edge n+i-1 joins i to i+1.
  std::vector<std::vector<long>> rot(n + 1);
  for (int i = 1; i <= n; ++i) rot[0].push_back(i - 1);
  for (int i = 1; i <= n; ++i) {
    const long spoke = i - 1;
    const long ahead = n + i - 1;
    const long behind = n + (i + n - 2) % n;
    rot[i] = {ahead, spoke, behind};
  }
  return PlaneGraph(build_map(rot));
}

}  // namespace luneknot

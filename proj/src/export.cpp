#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>

#include "luneknot/io.hpp"

namespace luneknot {

std::vector<std::uint8_t> export_planar_code(const PlanarMap& map) {
  if (!is_simple(map)) throw Error(ErrorCode::NotSimple, "planar code cannot express loops or parallel edges");
  if (map.num_vertices() > 255) throw Error(ErrorCode::BadSize, "planar code with byte entries holds at most 255 vertices");
  std::vector<std::uint8_t> out;
  out.push_back(static_cast<std::uint8_t>(map.num_vertices()));
  for (int v = 0; v < map.num_vertices(); ++v) {
    for (Dart d : map.darts_at(v)) out.push_back(static_cast<std::uint8_t>(map.vertex_of(alpha(d)) + 1));
    out.push_back(0);
  }
  return out;
}

std::vector<std::uint8_t> planar_code_file(const PlanarMap& map) {
  const std::string header = ">>planar_code<<";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  const auto body = export_planar_code(map);
  out.insert(out.end(), body.begin(), body.end());
  return out;
}

namespace {

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string export_dot(const PlanarMap& map) {
  const Embedding emb = best_layout(map);
  std::ostringstream os;
  os << "graph G {\n  node [shape=circle];\n";
  for (int v = 0; v < map.num_vertices(); ++v)
    os << "  " << v << " [pos=\"" << fmt(emb.xy[v][0] * 4) << ',' << fmt(emb.xy[v][1] * 4) << "!\"];\n";
  for (int e = 0; e < map.num_edges(); ++e)
    os << "  " << map.vertex_of(2 * e) << " -- " << map.vertex_of(2 * e + 1) << " [label=\"" << e << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string export_svg(const PlanarMap& map) {
  const bool straight = is_three_connected(map);
  const Embedding emb = best_layout(map);
  const double size = 400, margin = 30, scale = (size - 2 * margin) / 2;
  auto px = [&](int v) { return std::array<double, 2>{size / 2 + scale * emb.xy[v][0], size / 2 - scale * emb.xy[v][1]}; };

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size << "\" viewBox=\"0 0 "
     << size << ' ' << size << "\">\n";
  os << "<g fill=\"none\" stroke=\"black\" stroke-width=\"1.5\">\n";
  std::map<std::pair<int, int>, int> seen;
  for (int e = 0; e < map.num_edges(); ++e) {
    const int a = map.vertex_of(2 * e), b = map.vertex_of(2 * e + 1);
    const auto p = px(a), q = px(b);
    const int k = seen[{std::min(a, b), std::max(a, b)}]++;
    if (a == b) {
      const double r = 12 + 6 * k;
      os << "<circle cx=\"" << fmt(p[0] + r * (p[0] - size / 2) / scale) << "\" cy=\""
         << fmt(p[1] + r * (p[1] - size / 2) / scale) << "\" r=\"" << fmt(r) << "\"/>\n";
    } else if (straight) {
      os << "<line x1=\"" << fmt(p[0]) << "\" y1=\"" << fmt(p[1]) << "\" x2=\"" << fmt(q[0]) << "\" y2=\"" << fmt(q[1])
         << "\"/>\n";
    } else {
      // Bend toward the centre; parallel edges fan out alternately.
      const double mx = (p[0] + q[0]) / 2, my = (p[1] + q[1]) / 2;
      const double dx = q[0] - p[0], dy = q[1] - p[1];
      const double len = std::hypot(dx, dy);
      const double sign = k % 2 == 0 ? 1.0 : -1.0;
      const double bend = 0.25 * len * (1 + k / 2) * sign;
      const double cx = mx - dy / len * bend, cy = my + dx / len * bend;
      os << "<path d=\"M " << fmt(p[0]) << ' ' << fmt(p[1]) << " Q " << fmt(cx) << ' ' << fmt(cy) << ' ' << fmt(q[0])
         << ' ' << fmt(q[1]) << "\"/>\n";
    }
  }
  os << "</g>\n<g fill=\"white\" stroke=\"black\">\n";
  for (int v = 0; v < map.num_vertices(); ++v) {
    const auto p = px(v);
    os << "<circle cx=\"" << fmt(p[0]) << "\" cy=\"" << fmt(p[1]) << "\" r=\"5\"/>\n";
  }
  os << "</g>\n</svg>\n";
  return os.str();
}

}  // namespace luneknot

#include "luneknot/knot_graph.hpp"

#include <sstream>

namespace luneknot {

int FaceCensus::total() const {
  int t = 0;
  for (auto [k, n] : counts) t += n;
  return t;
}

int FaceCensus::degree_sum() const {
  int t = 0;
  for (auto [k, n] : counts) t += k * n;
  return t;
}

int FaceCensus::lune_free_defect() const {
  int rhs = 8;
  for (auto [k, n] : counts)
    if (k >= 5) rhs += (k - 4) * n;
  return f(3) - rhs;
}

int FaceCensus::general_defect() const { return 3 * f(1) + 2 * f(2) + lune_free_defect(); }

std::string FaceCensus::to_string() const {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (auto [k, n] : counts) {
    if (!first) os << ", ";
    first = false;
    os << k << ':' << n;
  }
  os << '}';
  return os.str();
}

FaceCensus face_census(const PlanarMap& map) {
  FaceCensus c;
  for (int f = 0; f < map.num_faces(); ++f) ++c.counts[map.face_degree(f)];
  return c;
}

namespace {

int count_strand_orbits(const PlanarMap& m) {
  std::vector<char> seen(m.num_darts(), 0);
  int orbits = 0;
  for (Dart s = 0; s < m.num_darts(); ++s) {
    if (seen[s]) continue;
    ++orbits;
    for (Dart d = s; !seen[d]; d = alpha(m.sigma(m.sigma(d)))) seen[d] = 1;
  }
  return orbits;
}

}  // namespace

Universe::Universe(PlanarMap map) : map_(std::move(map)) { mu_ = count_strand_orbits(map_) / 2; }

Universe as_universe(PlanarMap map) {
  for (int v = 0; v < map.num_vertices(); ++v)
    if (map.degree(v) != 4)
      throw Error(ErrorCode::NotFourRegular,
                  "vertex " + std::to_string(v) + " has degree " + std::to_string(map.degree(v)));
  require_sphere(map);
  return Universe(std::move(map));
}

FaceCensus face_census(const Universe& u) { return face_census(u.map()); }

int strand_count(const Universe& u) { return u.mu(); }

std::vector<std::vector<Dart>> strand_orbits(const Universe& u) {
  const PlanarMap& m = u.map();
  std::vector<char> seen(m.num_darts(), 0);
  std::vector<std::vector<Dart>> out;
  for (Dart s = 0; s < m.num_darts(); ++s) {
    if (seen[s]) continue;
    out.emplace_back();
    for (Dart d = s; !seen[d]; d = alpha(m.sigma(m.sigma(d)))) {
      seen[d] = 1;
      out.back().push_back(d);
    }
  }
  return out;
}

bool is_knot_graph(const Universe& u) { return u.mu() == 1; }

int lune_count(const Universe& u) { return face_census(u).f(2); }

bool is_lune_free(const Universe& u) {
  if (!is_simple(u.map())) return false;
  const FaceCensus c = face_census(u);
  if (c.f(1) != 0 || c.f(2) != 0)
    throw Error(ErrorCode::ConstructionFailed, "simple universe with a face of degree <= 2");
  return true;
}

namespace {

void require_lune_free(const Universe& u, const char* what) {
  if (!is_lune_free(u)) throw Error(ErrorCode::NotLuneFree, std::string(what) + " requires a lune-free universe");
}

}  // namespace

bool is_admissible(const Universe& u) {
  require_lune_free(u, "is_admissible");
  const PlanarMap& m = u.map();
  for (int e = 0; e < m.num_edges(); ++e)
    if (m.face_degree(m.face_of(2 * e)) >= 4 && m.face_degree(m.face_of(2 * e + 1)) >= 4) return true;
  return false;
}

bool is_tight(const Universe& u) {
  require_lune_free(u, "is_tight");
  const PlanarMap& m = u.map();
  for (int e = 0; e < m.num_edges(); ++e)
    if (m.face_degree(m.face_of(2 * e)) != 3 && m.face_degree(m.face_of(2 * e + 1)) != 3) return false;
  return true;
}

}  // namespace luneknot

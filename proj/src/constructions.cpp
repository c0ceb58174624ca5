#include "luneknot/constructions.hpp"

#include <cstdlib>
#include <map>
#include <mutex>

#include "luneknot/io.hpp"

#ifndef LUNEKNOT_DEFAULT_DATA_DIR
#define LUNEKNOT_DEFAULT_DATA_DIR "data"
#endif

namespace luneknot {

std::filesystem::path data_dir() {
  if (const char* env = std::getenv("LUNEKNOT_DATA_DIR"); env && *env) return env;
  return LUNEKNOT_DEFAULT_DATA_DIR;
}

namespace {

void bad_data(const std::string& file, const std::string& what) {
  throw Error(ErrorCode::DataFile, file + ": " + what);
}

/// Parsed table files, read once per path.
PlanarMap load_table(const std::string& name) {
  static std::mutex mutex;
  static std::map<std::filesystem::path, PlanarMap> cache;
  const auto path = data_dir() / name;
  std::lock_guard lock(mutex);
  if (auto it = cache.find(path); it != cache.end()) return it->second;
  PlanarMap m = read_uni_file(path);
  cache.emplace(path, m);
  return m;
}

Universe load_universe(const std::string& name, int v, int mu) {
  Universe u = as_universe(load_table(name));
  if (u.v() != v) bad_data(name, "expected " + std::to_string(v) + " crossings, found " + std::to_string(u.v()));
  if (!is_lune_free(u)) bad_data(name, "not lune-free");
  if (u.mu() != mu) bad_data(name, "expected mu=" + std::to_string(mu) + ", found " + std::to_string(u.mu()));
  return u;
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ConstructionFailed, what);
}

Universe canonical_universe(const Universe& u) { return as_universe(canonical_form(u.map())); }

}  // namespace

Universe venn() {
  Universe u = load_universe("venn.uni", 6, 3);
  if (face_census(u).counts != std::map<int, int>{{3, 8}}) bad_data("venn.uni", "census must be {3:8}");
  return u;
}

Universe g8() {
  Universe u = load_universe("g8.uni", 8, 1);
  if (face_census(u).counts != std::map<int, int>{{3, 8}, {4, 2}}) bad_data("g8.uni", "census must be {3:8, 4:2}");
  return u;
}

Universe table_knot_graph(int v, int index) {
  if (v == 8 && index == 0) return g8();
  if (v >= 9 && v <= 11 && index == 0) {
    Universe u = load_universe("knot" + std::to_string(v) + ".uni", v, 1);
    // Only the 11-crossing graph has two neighbouring faces of degree >= 4.
    if (is_admissible(u) != (v == 11)) bad_data("knot" + std::to_string(v) + ".uni", "admissibility");
    return u;
  }
  if (v == 12 && index >= 0 && index <= 2) {
    const std::string name = std::string("knot12") + static_cast<char>('a' + index) + ".uni";
    Universe u = load_universe(name, 12, 1);
    const auto& counts = face_census(u).counts;
    const bool only_3_and_4 = counts.rbegin()->first <= 4;
    if (only_3_and_4 != (index < 2)) bad_data(name, "face degrees");
    if (!is_admissible(u)) bad_data(name, "must be admissible");
    return u;
  }
  throw Error(ErrorCode::BadParams,
              "no table graph for v=" + std::to_string(v) + " index " + std::to_string(index));
}

Universe tight_link_graph_12() {
  Universe u = load_universe("link12.uni", 12, 3);
  if (!is_tight(u)) bad_data("link12.uni", "must be tight");
  return u;
}

PlaneGraph ladder_base(int v) {
  if (v != 9 && v != 15 && v != 18 && v != 24)
    throw Error(ErrorCode::BadSize, "ladder_base bases exist for v in {9, 15, 18, 24}, got " + std::to_string(v));
  const std::string name = "special" + std::to_string(v) + ".uni";
  PlaneGraph g(load_table(name));
  if (g.e() != v) bad_data(name, "expected " + std::to_string(v) + " edges");
  if (!is_special(g)) bad_data(name, "not special");
  const Universe d = medial(g);
  if (!is_lune_free(d) || !is_tight(d) || d.mu() != 1) bad_data(name, "medial is not a tight knot graph");
  return g;
}

std::optional<Dart> first_admissible_edge(const PlanarMap& m) {
  for (Dart d = 0; d < m.num_darts(); ++d)
    if (m.face_degree(m.face_of(d)) >= 4 && m.face_degree(m.face_of(alpha(d))) >= 4) return d;
  return std::nullopt;
}

Universe lune_free_knot_graph(int v) {
  if (v < 8) throw Error(ErrorCode::TooSmall, "no lune-free knot graph has fewer than 8 crossings");
  if (v <= 12) return table_knot_graph(v, 0);
  Universe u = table_knot_graph(v % 2 == 1 ? 11 : 12, 0);
  while (u.v() < v) {
    Universe c = canonical_universe(u);
    const auto site = first_admissible_edge(c.map());
    expect(site.has_value(), "lune_free_knot_graph: chain lost admissibility");
    u = double_move(c, RewriteSite::edge(*site));
  }
  expect(u.v() == v && is_lune_free(u) && u.mu() == 1, "lune_free_knot_graph: postcondition");
  return u;
}

Universe tight_knot_graph(int v) {
  if (v < 8) throw Error(ErrorCode::Unrealizable, "v=" + std::to_string(v) + ": tight lune-free knot graphs need v >= 8");
  const int r = v % 6;
  if (r == 1 || r == 5)
    throw Error(ErrorCode::Unrealizable,
                "v=" + std::to_string(v) + ": no tight lune-free graph has v = +-1 mod 6 crossings");
  if (v == 12) throw Error(ErrorCode::Unrealizable, "v=12: no tight lune-free knot graph has 12 crossings");
  Universe out = [&] {
    if (r == 2 || r == 4) return medial(wheel(v / 2));
    static const std::map<int, int> base_for = {{9, 9}, {3, 15}, {6, 18}, {0, 24}};
    PlaneGraph g = ladder_base(base_for.at(v % 12));
    while (g.e() < v) {
      PlaneGraph c(canonical_form(g.map()));
      Dart site = 0;
      while (c.map().degree(c.map().vertex_of(site)) != 3) ++site;
      g = ladder(c, RewriteSite::vertex(site));
    }
    return medial(g);
  }();
  expect(out.v() == v && is_lune_free(out) && is_tight(out) && out.mu() == 1, "tight_knot_graph: postcondition");
  return out;
}

namespace {

/// Least corner lying in a 3-face whose two side faces are distinct from it
/// and, when avoid_lunes, not lunes themselves.
std::optional<Dart> first_triangle_corner(const PlanarMap& m, bool avoid_lunes) {
  for (Dart a = 0; a < m.num_darts(); ++a) {
    const int T = m.face_of(alpha(a));
    if (m.face_degree(T) != 3) continue;
    const int Fa = m.face_of(a), Fb = m.face_of(alpha(m.sigma(a)));
    if (Fa == T || Fb == T) continue;
    if (avoid_lunes && (m.face_degree(Fa) == 2 || m.face_degree(Fb) == 2)) continue;
    return a;
  }
  return std::nullopt;
}

}  // namespace

Universe k_lune_graph(int k, int v) {
  const bool ok = k >= 0 && (k % 2 == 0 ? v >= k + 8 : v >= k + 9);
  if (!ok)
    throw Error(ErrorCode::BadParams, "k_lune_graph(" + std::to_string(k) + ", " + std::to_string(v) +
                                          ") needs v >= k+8 (k even) or v >= k+9 (k odd)");
  Universe out = [&] {
    if (k == 0) return lune_free_knot_graph(v);
    if (k == 1) {
      Universe d = canonical_universe(lune_free_knot_graph(v - 2));
      const PlanarMap& m = d.map();
      for (Dart e = 0; e < m.num_darts(); ++e) {
        if (m.face_degree(m.face_of(e)) < 4) continue;
        return finger_move(d, RewriteSite::face_edge_pair(e, m.phi(m.phi(e))));
      }
      throw Error(ErrorCode::ConstructionFailed, "k_lune_graph: no face of degree >= 4");
    }
    const int j = k % 2 == 0 ? k : k - 1;
    Universe d = canonical_universe(k % 2 == 0 ? lune_free_knot_graph(v - k) : k_lune_graph(1, v - k + 1));
    const auto corner = first_triangle_corner(d.map(), true);
    expect(corner.has_value(), "k_lune_graph: no usable 3-face");
    return twist_corner(d, RewriteSite::corner(*corner), j);
  }();
  expect(out.v() == v && out.mu() == 1 && lune_count(out) == k, "k_lune_graph: postcondition");
  return out;
}

}  // namespace luneknot

#include <doctest.h>

#include "helpers.hpp"

using namespace luneknot;
using namespace testing;

namespace {

/// Straight-ahead circuits traced directly on the medial: from edge (a, b)
/// at crossing a continue through the opposite edge of a.
int traced_circuits(const Universe& u) {
  const PlanarMap& m = u.map();
  std::vector<bool> used(m.num_edges(), false);
  int circuits = 0;
  for (int e = 0; e < m.num_edges(); ++e) {
    if (used[e]) continue;
    ++circuits;
    Dart d = 2 * e;  // leaving vertex_of(d) along edge e
    while (!used[edge_of(d)]) {
      used[edge_of(d)] = true;
      const Dart arrive = alpha(d);
      d = m.sigma(m.sigma(arrive));
    }
  }
  return circuits;
}

}  // namespace

TEST_CASE("medial of small graphs") {
  CHECK(isomorphic(medial(wheel(3)).map(), venn().map()));
  for (int n = 3; n <= 9; ++n) CHECK(medial(wheel(n)).v() == 2 * n);
  CHECK_THROWS_AS(medial(PlaneGraph(build_map({{0}, {0}}))), Error);
  CHECK_THROWS_AS(medial(PlaneGraph(loop_map())), Error);
  CHECK(medial(PlaneGraph(build_map({{0, 1}, {0, 1}}))).v() == 2);
}

TEST_CASE("medial of a graph equals medial of its dual") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    const PlaneGraph g = random_plane_graph(2 + static_cast<int>(rng() % 30), rng);
    CHECK(isomorphic(medial(g).map(), medial(dual(g)).map()));
  }
}

TEST_CASE("checkerboard coloring") {
  const FaceColoring c = checkerboard(venn());
  CHECK(c.black_count() == 4);
  const FaceColoring w = checkerboard(venn(), false);
  for (std::size_t f = 0; f < c.black.size(); ++f) CHECK(c.black[f] != w.black[f]);

  // Each crossing has two black corners, so black face degrees sum to 16.
  // Eight triangles and two squares only allow one square per color.
  const Universe g = g8();
  const FaceColoring gc = checkerboard(g);
  std::vector<bool> squares;
  for (int f = 0; f < g.f(); ++f)
    if (g.map().face_degree(f) == 4) squares.push_back(gc.black[f]);
  REQUIRE(squares.size() == 2);
  CHECK(squares[0] != squares[1]);
}

TEST_CASE("premedial inverts medial") {
  CHECK(isomorphic(premedial(venn()).map(), wheel(3).map()));
  const PlaneGraph w5 = wheel(5);
  const Universe m = medial(w5);
  for (bool seed : {true, false}) {
    const PlaneGraph back = premedial(m, checkerboard(m, seed));
    CHECK((isomorphic(back.map(), w5.map()) || isomorphic(back.map(), dual(w5).map())));
  }
  EnumFilter f;
  f.require_simple = false;
  f.v_min = 1;
  f.v_max = 7;
  for (const auto& e : enumerate_universes(f)) {
    const PlaneGraph g = premedial(e.universe);
    if (g.e() < 2) continue;  // the one-crossing curve
    CHECK(isomorphic(medial(g).map(), e.universe.map()));
  }
}

TEST_CASE("angle components match strand counts") {
  CHECK(angle_components(wheel(3)) == 3);
  CHECK(angle_components(wheel(4)) == 1);
  CHECK(angle_components(wheel(6)) == 3);
  std::mt19937_64 rng(17);
  for (int i = 0; i < 200; ++i) {
    const PlaneGraph g = random_plane_graph(2 + static_cast<int>(rng() % 30), rng);
    const Universe m = medial(g);
    CHECK(angle_components(g) == m.mu());
    CHECK(traced_circuits(m) == m.mu());
  }
  const AngleGraph a = angle_graph(wheel(5));
  CHECK(a.angles.size() == 20);
}

TEST_CASE("special graphs") {
  CHECK(is_special(cube()));
  CHECK(is_special(wheel(6)));
  CHECK_FALSE(is_special(PlaneGraph(path3())));
  CHECK(classify_special(octahedron()).tag == SpecialTag::Triangulation);
  CHECK(classify_special(cube()).tag == SpecialTag::Cubic);
  const SpecialClass w = classify_special(wheel(5));
  CHECK(w.tag == SpecialTag::Wheel);
  CHECK(w.wheel_size == 5);

  // 5-wheel with the rim edge between rim vertices 5 and 1 subdivided by
  // vertex 6. Spokes are edges 0..4, rim edges 5..10.
  const PlanarMap w5 = wheel(5).map();
  const PlaneGraph sub(build_map({{4, 3, 2, 1, 0},
                                  {0, 5, 10},
                                  {1, 6, 5},
                                  {2, 7, 6},
                                  {3, 8, 7},
                                  {4, 9, 8},
                                  {10, 9}}));
  CHECK(sub.e() == w5.num_edges() + 1);
  CHECK(classify_special(sub).tag == SpecialTag::Other);
  CHECK_FALSE(is_special(sub));
}

TEST_CASE("wheels") {
  CHECK(isomorphic(wheel(3).map(), dual(wheel(3).map())));
  CHECK(wheel(4).v() == 5);
  CHECK(wheel(4).e() == 8);
  CHECK_THROWS_AS(wheel(2), Error);
}

TEST_CASE("special iff medial is tight and lune-free, on small simple graphs") {
  for (const auto& g : enumerate_plane_graphs(9, 1, 1, true)) {
    if (g.e() < 2) continue;
    const Universe m = medial(g);
    const bool special = is_special(g);
    CHECK(special == (is_lune_free(m) && is_tight(m)));
    CHECK(special == (classify_special(g).tag != SpecialTag::Other));
  }
}

#include <doctest.h>

#include "helpers.hpp"

using namespace luneknot;
using namespace testing;

TEST_CASE("loop map has one vertex, two faces of degree one") {
  const PlanarMap m = loop_map();
  CHECK(m.num_vertices() == 1);
  CHECK(m.num_edges() == 1);
  CHECK(m.num_faces() == 2);
  CHECK(m.genus() == 0);
  CHECK(m.face_degree(0) == 1);
  CHECK(m.face_degree(1) == 1);
  CHECK_FALSE(is_simple(m));
}

TEST_CASE("octahedron counts and faces") {
  const PlanarMap m = venn().map();
  CHECK(m.num_vertices() == 6);
  CHECK(m.num_edges() == 12);
  CHECK(m.num_faces() == 8);
  CHECK(m.num_faces() == 2 + m.num_vertices());
  for (int f = 0; f < m.num_faces(); ++f) CHECK(m.face_degree(f) == 3);
  CHECK(genus(m) == 0);
  CHECK(is_simple(m));
}

TEST_CASE("square antiprism faces") {
  const PlanarMap m = g8().map();
  CHECK(m.num_faces() == 10);
  CHECK(face_census(m).counts == std::map<int, int>{{3, 8}, {4, 2}});
}

TEST_CASE("disconnected input is flagged") {
  const PlanarMap m = build_map({{0, 2}, {0, 1}, {1, 2}, {3, 5}, {3, 4}, {4, 5}});
  CHECK(m.num_components() == 2);
  CHECK_THROWS_AS(require_sphere(m), Error);
  CHECK_THROWS_AS(canonical_code(m), Error);
}

TEST_CASE("genus of trees, planar and nonplanar maps") {
  CHECK(genus(path3()) == 0);
  CHECK(genus(k5()) >= 1);
  try {
    require_sphere(k5());
    FAIL("K5 accepted as a sphere map");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::PositiveGenus);
  }
}

TEST_CASE("face orbits partition the darts") {
  for (const PlanarMap& m : {venn().map(), g8().map(), trefoil().map(), path3(), loop_map()}) {
    std::vector<int> seen(m.num_darts(), 0);
    int total = 0;
    for (const auto& face : faces(m)) {
      total += static_cast<int>(face.size());
      for (Dart d : face) ++seen[d];
    }
    CHECK(total == m.num_darts());
    CHECK(std::all_of(seen.begin(), seen.end(), [](int s) { return s == 1; }));
  }
}

TEST_CASE("duality swaps vertices and faces and is an involution") {
  const PlanarMap c = dual(venn().map());
  CHECK(c.num_vertices() == 8);
  CHECK(c.num_edges() == 12);
  CHECK(c.num_faces() == 6);
  CHECK(isomorphic(dual(wheel(3).map()), wheel(3).map()));

  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const PlaneGraph g = random_plane_graph(1 + static_cast<int>(rng() % 20), rng);
    const PlanarMap d = dual(g.map());
    CHECK(d.num_vertices() == g.f());
    CHECK(d.num_faces() == g.v());
    CHECK(isomorphic(dual(d), g.map()));
  }
}

TEST_CASE("simplicity") {
  CHECK_FALSE(is_simple(trefoil().map()));
  CHECK(is_simple(venn().map()));
  CHECK(is_simple(path3()));
}

TEST_CASE("canonical code is invariant under relabelling") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    const PlaneGraph g = random_plane_graph(2 + static_cast<int>(rng() % 25), rng);
    const PlanarMap h = shuffle(g.map(), rng);
    CHECK(canonical_code(h) == canonical_code(g.map()));
    CHECK(canonical_code(h, false) == canonical_code(g.map(), false));
    CHECK(canonical_form(h) == canonical_form(g.map()));
  }
}

TEST_CASE("mirror images share the reflection-inclusive code") {
  std::mt19937_64 rng(5);
  int chiral = 0;
  for (int i = 0; i < 60; ++i) {
    const PlanarMap m = random_plane_graph(8 + static_cast<int>(rng() % 10), rng).map();
    const PlanarMap r = mirror(m);
    CHECK(canonical_code(m) == canonical_code(r));
    chiral += canonical_code(m, false) != canonical_code(r, false);
  }
  CHECK(chiral > 0);
}

TEST_CASE("distinct named graphs are not isomorphic") {
  CHECK(isomorphic(venn().map(), venn().map()));
  CHECK_FALSE(isomorphic(venn().map(), g8().map()));
  CHECK(canonical_code(table_knot_graph(12, 0).map()) != canonical_code(table_knot_graph(12, 1).map()));
  CHECK(isomorphic(medial(wheel(4)).map(), g8().map()));
}

TEST_CASE("rooted map counts match the closed formula") {
  for (int n = 1; n <= 6; ++n) {
    MapSearch s;
    s.darts = 2 * n;
    s.canonical = false;
    const auto maps = search_maps(s, [](const PlanarMap&) { return true; });
    CHECK_MESSAGE(static_cast<long>(maps.size()) == rooted_map_count(n), "edges " << n);
  }
}

TEST_CASE("rooted quartic maps are equinumerous with rooted maps") {
  // medial is a bijection between rooted maps with n edges and rooted
  // 4-regular maps with n vertices.
  for (int n = 1; n <= 5; ++n) {
    MapSearch s;
    s.darts = 4 * n;
    s.min_degree = s.max_degree = 4;
    s.canonical = false;
    CHECK(static_cast<long>(search_maps(s, [](const PlanarMap&) { return true; }).size()) == rooted_map_count(n));
  }
}

TEST_CASE("class counts satisfy Burnside against rooted counts") {
  for (int n = 1; n <= 6; ++n) {
    MapSearch sensed;
    sensed.darts = 2 * n;
    sensed.include_mirror = false;
    const auto classes = search_maps(sensed, [](const PlanarMap&) { return true; });
    long rooted = 0;
    for (const auto& m : classes) {
      const int aut = rotation_automorphisms(m);
      REQUIRE(m.num_darts() % aut == 0);
      rooted += m.num_darts() / aut;
    }
    CHECK(rooted == rooted_map_count(n));

    MapSearch unsensed;
    unsensed.darts = 2 * n;
    long expanded = 0;
    for (const auto& m : search_maps(unsensed, [](const PlanarMap&) { return true; }))
      expanded += canonical_code(m, false) == canonical_code(mirror(m), false) ? 1 : 2;
    CHECK(expanded == static_cast<long>(classes.size()));
  }
}

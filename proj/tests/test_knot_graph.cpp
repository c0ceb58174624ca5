#include <doctest.h>

#include "helpers.hpp"

using namespace luneknot;
using namespace testing;

TEST_CASE("as_universe validation") {
  CHECK(venn().v() == 6);
  CHECK(trefoil().v() == 3);
  try {
    as_universe(cube().map());
    FAIL("cube accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotFourRegular);
  }
  CHECK_THROWS_AS(as_universe(build_map({{0, 1, 2, 3}, {0, 1, 2, 3}, {4, 5, 6, 7}, {4, 5, 6, 7}})), Error);
}

TEST_CASE("face census of named universes") {
  CHECK(face_census(venn()).counts == std::map<int, int>{{3, 8}});
  CHECK(face_census(g8()).counts == std::map<int, int>{{3, 8}, {4, 2}});
  const FaceCensus t = face_census(trefoil());
  CHECK(t.counts == std::map<int, int>{{2, 3}, {3, 2}});
  CHECK(2 * t.f(2) + t.f(3) == 8);
  CHECK(t.general_defect() == 0);
}

TEST_CASE("strand counts") {
  CHECK(venn().mu() == 3);
  CHECK(strand_count(venn()) == 3);
  CHECK(g8().mu() == 1);
  CHECK(trefoil().mu() == 1);
  CHECK(is_knot_graph(g8()));
  CHECK_FALSE(is_knot_graph(venn()));
  CHECK_FALSE(is_knot_graph(tight_link_graph_12()));
  CHECK(tight_link_graph_12().mu() == 3);
}

TEST_CASE("lunes and simplicity") {
  CHECK(lune_count(venn()) == 0);
  CHECK(lune_count(trefoil()) == 3);
  CHECK(lune_count(k_lune_graph(4, 14)) == 4);
  CHECK(is_lune_free(venn()));
  CHECK_FALSE(is_lune_free(trefoil()));
}

TEST_CASE("admissibility of the table graphs") {
  for (int v : {8, 9, 10}) CHECK_FALSE(is_admissible(table_knot_graph(v)));
  CHECK(is_admissible(table_knot_graph(11)));
  for (int i = 0; i < 3; ++i) CHECK(is_admissible(table_knot_graph(12, i)));
  CHECK_THROWS_AS(is_admissible(trefoil()), Error);
  CHECK_THROWS_AS(is_tight(trefoil()), Error);
}

TEST_CASE("tightness") {
  CHECK(is_tight(venn()));
  CHECK_FALSE(is_tight(table_knot_graph(11)));
  CHECK(is_tight(medial(wheel(5))));
}

TEST_CASE("universe invariants over the general enumeration") {
  EnumFilter f;
  f.require_simple = false;
  f.v_min = 1;
  f.v_max = 6;
  const auto list = enumerate_universes(f);
  CHECK(list.size() > 100);
  for (const auto& e : list) {
    const Universe& u = e.universe;
    CHECK(u.e() == 2 * u.v());
    CHECK(u.f() == u.v() + 2);
    const FaceCensus c = face_census(u);
    CHECK(c.total() == u.f());
    CHECK(c.degree_sum() == 2 * u.e());
    CHECK(c.general_defect() == 0);
    if (is_lune_free(u)) {
      CHECK(c.lune_free_defect() == 0);
      CHECK(is_tight(u) != is_admissible(u));
    }
    if (is_simple(u.map())) CHECK(c.f(2) == 0);

    // Strand orbits come in reversed pairs of equal length covering all darts.
    const auto orbits = strand_orbits(u);
    CHECK(orbits.size() == 2 * static_cast<std::size_t>(u.mu()));
    std::size_t total = 0;
    std::map<std::size_t, int> by_length;
    for (const auto& o : orbits) {
      total += o.size();
      ++by_length[o.size()];
    }
    CHECK(total == static_cast<std::size_t>(4 * u.v()));
    for (auto [len, n] : by_length) CHECK(n % 2 == 0);
  }
}

TEST_CASE("no lune-free knot universe below eight crossings") {
  EnumFilter f;
  f.mu = 1;
  f.v_min = 1;
  f.v_max = 7;
  CHECK(enumerate_universes(f).empty());
}

#include <doctest.h>

#include "helpers.hpp"

using namespace luneknot;
using namespace testing;

namespace {

std::vector<int> sorted_face_degrees(const PlanarMap& m) {
  std::vector<int> d;
  for (int f = 0; f < m.num_faces(); ++f) d.push_back(m.face_degree(f));
  std::sort(d.begin(), d.end());
  return d;
}

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::ConstructionFailed;
}

}  // namespace

TEST_CASE("named graphs") {
  CHECK(face_census(venn()).counts == std::map<int, int>{{3, 8}});
  CHECK(venn().mu() == 3);
  CHECK(is_tight(venn()));
  CHECK(g8().mu() == 1);
  CHECK_FALSE(is_admissible(g8()));
  const Universe l = tight_link_graph_12();
  CHECK(l.v() == 12);
  CHECK(l.mu() == 3);
  CHECK(is_tight(l));
}

TEST_CASE("polygon families") {
  CHECK(isomorphic(polygon_family(4, 1).map(), g8().map()));
  for (int n : {1, 3, 5}) CHECK(polygon_family(4, n).mu() == 1);
  for (int n = 2; n <= 10; ++n) CHECK(polygon_family(3, n).mu() == (n % 3 == 2 ? 3 : 1));
  CHECK(code_of([] { polygon_family(2, 3); }) == ErrorCode::BadParams);
}

TEST_CASE("crossing device reproduces the table graphs") {
  for (int v : {8, 10}) {
    const Universe u = table_knot_graph(v);
    const Universe next = table_knot_graph(v + 1);
    const PlanarMap& m = u.map();
    int sites = 0;
    for (Dart d = 0; d < m.num_darts(); ++d)
      for (Dart g = 0; g < m.num_darts(); ++g) {
        if (m.face_of(g) != m.face_of(d) || g == d) continue;
        try {
          const Universe out = crossing_device(u, RewriteSite::face_edge_pair(d, g));
          ++sites;
          CHECK(out.v() == v + 1);
          CHECK(is_lune_free(out));
          CHECK(out.mu() == 1);
          CHECK(isomorphic(out.map(), next.map()));
        } catch (const Error& e) {
          CHECK(e.code() != ErrorCode::ConstructionFailed);
        }
      }
    CHECK(sites > 0);
  }
}

TEST_CASE("double move keeps admissibility along the chain") {
  Universe u = table_knot_graph(11);
  std::vector<int> orders;
  for (int step = 0; step < 4; ++step) {
    const PlanarMap c = canonical_form(u.map());
    const auto site = first_admissible_edge(c);
    REQUIRE(site.has_value());
    const Universe before = as_universe(c);
    u = double_move(before, RewriteSite::edge(*site));
    orders.push_back(u.v());
    CHECK(u.v() == before.v() + 2);
    CHECK(is_lune_free(u));
    CHECK(is_admissible(u));
    CHECK(u.mu() == 1);
    CHECK(face_census(u).lune_free_defect() == 0);
  }
  CHECK(orders == std::vector<int>{13, 15, 17, 19});
  CHECK(code_of([] { double_move(venn(), RewriteSite::edge(0)); }) == ErrorCode::InadmissibleSite);
}

TEST_CASE("double move face bookkeeping at every admissible site") {
  for (int i = 0; i < 3; ++i) {
    const Universe u = table_knot_graph(12, i);
    const PlanarMap& m = u.map();
    for (Dart d = 0; d < m.num_darts(); ++d) {
      if (m.face_degree(m.face_of(d)) < 4 || m.face_degree(m.face_of(alpha(d))) < 4) continue;
      const Universe out = double_move(u, RewriteSite::edge(d));
      auto before = sorted_face_degrees(m), after = sorted_face_degrees(out.map());
      CHECK(after.size() == before.size() + 2);
      CHECK(face_census(out).lune_free_defect() == 0);
      CHECK(out.mu() == u.mu());
    }
  }
}

TEST_CASE("adding nine crossings") {
  const Universe a = plus_nine(g8(), RewriteSite::edge(0));
  CHECK(a.v() == 17);
  CHECK(is_lune_free(a));
  CHECK(a.mu() == 1);
  const Universe b = plus_nine(venn(), RewriteSite::edge(0));
  CHECK(b.v() == 15);
  CHECK(b.mu() == 3);
  CHECK(face_census(b).lune_free_defect() == 0);
}

TEST_CASE("laddering") {
  const PlaneGraph base = ladder_base(9);
  CHECK(base.e() == 9);
  CHECK(medial(base).mu() == 1);
  CHECK(is_tight(medial(base)));
  CHECK(medial(ladder_base(18)).v() == 18);
  for (int e : {9, 15, 18, 24}) {
    const PlaneGraph g = ladder_base(e);
    CHECK(classify_special(g).tag != SpecialTag::Other);
    const PlanarMap& m = g.map();
    for (Dart d = 0; d < m.num_darts(); ++d) {
      if (m.degree(m.vertex_of(d)) != 3) continue;
      const PlaneGraph h = ladder(g, RewriteSite::vertex(d));
      CHECK(h.e() == g.e() + 12);
      CHECK(angle_components(h) == angle_components(g));
    }
  }
  const PlaneGraph h = ladder(ladder_base(9), RewriteSite::vertex(0));
  CHECK(is_special(h));
  CHECK(is_tight(medial(h)));
  CHECK(code_of([] { ladder_base(10); }) == ErrorCode::BadSize);
}

TEST_CASE("lune-free knot graphs of each order") {
  CHECK(isomorphic(lune_free_knot_graph(8).map(), g8().map()));
  CHECK(code_of([] { lune_free_knot_graph(7); }) == ErrorCode::TooSmall);
  const Universe u = lune_free_knot_graph(25);
  CHECK(u.v() == 25);
  CHECK(is_lune_free(u));
  CHECK(u.mu() == 1);
}

TEST_CASE("tight knot graphs") {
  CHECK(isomorphic(tight_knot_graph(8).map(), medial(wheel(4)).map()));
  CHECK(code_of([] { tight_knot_graph(12); }) == ErrorCode::Unrealizable);
  CHECK(code_of([] { tight_knot_graph(13); }) == ErrorCode::Unrealizable);
  const Universe u = tight_knot_graph(21);
  CHECK(is_tight(u));
  CHECK(u.mu() == 1);
  const PlaneGraph laddered = ladder(ladder_base(9), RewriteSite::vertex(0));
  CHECK(medial(laddered).v() == 21);
}

TEST_CASE("knot graphs with k lunes") {
  CHECK(lune_count(k_lune_graph(0, 10)) == 0);
  const Universe one = k_lune_graph(1, 10);
  CHECK(lune_count(one) == 1);
  CHECK(one.mu() == 1);
  for (int k = 0; k <= 6; ++k) {
    const Universe u = k_lune_graph(k, 20);
    CHECK(lune_count(u) == k);
    const FaceCensus c = face_census(u);
    int excess = 0;
    for (auto [d, n] : c.counts)
      if (d >= 5) excess += (d - 4) * n;
    CHECK(c.f(1) == 0);
    CHECK(2 * c.f(2) + c.f(3) == 8 + excess);
    CHECK(c.general_defect() == 0);
  }
  CHECK(code_of([] { k_lune_graph(6, 13); }) == ErrorCode::BadParams);
}

TEST_CASE("braid closures") {
  CHECK(isomorphic(trefoil().map(), trefoil().map()));
  CHECK(face_census(trefoil()).counts == std::map<int, int>{{2, 3}, {3, 2}});
  const Universe s = braid_shadow(1, 0, 0);
  CHECK(s.v() == 9);
  CHECK(is_tight(s));
  CHECK(isomorphic(braid_closure_shadow(braid_shadow_word(1, 0, 0)).map(), s.map()));
  CHECK(braid_shadow(1, 2, 0).v() == 13);
  CHECK(braid_shadow(1, 2, 0).mu() != 1);
  CHECK(braid_shadow(1, 1, 1).mu() != 1);
  CHECK(code_of([] { braid_closure_shadow({3, {1, 1}}); }) == ErrorCode::DisconnectedClosure);
  CHECK(code_of([] { braid_shadow(0, 0, 0); }) == ErrorCode::BadParams);
}

TEST_CASE("closure components follow the strand permutation") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 100; ++i) {
    BraidWord w{2 + static_cast<int>(rng() % 4), {}};
    const int len = 1 + static_cast<int>(rng() % 12);
    for (int j = 0; j < len; ++j) w.letters.push_back(1 + static_cast<int>(rng() % (w.strands - 1)));
    std::vector<int> perm(w.strands);
    std::iota(perm.begin(), perm.end(), 0);
    for (int x : w.letters) std::swap(perm[x - 1], perm[x]);
    int cycles = 0;
    std::vector<bool> seen(w.strands, false);
    for (int s = 0; s < w.strands; ++s) {
      if (seen[s]) continue;
      ++cycles;
      for (int t = s; !seen[t]; t = perm[t]) seen[t] = true;
    }
    int mu = -1;
    try {
      mu = braid_closure_shadow(w).mu();
    } catch (const Error& e) {
      CHECK(e.code() == ErrorCode::DisconnectedClosure);
      continue;
    }
    CHECK(mu == cycles);
  }
}

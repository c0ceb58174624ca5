#include <algorithm>
#include <map>
#include <string>

#include "luneknot/constructions.hpp"
#include "luneknot/map_builder.hpp"

namespace luneknot {

namespace {

void expect(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::ConstructionFailed, what);
}

void require_dart(const PlanarMap& m, Dart d, const char* op) {
  if (d < 0 || d >= m.num_darts())
    throw Error(ErrorCode::BadSite, std::string(op) + ": dart " + std::to_string(d) + " not in map");
}

void require_kind(const RewriteSite& s, RewriteSite::Kind kind, std::size_t darts, const char* op) {
  if (s.kind != kind || s.darts.size() != darts) throw Error(ErrorCode::BadSite, std::string(op) + ": wrong site kind");
}

/// Sorted face degrees expected after a rewrite: each old face shifted by
/// its delta, old faces listed in `removed` dropped, `added` appended.
std::vector<int> expected_degrees(const PlanarMap& before, const std::map<int, int>& delta,
                                  const std::vector<int>& removed, const std::vector<int>& added) {
  std::vector<int> out;
  for (int f = 0; f < before.num_faces(); ++f) {
    if (std::find(removed.begin(), removed.end(), f) != removed.end()) continue;
    const auto it = delta.find(f);
    out.push_back(before.face_degree(f) + (it == delta.end() ? 0 : it->second));
  }
  out.insert(out.end(), added.begin(), added.end());
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> face_degrees(const PlanarMap& m) {
  std::vector<int> out;
  for (int f = 0; f < m.num_faces(); ++f) out.push_back(m.face_degree(f));
  std::sort(out.begin(), out.end());
  return out;
}

/// Steps along the face orbit from e to f, or -1 when f is not on it.
int face_distance(const PlanarMap& m, Dart e, Dart f) {
  int t = 0;
  Dart d = e;
  do {
    if (d == f) return t;
    d = m.phi(d);
    ++t;
  } while (d != e);
  return -1;
}

struct FacePair {
  int face;
  int degree;
  int t;  // phi-distance from e to f
};

FacePair check_face_pair(const PlanarMap& m, const RewriteSite& site, const char* op) {
  require_kind(site, RewriteSite::Kind::FaceEdgePair, 2, op);
  const Dart e = site.darts[0], f = site.darts[1];
  require_dart(m, e, op);
  require_dart(m, f, op);
  const int t = face_distance(m, e, f);
  if (t < 0) throw Error(ErrorCode::BadSite, std::string(op) + ": darts do not share a face");
  const int deg = m.face_degree(m.face_of(e));
  if (t <= 1 || t >= deg - 1) throw Error(ErrorCode::BadSite, std::string(op) + ": edges are adjacent on the face");
  if (m.face_of(alpha(e)) == m.face_of(e) || m.face_of(alpha(f)) == m.face_of(e))
    throw Error(ErrorCode::BadSite, std::string(op) + ": edge borders the face on both sides");
  return {m.face_of(e), deg, t};
}

}  // namespace

Universe crossing_device(const Universe& u, const RewriteSite& site) {
  const PlanarMap& m = u.map();
  const FacePair fp = check_face_pair(m, site, "crossing_device");
  const Dart e = site.darts[0], f = site.darts[1];
  const int P = m.vertex_of(e), P2 = m.vertex_of(alpha(e)), Q = m.vertex_of(f), Q2 = m.vertex_of(alpha(f));
  if (P == P2 || P == Q || P == Q2 || P2 == Q || P2 == Q2 || Q == Q2)
    throw Error(ErrorCode::BadSite, "crossing_device: the two edges must have four distinct ends");

  // The far ends of e and f move to a new crossing X inside the face; two
  // new edges carry the strands on to their old endpoints.
  MapBuilder b(m);
  const auto [a0, a1] = b.new_edge();
  const auto [c0, c1] = b.new_edge();
  b.replace(alpha(e), a0);
  b.replace(alpha(f), c0);
  b.add_vertex({a1, alpha(e), c1, alpha(f)});
  Universe out = as_universe(b.build());

  std::map<int, int> delta;
  ++delta[m.face_of(alpha(e))];
  ++delta[m.face_of(alpha(f))];
  expect(face_degrees(out.map()) == expected_degrees(m, delta, {fp.face}, {fp.t + 1, fp.degree - fp.t + 1}),
         "crossing_device: face bookkeeping");
  expect(out.v() == u.v() + 1, "crossing_device: vertex count");
  if (is_lune_free(u)) {
    if (!is_lune_free(out)) throw Error(ErrorCode::BadSite, "crossing_device: site creates parallel edges");
  }
  return out;
}

Universe double_move(const Universe& u, const RewriteSite& site) {
  require_kind(site, RewriteSite::Kind::Edge, 1, "double_move");
  const PlanarMap& m = u.map();
  const Dart d = site.darts[0];
  require_dart(m, d, "double_move");
  const int C = m.face_of(alpha(d)), D = m.face_of(d);
  if (m.face_degree(C) < 4 || m.face_degree(D) < 4)
    throw Error(ErrorCode::InadmissibleSite, "double_move: flanking faces have degrees " +
                                                 std::to_string(m.face_degree(C)) + " and " +
                                                 std::to_string(m.face_degree(D)) + "; both must be >= 4");
  const int x = m.vertex_of(d), y = m.vertex_of(alpha(d));
  if (x == y) throw Error(ErrorCode::BadSite, "double_move: edge is a loop");
  const Dart r1 = m.sigma(d), r2 = m.sigma(r1), r3 = m.sigma(r2);
  const Dart s1 = m.sigma(alpha(d)), s2 = m.sigma(s1), s3 = m.sigma(s2);
  const int fa = m.face_of(alpha(r1)), fb = m.face_of(alpha(r2));
  const int fe = m.face_of(alpha(s1)), ff = m.face_of(alpha(s2));

  // Four crossings replace the two ends of d: the old x and y keep r2 and s2,
  // p takes r1 and s3 (shrinking C), q takes r3 and s1 (shrinking D).
  MapBuilder b(m);
  const auto [h0, h1] = b.new_edge();
  const auto [t1a0, t1a1] = b.new_edge();
  const auto [t1b0, t1b1] = b.new_edge();
  const auto [t2a0, t2a1] = b.new_edge();
  const auto [t2b0, t2b1] = b.new_edge();
  const int vx = b.vertex_holding(d), vy = b.vertex_holding(alpha(d));
  b.rotation(vx) = {h0, t2a0, r2, t2b0};
  b.rotation(vy) = {s2, t1a1, h1, t1b0};
  b.add_vertex({s3, r1, t2a1, t1a0});
  b.add_vertex({t1b1, t2b1, r3, s1});
  Universe out = as_universe(b.build());

  std::map<int, int> delta;
  --delta[C];
  --delta[D];
  for (int f : {fa, fb, fe, ff}) ++delta[f];
  expect(face_degrees(out.map()) == expected_degrees(m, delta, {}, {3, 3}), "double_move: face bookkeeping");
  expect(out.v() == u.v() + 2, "double_move: vertex count");
  expect(out.mu() == u.mu(), "double_move: strand count changed");
  if (is_lune_free(u)) {
    expect(is_lune_free(out), "double_move: output not lune-free");
    expect(is_admissible(out), "double_move: admissibility lost");
  }
  return out;
}

Universe finger_move(const Universe& u, const RewriteSite& site) {
  const PlanarMap& m = u.map();
  const FacePair fp = check_face_pair(m, site, "finger_move");
  const Dart e = site.darts[0], f = site.darts[1];

  // e is pushed across f: it now crosses f at X1 and again at X2, and the
  // segment of f between them bounds the new lune with e's dip.
  MapBuilder b(m);
  const auto [A0, A1] = b.new_edge();
  const auto [B0, B1] = b.new_edge();
  const auto [C0, C1] = b.new_edge();
  const auto [D0, D1] = b.new_edge();
  const auto [S0, S1] = b.new_edge();
  const auto [T0, T1] = b.new_edge();
  b.replace(e, A0);
  b.replace(alpha(e), B0);
  b.replace(alpha(f), C0);
  b.replace(f, D0);
  b.add_vertex({S0, A1, C1, T0});
  b.add_vertex({D1, B1, S1, T1});
  Universe out = as_universe(b.build());

  std::map<int, int> delta;
  delta[m.face_of(alpha(e))] += 2;
  delta[m.face_of(alpha(f))] += 2;
  expect(face_degrees(out.map()) == expected_degrees(m, delta, {fp.face}, {fp.t + 1, fp.degree - fp.t + 1, 2}),
         "finger_move: face bookkeeping");
  expect(out.mu() == u.mu(), "finger_move: strand count changed");
  expect(lune_count(out) == lune_count(u) + 1, "finger_move: lune count");
  return out;
}

Universe twist_corner(const Universe& u, const RewriteSite& site, int j) {
  require_kind(site, RewriteSite::Kind::Corner, 1, "twist_corner");
  if (j < 2 || j % 2 != 0) throw Error(ErrorCode::BadParams, "twist_corner needs an even number of crossings >= 2");
  const PlanarMap& m = u.map();
  const Dart a = site.darts[0];
  require_dart(m, a, "twist_corner");
  const Dart bb = m.sigma(a);
  const int T = m.face_of(alpha(a)), Fa = m.face_of(a), Fb = m.face_of(alpha(bb));
  if (T == Fa || T == Fb) throw Error(ErrorCode::BadSite, "twist_corner: corner face borders itself");

  // Crossing t_i has rotation [E, N, W, S]: strands enter at W and S and
  // leave at E and N. The corner edges enter t_1; t_j feeds the old ends.
  MapBuilder b(m);
  const auto [ea0, ea1] = b.new_edge();
  const auto [eb0, eb1] = b.new_edge();
  b.replace(alpha(a), ea0);
  b.replace(alpha(bb), eb0);
  Dart west = alpha(bb), south = alpha(a);
  for (int i = 1; i < j; ++i) {
    const auto [p0, p1] = b.new_edge();
    const auto [q0, q1] = b.new_edge();
    b.add_vertex({p0, q0, west, south});
    west = q1;
    south = p1;
  }
  b.add_vertex({ea1, eb1, west, south});
  Universe out = as_universe(b.build());

  std::map<int, int> delta;
  delta[Fa] += j;
  delta[Fb] += j;
  expect(face_degrees(out.map()) == expected_degrees(m, delta, {}, std::vector<int>(j, 2)),
         "twist_corner: face bookkeeping");
  expect(out.mu() == u.mu(), "twist_corner: strand count changed");
  expect(lune_count(out) == lune_count(u) + j, "twist_corner: lune count");
  return out;
}

PlaneGraph ladder(const PlaneGraph& g, const RewriteSite& site) {
  require_kind(site, RewriteSite::Kind::Vertex, 1, "ladder");
  const PlanarMap& m = g.map();
  const Dart d0 = site.darts[0];
  require_dart(m, d0, "ladder");
  if (m.degree(m.vertex_of(d0)) != 3)
    throw Error(ErrorCode::NotDegreeThree, "ladder: vertex has degree " + std::to_string(m.degree(m.vertex_of(d0))));
  if (!is_special(g)) throw Error(ErrorCode::NotSpecial, "ladder needs a special graph");
  const Dart d1 = m.sigma(d0);
  const int F = m.face_of(alpha(d0));
  const int F0 = m.face_of(d0), F1 = m.face_of(alpha(d1));

  // Paths s_1..s_4 along d0 and t_1..t_4 along d1, rungs s_i t_i on the
  // side of the corner (d0, d1).
  MapBuilder b(m);
  constexpr int kRungs = 4;
  auto subdivide = [&](Dart d, std::vector<Dart>& back, std::vector<Dart>& fwd) {
    const auto [end0, end1] = b.new_edge();
    b.replace(alpha(d), end0);
    back.push_back(alpha(d));
    for (int i = 1; i < kRungs; ++i) {
      const auto [p0, p1] = b.new_edge();
      fwd.push_back(p0);
      back.push_back(p1);
    }
    fwd.push_back(end1);
  };
  std::vector<Dart> sb, sf, tb, tf;
  subdivide(d0, sb, sf);
  subdivide(d1, tb, tf);
  for (int i = 0; i < kRungs; ++i) {
    const auto [r0, r1] = b.new_edge();
    b.add_vertex({sf[i], r0, sb[i]});
    b.add_vertex({r1, tf[i], tb[i]});
  }
  PlaneGraph h(b.build());

  std::map<int, int> delta;
  ++delta[F];
  delta[F0] += kRungs;
  delta[F1] += kRungs;
  expect(face_degrees(h.map()) == expected_degrees(m, delta, {}, {3, 4, 4, 4}), "ladder: face bookkeeping");
  expect(h.e() == g.e() + 12, "ladder: edge count");
  expect(is_special(h), "ladder: output not special");
  return h;
}

Universe plus_nine(const Universe& u, const RewriteSite& site) {
  require_kind(site, RewriteSite::Kind::Edge, 1, "plus_nine");
  const PlanarMap& m1 = u.map();
  const Dart e = site.darts[0];
  require_dart(m1, e, "plus_nine");
  const Universe piece = table_knot_graph(9);
  const PlanarMap& m2 = piece.map();
  const Dart g = 0;
  const long E1 = m1.num_edges(), E2 = m2.num_edges();
  const long X = E1 + E2, Y = E1 + E2 + 1;

  // Cut e and an edge of the piece and reconnect the four ends crosswise.
  auto build = [&](bool swap) {
    std::vector<std::vector<long>> rot;
    for (const auto& r : m1.dart_rotations()) {
      std::vector<long> row;
      for (Dart d : r) row.push_back(d == e ? X : d == alpha(e) ? Y : edge_of(d));
      rot.push_back(std::move(row));
    }
    for (const auto& r : m2.dart_rotations()) {
      std::vector<long> row;
      for (Dart d : r) row.push_back(d == g ? (swap ? X : Y) : d == alpha(g) ? (swap ? Y : X) : E1 + edge_of(d));
      rot.push_back(std::move(row));
    }
    return build_map(rot);
  };
  PlanarMap joined = build(false);
  if (!joined.is_connected() || genus(joined) != 0) joined = build(true);
  Universe out = as_universe(std::move(joined));

  expect(out.v() == u.v() + 9, "plus_nine: vertex count");
  expect(out.mu() == u.mu(), "plus_nine: strand count changed");
  if (is_lune_free(u)) expect(is_lune_free(out), "plus_nine: output not lune-free");
  const int a1 = m1.face_degree(m1.face_of(e)), b1 = m1.face_degree(m1.face_of(alpha(e)));
  const int a2 = m2.face_degree(m2.face_of(g)), b2 = m2.face_degree(m2.face_of(alpha(g)));
  std::vector<int> rest;
  for (int f = 0; f < m1.num_faces(); ++f)
    if (f != m1.face_of(e) && f != m1.face_of(alpha(e))) rest.push_back(m1.face_degree(f));
  for (int f = 0; f < m2.num_faces(); ++f)
    if (f != m2.face_of(g) && f != m2.face_of(alpha(g))) rest.push_back(m2.face_degree(f));
  auto with = [&](int p, int q) {
    std::vector<int> v = rest;
    v.push_back(p);
    v.push_back(q);
    std::sort(v.begin(), v.end());
    return v;
  };
  const auto got = face_degrees(out.map());
  expect(got == with(a1 + a2, b1 + b2) || got == with(a1 + b2, b1 + a2), "plus_nine: face bookkeeping");
  return out;
}

}  // namespace luneknot

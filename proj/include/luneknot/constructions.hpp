#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "luneknot/knot_graph.hpp"
#include "luneknot/medial.hpp"
#include "luneknot/planar_map.hpp"

namespace luneknot {

/// Where a local rewrite happens, given by darts of the target map.
///   Edge:          darts[0] is either dart of the edge.
///   Vertex:        darts[0] is any dart at the vertex.
///   Face:          darts[0] is any dart whose face (on its right) is meant.
///   Corner:        darts[0] = x names the corner between x and sigma(x).
///   FaceEdgePair:  darts[0], darts[1] lie on the same face.
struct RewriteSite {
  enum class Kind { Edge, Vertex, Face, Corner, FaceEdgePair };
  Kind kind = Kind::Edge;
  std::vector<Dart> darts;

  static RewriteSite edge(Dart d) { return {Kind::Edge, {d}}; }
  static RewriteSite vertex(Dart d) { return {Kind::Vertex, {d}}; }
  static RewriteSite face(Dart d) { return {Kind::Face, {d}}; }
  static RewriteSite corner(Dart d) { return {Kind::Corner, {d}}; }
  static RewriteSite face_edge_pair(Dart e, Dart f) { return {Kind::FaceEdgePair, {e, f}}; }
};

/// A braid word; letter i stands for the generator crossing positions i and
/// i+1 (1-based).
struct BraidWord {
  int strands = 0;
  std::vector<int> letters;
};

// Named graphs.

/// Three mutually crossing circles: the octahedron.
Universe venn();
/// The square antiprism shadow on 8 crossings.
Universe g8();
/// Closure of (s_1 ... s_{q-1})^p where q = n+1 for p = 3 and q = n+2
/// otherwise: p(q-1) crossings arranged in concentric p-gon rings.
Universe polygon_family(int p, int n);
/// The 12-crossing tight three-component shadow.
Universe tight_link_graph_12();
/// Special plane graphs with v edges whose medials are tight knot graphs,
/// v in {9, 15, 18, 24}.
PlaneGraph ladder_base(int v);

/// Lune-free knot graphs from the stored tables: v = 9, 10, 11 and
/// index 0..2 of the three 12-crossing ones (0 and 1 have only 3- and
/// 4-faces, 2 has a 5-face).
Universe table_knot_graph(int v, int index = 0);

// Local rewrites. Each re-validates its stated postconditions.

/// Adds one crossing inside a face between two non-adjacent boundary edges.
/// The strand pattern changes, so mu is recomputed rather than preserved.
/// Throws BadSite.
Universe crossing_device(const Universe& u, const RewriteSite& site);

/// Replaces an edge whose flanking faces both have degree >= 4 by a block of
/// four crossings: v + 2, flanking faces - 1, the four corner faces + 1, two
/// new triangles. Throws InadmissibleSite or BadSite.
Universe double_move(const Universe& u, const RewriteSite& edge);

/// Connected sum with the 9-crossing table knot graph at the given edge:
/// v + 9, mu preserved. Throws BadSite.
Universe plus_nine(const Universe& u, const RewriteSite& edge);

/// Pushes one face edge across another: v + 2, exactly one new lune, mu
/// preserved. Throws BadSite.
Universe finger_move(const Universe& u, const RewriteSite& face_edge_pair);

/// Pulls the two edges of a corner into a twist of j crossings (j even):
/// v + j, j new lunes, mu preserved. Throws BadSite or BadParams.
Universe twist_corner(const Universe& u, const RewriteSite& corner, int j);

/// Subdivides the two edges leaving a degree-3 vertex after the given dart
/// four times each and joins the new vertices pairwise by four rungs:
/// e + 12. Throws NotDegreeThree, NotSpecial.
PlaneGraph ladder(const PlaneGraph& g, const RewriteSite& v3);

// Families.

/// Throws TooSmall for v < 8.
Universe lune_free_knot_graph(int v);
/// Throws Unrealizable outside v >= 8, v mod 6 in {0,2,3,4}, v != 12.
Universe tight_knot_graph(int v);
/// Knot graph with exactly k lunes on v crossings. Throws BadParams unless
/// (k even and v >= k+8) or (k odd and v >= k+9).
Universe k_lune_graph(int k, int v);

/// One crossing per letter; strands closed around the right-hand side.
/// Throws BadParams or DisconnectedClosure.
Universe braid_closure_shadow(const BraidWord& word);
/// Closure of (s1 s2 s3)^(4k-1) (s2 s1)^m s2^l on four strands.
Universe braid_shadow(int k, int m, int l);
BraidWord braid_shadow_word(int k, int m, int l);

// Deterministic site choice on the canonical form of a map.

/// Least dart whose edge has both flanking faces of degree >= 4.
std::optional<Dart> first_admissible_edge(const PlanarMap& canonical);

/// Directory of the shipped graph tables: LUNEKNOT_DATA_DIR or the
/// compiled-in default.
std::filesystem::path data_dir();

}  // namespace luneknot

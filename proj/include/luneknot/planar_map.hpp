#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "luneknot/error.hpp"

namespace luneknot {

/// Half-edge index in [0, 2E). The two darts of edge k are 2k and 2k+1.
using Dart = int;

inline constexpr Dart alpha(Dart d) noexcept { return d ^ 1; }
inline constexpr int edge_of(Dart d) noexcept { return d >> 1; }

/// A connected multigraph embedded in an oriented closed surface, stored as a
/// rotation system over darts.
///
/// sigma(d) is the next dart counterclockwise around the vertex of d,
/// alpha(d) is the other half of the same edge, and faces are the orbits of
/// phi = sigma o alpha. Walking a face along phi keeps the face on the right.
///
/// Values are immutable once built; all derived data (vertex and face orbits,
/// component count) is computed eagerly so concurrent reads are safe.
class PlanarMap {
 public:
  /// Builds from per-vertex counterclockwise lists of darts. Every dart in
  /// [0, 2E) must appear exactly once over all lists.
  static PlanarMap from_dart_rotations(const std::vector<std::vector<Dart>>& rotations);

  /// Builds from a sigma permutation (size 2E); vertex order follows the
  /// smallest dart of each orbit.
  static PlanarMap from_sigma(std::vector<Dart> sigma);

  int num_darts() const noexcept { return static_cast<int>(sigma_.size()); }
  int num_edges() const noexcept { return num_darts() / 2; }
  int num_vertices() const noexcept { return static_cast<int>(vertex_first_.size()); }
  int num_faces() const noexcept { return static_cast<int>(face_first_.size()); }
  int num_components() const noexcept { return components_; }
  bool is_connected() const noexcept { return components_ == 1; }

  Dart sigma(Dart d) const { return sigma_[d]; }
  Dart sigma_inv(Dart d) const { return sigma_inv_[d]; }
  Dart phi(Dart d) const { return sigma_[alpha(d)]; }

  int vertex_of(Dart d) const { return vertex_of_[d]; }
  int face_of(Dart d) const { return face_of_[d]; }
  int degree(int v) const { return vertex_degree_[v]; }
  int face_degree(int f) const { return face_degree_[f]; }

  /// First dart of the stored rotation of v; the rotation is read by sigma.
  Dart vertex_dart(int v) const { return vertex_first_[v]; }
  Dart face_dart(int f) const { return face_first_[f]; }

  /// Counterclockwise darts around v, starting at vertex_dart(v).
  std::vector<Dart> darts_at(int v) const;

  /// Per-vertex edge-index lists in rotation order (the UniText view).
  std::vector<std::vector<int>> rotations() const;

  /// Per-vertex dart lists in rotation order.
  std::vector<std::vector<Dart>> dart_rotations() const;

  std::span<const Dart> sigma_permutation() const noexcept { return sigma_; }

  /// Euler genus (2 - V + E - F) / 2. Throws Disconnected.
  int genus() const;

  bool operator==(const PlanarMap& other) const { return sigma_ == other.sigma_ && vertex_first_ == other.vertex_first_; }

 private:
  PlanarMap() = default;
  void finish();

  std::vector<Dart> sigma_;
  std::vector<Dart> sigma_inv_;
  std::vector<int> vertex_of_;
  std::vector<Dart> vertex_first_;
  std::vector<int> vertex_degree_;
  std::vector<int> face_of_;
  std::vector<Dart> face_first_;
  std::vector<int> face_degree_;
  int components_ = 0;
};

/// build_map: per-vertex cyclic lists of edge identifiers, each identifier
/// used exactly twice. Edge identifiers are renumbered by sorted rank; the
/// first occurrence in scan order becomes dart 2k.
/// Disconnected inputs are accepted and flagged by num_components().
PlanarMap build_map(const std::vector<std::vector<long>>& rotations);

/// Face cycles (orbits of phi), each starting at its smallest dart, ordered
/// by that dart.
std::vector<std::vector<Dart>> faces(const PlanarMap& map);

int genus(const PlanarMap& map);

/// Throws Disconnected or PositiveGenus unless the map is a connected
/// sphere embedding.
void require_sphere(const PlanarMap& map);

/// Dual map: vertices are faces of the input. Throws PositiveGenus.
PlanarMap dual(const PlanarMap& map);

/// No loops and no two edges joining the same pair of vertices.
bool is_simple(const PlanarMap& map);

/// The reflected map (rotation order reversed at every vertex).
PlanarMap mirror(const PlanarMap& map);

struct CanonicalCode {
  std::vector<std::int32_t> code;
  bool mirror_included = false;

  auto operator<=>(const CanonicalCode&) const = default;
};

/// Breadth-first dart trace minimized over every starting dart (and over the
/// reflected orientation when include_mirror). Equal codes iff the maps are
/// isomorphic as sphere embeddings. Throws Disconnected.
CanonicalCode canonical_code(const PlanarMap& map, bool include_mirror = true);

/// Isomorphism up to orientation-preserving homeomorphism and reflection.
bool isomorphic(const PlanarMap& a, const PlanarMap& b);

/// The map relabeled along the breadth-first trace that realizes its
/// canonical code. Isomorphic maps have identical canonical forms. When the
/// minimum is attained in the reflected orientation the result is the mirror
/// image of the input.
PlanarMap canonical_form(const PlanarMap& map, bool include_mirror = true);

/// Relabels darts: new dart of old dart d is perm[d]. perm must respect the
/// edge pairing (perm[d ^ 1] == perm[d] ^ 1).
PlanarMap relabel(const PlanarMap& map, std::span<const Dart> perm);

}  // namespace luneknot

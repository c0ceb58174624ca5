#pragma once

#include <utility>
#include <vector>

#include "luneknot/planar_map.hpp"

namespace luneknot {

/// Mutable dart-level rotation lists used by local surgeries. Darts keep their
/// edge pairing (d, d ^ 1); moving a dart to another vertex moves that edge
/// end. build() drops unused edges, renumbers densely and validates.
class MapBuilder {
 public:
  MapBuilder() = default;
  explicit MapBuilder(const PlanarMap& map);

  int add_vertex(std::vector<Dart> rotation = {});
  std::vector<Dart>& rotation(int v) { return rot_[v]; }
  const std::vector<Dart>& rotation(int v) const { return rot_[v]; }
  int num_vertices() const { return static_cast<int>(rot_.size()); }

  /// A fresh edge; first is the even dart.
  std::pair<Dart, Dart> new_edge();

  /// Vertex currently holding d, or -1.
  int vertex_holding(Dart d) const;

  /// Swaps dart `from` for `to` in place, wherever `from` sits.
  void replace(Dart from, Dart to);

  /// Removes d from its rotation without touching its partner.
  void detach(Dart d);

  void clear_vertex(int v) { rot_[v].clear(); }

  PlanarMap build() const;

 private:
  std::vector<std::vector<Dart>> rot_;
  int next_edge_ = 0;
};

}  // namespace luneknot

#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "luneknot/knot_graph.hpp"
#include "luneknot/planar_map.hpp"

namespace luneknot {

/// A connected sphere-embedded multigraph.
class PlaneGraph {
 public:
  /// Throws Disconnected or PositiveGenus.
  explicit PlaneGraph(PlanarMap map);
  const PlanarMap& map() const noexcept { return map_; }
  int v() const noexcept { return map_.num_vertices(); }
  int e() const noexcept { return map_.num_edges(); }
  int f() const noexcept { return map_.num_faces(); }

 private:
  PlanarMap map_;
};

PlaneGraph dual(const PlaneGraph& g);

/// Proper two-coloring of the faces of a universe; black[f] for face index f.
struct FaceColoring {
  std::vector<bool> black;
  int black_count() const;
};

/// One angle per dart x: the corner between x and sigma(x) at vertex(x),
/// which lies in face_of(alpha(x)).
struct AngleGraph {
  struct Angle {
    int vertex;
    int face;
  };
  std::vector<Angle> angles;
  /// Neighbours of angle i: across edge(i) and across edge(sigma(i)).
  std::vector<std::pair<int, int>> neighbors;
};

enum class SpecialTag { Wheel, Cubic, Triangulation, Other };

struct SpecialClass {
  SpecialTag tag = SpecialTag::Other;
  std::optional<int> wheel_size;
  bool cubic = false;
  bool triangulation = false;
  bool wheel = false;
};

const char* to_string(SpecialTag tag);

/// Vertices are the edges of g; each corner of g becomes an edge joining the
/// two edges that bound it. Throws TooSmall for fewer than two edges.
Universe medial(const PlaneGraph& g);

/// Checkerboard coloring with the face of dart 0 black, or white when
/// seed_black is false.
FaceColoring checkerboard(const Universe& u, bool seed_black = true);

/// Inverse of medial: vertices are black faces, one edge per crossing.
/// Throws ImproperColoring.
PlaneGraph premedial(const Universe& u, const FaceColoring& coloring);
PlaneGraph premedial(const Universe& u);

AngleGraph angle_graph(const PlaneGraph& g);
int angle_components(const PlaneGraph& g);

/// All vertex and face degrees >= 3, and every corner has a vertex or face of
/// degree exactly 3.
bool is_special(const PlaneGraph& g);

/// Structural classification (cubic, triangulation, wheel) independent of
/// the corner test. Tag priority is Wheel > Cubic > Triangulation.
SpecialClass classify_special(const PlaneGraph& g);

/// Hub 0 joined to an n-cycle 1..n. Throws BadSize for n < 3.
PlaneGraph wheel(int n);

}  // namespace luneknot

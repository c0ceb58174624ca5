#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "luneknot/planar_map.hpp"

namespace luneknot {

/// UniText: `map v=<V> e=<E>` followed by one `<vertex>: <edge> ...` line per
/// vertex, edge ids counterclockwise. Blank lines and `#` comments are
/// ignored. Edge ids are renumbered by sorted rank; vertex i becomes vertex i.
/// Throws SyntaxError (with line and column) or EdgeCountError.
PlanarMap parse_uni(std::string_view text);

/// Normalized UniText with LF line endings.
std::string write_uni(const PlanarMap& map);

PlanarMap read_uni_file(const std::filesystem::path& path);
void write_uni_file(const std::filesystem::path& path, const PlanarMap& map);

/// Planar code body: vertex count, then per vertex its 1-based neighbours in
/// counterclockwise order terminated by 0. Single bytes, so at most 255
/// vertices. Throws NotSimple or BadSize.
std::vector<std::uint8_t> export_planar_code(const PlanarMap& map);

/// Same, preceded by the `>>planar_code<<` file header.
std::vector<std::uint8_t> planar_code_file(const PlanarMap& map);

struct Embedding {
  std::vector<std::array<double, 2>> xy;
  double max_residual = 0.0;
};

/// Brute force: removes every vertex pair and tests connectivity.
bool is_three_connected(const PlanarMap& map);

/// Barycentric drawing with the given face on a regular polygon. Throws
/// NotThreeConnected, SingularSystem or BadParams (face index).
Embedding tutte_embed(const PlanarMap& map, int outer_face);

/// Vertices evenly spaced on the unit circle.
Embedding circular_layout(const PlanarMap& map);

/// Tutte layout on the largest face when the map is simple and 3-connected,
/// circular layout otherwise.
Embedding best_layout(const PlanarMap& map);

/// Segment-intersection test on a straight-line drawing; edges sharing an
/// endpoint are not compared.
bool has_crossing_edges(const PlanarMap& map, const Embedding& emb, double tol = 1e-9);

std::string export_dot(const PlanarMap& map);
std::string export_svg(const PlanarMap& map);

}  // namespace luneknot

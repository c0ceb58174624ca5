#include "luneknot/map_builder.hpp"

#include <algorithm>
#include <string>

namespace luneknot {

MapBuilder::MapBuilder(const PlanarMap& map) : rot_(map.dart_rotations()), next_edge_(map.num_edges()) {}

int MapBuilder::add_vertex(std::vector<Dart> rotation) {
  rot_.push_back(std::move(rotation));
  return num_vertices() - 1;
}

std::pair<Dart, Dart> MapBuilder::new_edge() {
  const int e = next_edge_++;
  return {2 * e, 2 * e + 1};
}

int MapBuilder::vertex_holding(Dart d) const {
  for (int v = 0; v < num_vertices(); ++v)
    if (std::find(rot_[v].begin(), rot_[v].end(), d) != rot_[v].end()) return v;
  return -1;
}

void MapBuilder::replace(Dart from, Dart to) {
  for (auto& r : rot_) {
    auto it = std::find(r.begin(), r.end(), from);
    if (it != r.end()) {
      *it = to;
      return;
    }
  }
  throw Error(ErrorCode::BadSite, "dart " + std::to_string(from) + " not present");
}

void MapBuilder::detach(Dart d) {
  for (auto& r : rot_) {
    auto it = std::find(r.begin(), r.end(), d);
    if (it != r.end()) {
      r.erase(it);
      return;
    }
  }
}

PlanarMap MapBuilder::build() const {
  std::vector<int> present(next_edge_, 0);
  for (const auto& r : rot_)
    for (Dart d : r) ++present[edge_of(d)];
  std::vector<int> renumber(next_edge_, -1);
  int edges = 0;
  for (int e = 0; e < next_edge_; ++e) {
    if (present[e] == 0) continue;
    if (present[e] != 2)
      throw Error(ErrorCode::ConstructionFailed, "edge " + std::to_string(e) + " has a dangling end");
    renumber[e] = edges++;
  }
  std::vector<std::vector<Dart>> out;
  for (const auto& r : rot_) {
    if (r.empty()) continue;
    std::vector<Dart> row;
    row.reserve(r.size());
    for (Dart d : r) row.push_back(2 * renumber[edge_of(d)] + (d & 1));
    out.push_back(std::move(row));
  }
  return PlanarMap::from_dart_rotations(out);
}

}  // namespace luneknot

#pragma once

#include <map>
#include <string>

#include "luneknot/planar_map.hpp"

namespace luneknot {

/// Face-degree counts f_k. Degrees count dart incidences.
struct FaceCensus {
  std::map<int, int> counts;

  int f(int k) const {
    auto it = counts.find(k);
    return it == counts.end() ? 0 : it->second;
  }
  int total() const;
  int degree_sum() const;

  /// f3 - 8 - sum_{k>=5} (k-4) f_k; zero for every lune-free universe.
  int lune_free_defect() const;
  /// 3 f1 + 2 f2 + f3 - 8 - sum_{k>=5} (k-4) f_k; zero for every universe.
  int general_defect() const;

  std::string to_string() const;
  bool operator==(const FaceCensus&) const = default;
};

FaceCensus face_census(const PlanarMap& map);

/// A 4-regular connected sphere-embedded multigraph (a link shadow).
class Universe {
 public:
  const PlanarMap& map() const noexcept { return map_; }
  int v() const noexcept { return map_.num_vertices(); }
  int e() const noexcept { return map_.num_edges(); }
  int f() const noexcept { return map_.num_faces(); }
  /// Number of straight-ahead circuits (link components).
  int mu() const noexcept { return mu_; }

 private:
  friend Universe as_universe(PlanarMap map);
  explicit Universe(PlanarMap map);
  PlanarMap map_;
  int mu_ = 0;
};

/// Validates 4-regularity, connectivity and genus 0. Throws NotFourRegular,
/// Disconnected or PositiveGenus.
Universe as_universe(PlanarMap map);

FaceCensus face_census(const Universe& u);

/// Orbits of d -> alpha(sigma^2(d)); each circuit is traced once per
/// direction, so the link component count is half the orbit count.
int strand_count(const Universe& u);
std::vector<std::vector<Dart>> strand_orbits(const Universe& u);

bool is_knot_graph(const Universe& u);

/// Number of two-sided faces.
int lune_count(const Universe& u);

/// Simple (no loops, no parallel edges). A simple universe has f1 = f2 = 0.
bool is_lune_free(const Universe& u);

/// Some edge separates two faces of degree >= 4. Throws NotLuneFree.
bool is_admissible(const Universe& u);

/// Every edge has a flanking face of degree exactly 3. Throws NotLuneFree.
bool is_tight(const Universe& u);

}  // namespace luneknot

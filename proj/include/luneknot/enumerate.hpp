#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "luneknot/knot_graph.hpp"
#include "luneknot/medial.hpp"
#include "luneknot/planar_map.hpp"

namespace luneknot {

/// Enumeration bounds and parallelism. Ceilings are configuration: exceeding
/// one raises CeilingExceeded.
struct EnumConfig {
  int simple_ceiling = 13;   ///< max v for lune-free universe enumeration
  int general_ceiling = 10;  ///< max v when multigraph universes are allowed
  int plane_ceiling = 12;    ///< max edges for plane graph enumeration
  int cross_check_ceiling = 10;
  int threads = 1;
  int split_depth = 5;  ///< search-tree depth at which subtrees become tasks

  /// Defaults overridden by LUNEKNOT_SIMPLE_CEILING, LUNEKNOT_GENERAL_CEILING,
  /// LUNEKNOT_PLANE_CEILING, LUNEKNOT_CROSS_CHECK_CEILING and LUNEKNOT_THREADS.
  static EnumConfig from_env();
};

/// Low-level search over rooted rotation systems in breadth-first trace
/// order. Every sphere map satisfying the constraints is produced exactly
/// once per isomorphism class when canonical is set, or once per rooted map
/// otherwise.
struct MapSearch {
  int darts = 0;  ///< 2E
  int min_degree = 1;
  int max_degree = 0;  ///< 0 means unbounded
  int min_face_degree = 1;
  bool simple = false;
  bool canonical = true;
  bool include_mirror = true;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t emitted = 0;
};

/// Maps passing keep() in deterministic task order (not sorted).
std::vector<PlanarMap> search_maps(const MapSearch& spec, const std::function<bool(const PlanarMap&)>& keep,
                                   const EnumConfig& config = {}, SearchStats* stats = nullptr);

struct EnumFilter {
  bool require_simple = true;
  std::optional<int> mu;
  std::optional<bool> tight;  ///< implies lune-free
  int v_min = 1;
  int v_max = 6;

  static EnumFilter exactly(int v) {
    EnumFilter f;
    f.v_min = f.v_max = v;
    return f;
  }
};

struct EnumeratedUniverse {
  Universe universe;
  CanonicalCode code;
};

/// One representative per sphere-isomorphism class (reflection included),
/// ordered by (v, canonical code). Representatives are in canonical form.
std::vector<EnumeratedUniverse> enumerate_universes(const EnumFilter& filter, const EnumConfig& config = EnumConfig::from_env());

/// Connected sphere multigraphs with 1..e_max edges, degree filters applied
/// during generation. Ordered by (edges, canonical code).
std::vector<PlaneGraph> enumerate_plane_graphs(int e_max, int min_vertex_deg, int min_face_deg, bool simple_only,
                                               const EnumConfig& config = EnumConfig::from_env());

struct CensusRow {
  int v = 0;
  int total_lune_free = 0;
  int knot_graphs = 0;
  int tight_lune_free = 0;
  int tight_knot = 0;
  bool operator==(const CensusRow&) const = default;
};

std::vector<CensusRow> census_table(int v_max, const EnumConfig& config = EnumConfig::from_env());
CensusRow census_row(const std::vector<EnumeratedUniverse>& lune_free_at_v, int v);

struct CrossCheckReport {
  int v = 0;
  std::vector<CanonicalCode> pipeline_a;  ///< direct 4-regular search
  std::vector<CanonicalCode> pipeline_b;  ///< medials of plane graphs
  std::vector<CanonicalCode> only_a;
  std::vector<CanonicalCode> only_b;
  bool agree() const { return only_a.empty() && only_b.empty(); }
};

/// Both pipelines for lune-free universes on v vertices. Throws Mismatch
/// when the canonical code sets differ.
CrossCheckReport oracle_cross_check(int v, const EnumConfig& config = EnumConfig::from_env());
CrossCheckReport cross_check_report(int v, const EnumConfig& config = EnumConfig::from_env());

/// Random connected sphere multigraph grown by corner insertions: pendant
/// edges, chords inside a face and loops.
PlaneGraph random_plane_graph(int edges, std::mt19937_64& rng, bool allow_loops = true);

}  // namespace luneknot

#include "luneknot/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

namespace luneknot {

namespace {

int env_int(const char* name, int fallback) {
  const char* s = std::getenv(name);
  if (!s || !*s) return fallback;
  char* end = nullptr;
  const long v = std::strtol(s, &end, 10);
  return (end && *end == '\0' && v > 0) ? static_cast<int>(v) : fallback;
}

}  // namespace

EnumConfig EnumConfig::from_env() {
  EnumConfig c;
  c.simple_ceiling = env_int("LUNEKNOT_SIMPLE_CEILING", c.simple_ceiling);
  c.general_ceiling = env_int("LUNEKNOT_GENERAL_CEILING", c.general_ceiling);
  c.plane_ceiling = env_int("LUNEKNOT_PLANE_CEILING", c.plane_ceiling);
  c.cross_check_ceiling = env_int("LUNEKNOT_CROSS_CHECK_CEILING", c.cross_check_ceiling);
  c.threads = env_int("LUNEKNOT_THREADS", c.threads);
  return c;
}

namespace {

// Trace entries: an already labelled dart l encodes as l << kShift; the
// discovery of a new vertex of degree d while c darts are labelled encodes as
// (c << kShift) | d. New vertices therefore sort after every existing label,
// and two traces with equal prefixes compare new vertices by degree.
constexpr int kShift = 7;

struct Decision {
  int partner;  // >= 0: pair the current dart with this dart
  int degree;   // partner < 0: open a new vertex of this degree
};

// Builds rooted maps in breadth-first trace order. Darts are labelled in
// vertex blocks; sigma is the successor inside a block. The current dart is
// the smallest labelled dart without a partner; it is paired either with a
// later labelled dart or with the first dart of a new vertex.
class Generator {
 public:
  Generator(const MapSearch& spec, const std::function<bool(const PlanarMap&)>& keep)
      : spec_(spec), keep_(keep), n_total_(spec.darts) {
    max_degree_ = spec.max_degree > 0 ? spec.max_degree : n_total_;
    max_vertices_ = n_total_ / std::max(1, spec.min_degree) + 1;
    alpha_.assign(n_total_, -1);
    vert_.assign(n_total_, -1);
    code_.assign(n_total_, 0);
    start_.assign(max_vertices_, 0);
    deg_.assign(max_vertices_, 0);
    discovered_by_.assign(max_vertices_, -1);
    adj_.assign(static_cast<std::size_t>(max_vertices_) * max_vertices_, 0);
    stamp_.assign(n_total_, 0);
    label_seen_.assign(n_total_, 0);
    label_.assign(n_total_, -1);
    order_.reserve(n_total_);
  }

  std::vector<PlanarMap> results;
  SearchStats stats;

  // Enumerates decision prefixes of the given depth (after the root choice)
  // that survive pruning.
  void collect_tasks(int depth, std::vector<std::vector<Decision>>& tasks) {
    split_depth_ = depth;
    tasks_ = &tasks;
    for_each_root([&] { dfs(); });
    tasks_ = nullptr;
  }

  void run_all() {
    split_depth_ = -1;
    for_each_root([&] { dfs(); });
  }

  void run_task(const std::vector<Decision>& task) {
    split_depth_ = -1;
    open_vertex(-1, task.front().degree);
    for (std::size_t i = 1; i < task.size(); ++i) apply(task[i]);
    path_ = task;
    dfs();
  }

 private:
  template <typename F>
  void for_each_root(F&& body) {
    for (int d = std::max(1, spec_.min_degree); d <= std::min(max_degree_, n_total_); ++d) {
      open_vertex(-1, d);
      path_.assign(1, Decision{-1, d});
      if (ok()) body();
      close_vertex();
    }
  }

  int sigma(int d) const {
    const int v = vert_[d];
    return start_[v] + (d - start_[v] + 1) % deg_[v];
  }
  int sigma_inv(int d) const {
    const int v = vert_[d];
    return start_[v] + (d - start_[v] + deg_[v] - 1) % deg_[v];
  }
  char& adj(int a, int b) { return adj_[static_cast<std::size_t>(a) * max_vertices_ + b]; }

  void open_vertex(int from, int degree) {
    const int v = num_vertices_++;
    start_[v] = labelled_;
    deg_[v] = degree;
    discovered_by_[v] = from;
    for (int i = 0; i < degree; ++i) vert_[labelled_ + i] = v;
    if (from >= 0) {
      code_[from] = (labelled_ << kShift) | degree;
      code_[labelled_] = from << kShift;
      alpha_[from] = labelled_;
      alpha_[labelled_] = from;
      adj(vert_[from], v) = adj(v, vert_[from]) = 1;
      ++paired_;
    }
    labelled_ += degree;
  }

  void close_vertex() {
    const int v = --num_vertices_;
    const int from = discovered_by_[v];
    if (from >= 0) {
      alpha_[from] = -1;
      alpha_[start_[v]] = -1;
      adj(vert_[from], v) = adj(v, vert_[from]) = 0;
      --paired_;
    }
    for (int i = 0; i < deg_[v]; ++i) vert_[start_[v] + i] = -1;
    labelled_ = start_[v];
  }

  void pair(int x, int y) {
    alpha_[x] = y;
    alpha_[y] = x;
    code_[x] = y << kShift;
    code_[y] = x << kShift;
    ++paired_;
    const int a = vert_[x], b = vert_[y];
    if (a != b) adj(a, b) = adj(b, a) = 1;
  }

  void unpair(int x, int y, bool was_adjacent) {
    alpha_[x] = alpha_[y] = -1;
    --paired_;
    const int a = vert_[x], b = vert_[y];
    if (a != b && !was_adjacent) adj(a, b) = adj(b, a) = 0;
  }

  void apply(const Decision& d) {
    const int x = current();
    if (d.partner >= 0) pair(x, d.partner);
    else open_vertex(x, d.degree);
  }

  int current() const {
    for (int x = 0; x < labelled_; ++x)
      if (alpha_[x] < 0) return x;
    return labelled_;
  }

  void dfs() {
    ++stats.nodes;
    if (tasks_ && static_cast<int>(path_.size()) > split_depth_) {
      tasks_->push_back(path_);
      return;
    }
    const int x = current();
    if (x == labelled_) {
      if (labelled_ == n_total_) emit();
      return;
    }
    const int vx = vert_[x];
    for (int y = x + 1; y < labelled_; ++y) {
      if (alpha_[y] >= 0) continue;
      const int vy = vert_[y];
      const bool was_adjacent = vx != vy && adj(vx, vy);
      if (spec_.simple && (vx == vy || was_adjacent)) continue;
      pair(x, y);
      path_.push_back({y, 0});
      if (ok()) dfs();
      path_.pop_back();
      unpair(x, y, was_adjacent);
    }
    const int room = n_total_ - labelled_;
    for (int d = std::max(1, spec_.min_degree); d <= std::min(max_degree_, room); ++d) {
      if (num_vertices_ >= max_vertices_) break;
      open_vertex(x, d);
      path_.push_back({-1, d});
      if (ok()) dfs();
      path_.pop_back();
      close_vertex();
    }
  }

  // Sphere extendability and face-degree bound on the partial map with every
  // unpaired dart closed off by a pendant leaf; then the trace prefix test.
  bool ok() {
    ++stamp_id_;
    int cycles = 0;
    for (int s = 0; s < labelled_; ++s) {
      if (stamp_[s] == stamp_id_) continue;
      ++cycles;
      bool open = false;
      int length = 0;
      for (int d = s; stamp_[d] != stamp_id_;) {
        stamp_[d] = stamp_id_;
        ++length;
        if (alpha_[d] < 0) {
          open = true;
          d = sigma(d);
        } else {
          d = sigma(alpha_[d]);
        }
      }
      if (!open && length < spec_.min_face_degree) return false;
    }
    // genus of the leaf-closed map is (2 - V + P - F') / 2 and never drops
    // as the map grows.
    if (cycles < 2 - num_vertices_ + paired_) return false;
    if (labelled_ == n_total_ && paired_ * 2 == n_total_ && cycles != 2 - num_vertices_ + paired_) return false;
    return !spec_.canonical || trace_prefix_minimal();
  }

  // Rejects when some other root, in either orientation, yields a trace whose
  // determined prefix is already smaller than ours.
  bool trace_prefix_minimal() {
    const int passes = spec_.include_mirror ? 2 : 1;
    for (int pass = 0; pass < passes; ++pass) {
      const bool reversed = pass == 1;
      for (int r = 0; r < labelled_; ++r) {
        if (r == 0 && !reversed) continue;
        if (compare_root(r, reversed) < 0) return false;
      }
    }
    return true;
  }

  int compare_root(int root, bool reversed) {
    ++label_stamp_;
    order_.clear();
    auto label_block = [&](int d) {
      for (int i = 0, x = d; i < deg_[vert_[d]]; ++i) {
        label_seen_[x] = label_stamp_;
        label_[x] = static_cast<int>(order_.size());
        order_.push_back(x);
        x = reversed ? sigma_inv(x) : sigma(x);
      }
    };
    label_block(root);
    for (std::size_t i = 0; i < order_.size(); ++i) {
      const int z = order_[i];
      const int p = alpha_[z];
      if (p < 0 || alpha_[i] < 0) return 0;
      int entry;
      if (label_seen_[p] == label_stamp_) {
        entry = label_[p] << kShift;
      } else {
        entry = (static_cast<int>(order_.size()) << kShift) | deg_[vert_[p]];
        label_block(p);
      }
      if (entry != code_[i]) return entry < code_[i] ? -1 : 1;
    }
    return 0;
  }

  void emit() {
    ++stats.leaves;
    // Edges numbered by first appearance in trace order.
    std::vector<int> dart_id(n_total_, -1);
    int edges = 0;
    for (int d = 0; d < n_total_; ++d) {
      if (dart_id[d] != -1) continue;
      dart_id[d] = 2 * edges;
      dart_id[alpha_[d]] = 2 * edges + 1;
      ++edges;
    }
    std::vector<Dart> sig(n_total_);
    for (int d = 0; d < n_total_; ++d) sig[dart_id[d]] = dart_id[sigma(d)];
    PlanarMap m = PlanarMap::from_sigma(std::move(sig));
    if (keep_(m)) {
      ++stats.emitted;
      results.push_back(std::move(m));
    }
  }

  const MapSearch& spec_;
  const std::function<bool(const PlanarMap&)>& keep_;
  int n_total_;
  int max_degree_ = 0;
  int max_vertices_ = 0;

  std::vector<int> alpha_, vert_, code_, start_, deg_, discovered_by_;
  std::vector<char> adj_;
  int labelled_ = 0;
  int num_vertices_ = 0;
  int paired_ = 0;

  std::vector<unsigned> stamp_;
  unsigned stamp_id_ = 0;
  std::vector<int> label_;
  std::vector<unsigned> label_seen_;
  unsigned label_stamp_ = 0;
  std::vector<int> order_;

  std::vector<Decision> path_;
  int split_depth_ = -1;
  std::vector<std::vector<Decision>>* tasks_ = nullptr;
};

}  // namespace

std::vector<PlanarMap> search_maps(const MapSearch& spec, const std::function<bool(const PlanarMap&)>& keep,
                                   const EnumConfig& config, SearchStats* stats) {
  if (spec.darts <= 0 || spec.darts % 2 != 0) throw Error(ErrorCode::BadParams, "dart count must be positive and even");
  const int threads = std::max(1, config.threads);
  if (threads == 1) {
    Generator g(spec, keep);
    g.run_all();
    if (stats) *stats = g.stats;
    return std::move(g.results);
  }
  std::vector<std::vector<Decision>> tasks;
  Generator splitter(spec, keep);
  splitter.collect_tasks(config.split_depth, tasks);
  std::vector<std::vector<PlanarMap>> per_task(tasks.size());
  std::vector<SearchStats> per_stats(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Generator g(spec, keep);
      g.run_task(tasks[i]);
      per_task[i] = std::move(g.results);
      per_stats[i] = g.stats;
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  // Maps emitted before the split depth are collected by the splitter.
  std::vector<PlanarMap> out = std::move(splitter.results);
  SearchStats total = splitter.stats;
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    for (auto& m : per_task[i]) out.push_back(std::move(m));
    total.nodes += per_stats[i].nodes;
    total.leaves += per_stats[i].leaves;
    total.emitted += per_stats[i].emitted;
  }
  if (stats) *stats = total;
  return out;
}

namespace {

bool passes(const Universe& u, const EnumFilter& filter) {
  if (filter.mu && u.mu() != *filter.mu) return false;
  if (filter.tight && (!is_lune_free(u) || is_tight(u) != *filter.tight)) return false;
  return true;
}

void sort_by_code(std::vector<EnumeratedUniverse>& list) {
  std::sort(list.begin(), list.end(), [](const EnumeratedUniverse& a, const EnumeratedUniverse& b) {
    return a.code < b.code;
  });
}

}  // namespace

std::vector<EnumeratedUniverse> enumerate_universes(const EnumFilter& filter, const EnumConfig& config) {
  if (filter.v_min < 1 || filter.v_max < filter.v_min) throw Error(ErrorCode::BadParams, "invalid vertex bounds");
  const bool simple = filter.require_simple || filter.tight.has_value();
  const int ceiling = simple ? config.simple_ceiling : config.general_ceiling;
  if (filter.v_max > ceiling)
    throw Error(ErrorCode::CeilingExceeded,
                "v_max " + std::to_string(filter.v_max) + " exceeds ceiling " + std::to_string(ceiling));
  std::vector<EnumeratedUniverse> out;
  for (int v = filter.v_min; v <= filter.v_max; ++v) {
    MapSearch spec;
    spec.darts = 4 * v;
    spec.min_degree = spec.max_degree = 4;
    spec.simple = simple;
    spec.min_face_degree = simple ? 3 : 1;
    auto keep = [&](const PlanarMap& m) { return passes(as_universe(m), filter); };
    std::vector<EnumeratedUniverse> level;
    for (auto& m : search_maps(spec, keep, config)) {
      PlanarMap canon = canonical_form(m);
      CanonicalCode code = canonical_code(canon);
      level.push_back({as_universe(std::move(canon)), std::move(code)});
    }
    sort_by_code(level);
    for (auto& e : level) out.push_back(std::move(e));
  }
  return out;
}

std::vector<PlaneGraph> enumerate_plane_graphs(int e_max, int min_vertex_deg, int min_face_deg, bool simple_only,
                                               const EnumConfig& config) {
  if (e_max > config.plane_ceiling)
    throw Error(ErrorCode::CeilingExceeded,
                "e_max " + std::to_string(e_max) + " exceeds ceiling " + std::to_string(config.plane_ceiling));
  std::vector<PlaneGraph> out;
  for (int e = 1; e <= e_max; ++e) {
    MapSearch spec;
    spec.darts = 2 * e;
    spec.min_degree = std::max(1, min_vertex_deg);
    spec.min_face_degree = std::max(1, min_face_deg);
    spec.simple = simple_only;
    std::vector<std::pair<CanonicalCode, PlanarMap>> level;
    for (auto& m : search_maps(spec, [](const PlanarMap&) { return true; }, config)) {
      PlanarMap canon = canonical_form(m);
      CanonicalCode code = canonical_code(canon);
      level.emplace_back(std::move(code), std::move(canon));
    }
    std::sort(level.begin(), level.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    for (auto& [code, m] : level) out.emplace_back(std::move(m));
  }
  return out;
}

CensusRow census_row(const std::vector<EnumeratedUniverse>& lune_free_at_v, int v) {
  CensusRow row;
  row.v = v;
  for (const auto& e : lune_free_at_v) {
    if (e.universe.v() != v || !is_lune_free(e.universe)) continue;
    const bool knot = is_knot_graph(e.universe);
    const bool tight = is_tight(e.universe);
    ++row.total_lune_free;
    if (knot) ++row.knot_graphs;
    if (tight) ++row.tight_lune_free;
    if (tight && knot) ++row.tight_knot;
  }
  return row;
}

std::vector<CensusRow> census_table(int v_max, const EnumConfig& config) {
  if (v_max > config.simple_ceiling)
    throw Error(ErrorCode::CeilingExceeded,
                "v_max " + std::to_string(v_max) + " exceeds ceiling " + std::to_string(config.simple_ceiling));
  std::vector<CensusRow> rows;
  for (int v = 1; v <= v_max; ++v) rows.push_back(census_row(enumerate_universes(EnumFilter::exactly(v), config), v));
  return rows;
}

CrossCheckReport cross_check_report(int v, const EnumConfig& config) {
  if (v > config.cross_check_ceiling)
    throw Error(ErrorCode::CeilingExceeded,
                "v " + std::to_string(v) + " exceeds cross-check ceiling " + std::to_string(config.cross_check_ceiling));
  CrossCheckReport report;
  report.v = v;
  for (const auto& e : enumerate_universes(EnumFilter::exactly(v), config)) report.pipeline_a.push_back(e.code);

  // Pipeline B: every lune-free universe is the medial of a sphere multigraph
  // with v edges and all vertex and face degrees >= 3.
  MapSearch spec;
  spec.darts = 2 * v;
  spec.min_degree = 3;
  spec.min_face_degree = 3;
  std::set<CanonicalCode> codes;
  if (v >= 2) {
    for (const auto& m : search_maps(spec, [](const PlanarMap&) { return true; }, config)) {
      Universe d = medial(PlaneGraph(m));
      if (is_simple(d.map())) codes.insert(canonical_code(d.map()));
    }
  }
  report.pipeline_b.assign(codes.begin(), codes.end());
  std::set_difference(report.pipeline_a.begin(), report.pipeline_a.end(), report.pipeline_b.begin(),
                      report.pipeline_b.end(), std::back_inserter(report.only_a));
  std::set_difference(report.pipeline_b.begin(), report.pipeline_b.end(), report.pipeline_a.begin(),
                      report.pipeline_a.end(), std::back_inserter(report.only_b));
  return report;
}

CrossCheckReport oracle_cross_check(int v, const EnumConfig& config) {
  CrossCheckReport report = cross_check_report(v, config);
  if (!report.agree())
    throw Error(ErrorCode::Mismatch, "v=" + std::to_string(v) + ": " + std::to_string(report.only_a.size()) +
                                         " only in direct search, " + std::to_string(report.only_b.size()) +
                                         " only in medial pipeline");
  return report;
}

}  // namespace luneknot

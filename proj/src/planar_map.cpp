#include "luneknot/planar_map.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace luneknot {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::DuplicateEdgeUse: return "DuplicateEdgeUse";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::PositiveGenus: return "PositiveGenus";
    case ErrorCode::NotFourRegular: return "NotFourRegular";
    case ErrorCode::NotLuneFree: return "NotLuneFree";
    case ErrorCode::TooSmall: return "TooSmall";
    case ErrorCode::ImproperColoring: return "ImproperColoring";
    case ErrorCode::BadSize: return "BadSize";
    case ErrorCode::BadParams: return "BadParams";
    case ErrorCode::BadSite: return "BadSite";
    case ErrorCode::InadmissibleSite: return "InadmissibleSite";
    case ErrorCode::NotDegreeThree: return "NotDegreeThree";
    case ErrorCode::NotSpecial: return "NotSpecial";
    case ErrorCode::Unrealizable: return "Unrealizable";
    case ErrorCode::DisconnectedClosure: return "DisconnectedClosure";
    case ErrorCode::CeilingExceeded: return "CeilingExceeded";
    case ErrorCode::Mismatch: return "Mismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::EdgeCountError: return "EdgeCountError";
    case ErrorCode::NotSimple: return "NotSimple";
    case ErrorCode::NotThreeConnected: return "NotThreeConnected";
    case ErrorCode::SingularSystem: return "SingularSystem";
    case ErrorCode::ConstructionFailed: return "ConstructionFailed";
    case ErrorCode::DataFile: return "DataFile";
  }
  return "Unknown";
}

PlanarMap PlanarMap::from_dart_rotations(const std::vector<std::vector<Dart>>& rotations) {
  if (rotations.empty()) throw Error(ErrorCode::EmptyInput, "no vertices");
  std::size_t total = 0;
  for (const auto& r : rotations) {
    if (r.empty()) throw Error(ErrorCode::EmptyInput, "vertex with empty rotation");
    total += r.size();
  }
  if (total % 2 != 0) throw Error(ErrorCode::DuplicateEdgeUse, "odd number of darts");
  PlanarMap m;
  m.sigma_.assign(total, -1);
  for (const auto& r : rotations) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      Dart d = r[i];
      if (d < 0 || static_cast<std::size_t>(d) >= total || m.sigma_[d] != -1)
        throw Error(ErrorCode::DuplicateEdgeUse, "dart " + std::to_string(d) + " missing or repeated");
      m.sigma_[d] = r[(i + 1) % r.size()];
    }
    m.vertex_first_.push_back(r.front());
  }
  m.finish();
  return m;
}

PlanarMap PlanarMap::from_sigma(std::vector<Dart> sigma) {
  if (sigma.empty()) throw Error(ErrorCode::EmptyInput, "no darts");
  if (sigma.size() % 2 != 0) throw Error(ErrorCode::DuplicateEdgeUse, "odd number of darts");
  PlanarMap m;
  std::vector<char> seen(sigma.size(), 0);
  for (Dart d : sigma) {
    if (d < 0 || static_cast<std::size_t>(d) >= sigma.size() || seen[d])
      throw Error(ErrorCode::DuplicateEdgeUse, "sigma is not a permutation");
    seen[d] = 1;
  }
  m.sigma_ = std::move(sigma);
  std::fill(seen.begin(), seen.end(), 0);
  for (Dart d = 0; d < m.num_darts(); ++d) {
    if (seen[d]) continue;
    m.vertex_first_.push_back(d);
    for (Dart x = d; !seen[x]; x = m.sigma_[x]) seen[x] = 1;
  }
  m.finish();
  return m;
}

void PlanarMap::finish() {
  const int n = num_darts();
  sigma_inv_.assign(n, 0);
  for (Dart d = 0; d < n; ++d) sigma_inv_[sigma_[d]] = d;

  vertex_of_.assign(n, -1);
  vertex_degree_.assign(vertex_first_.size(), 0);
  for (int v = 0; v < num_vertices(); ++v) {
    Dart d = vertex_first_[v];
    do {
      vertex_of_[d] = v;
      ++vertex_degree_[v];
      d = sigma_[d];
    } while (d != vertex_first_[v]);
  }

  face_of_.assign(n, -1);
  face_first_.clear();
  face_degree_.clear();
  for (Dart d = 0; d < n; ++d) {
    if (face_of_[d] != -1) continue;
    const int f = num_faces();
    face_first_.push_back(d);
    face_degree_.push_back(0);
    for (Dart x = d; face_of_[x] == -1; x = phi(x)) {
      face_of_[x] = f;
      ++face_degree_[f];
    }
  }

  // Components over the darts: sigma and alpha generate the adjacency.
  std::vector<int> comp(n, -1);
  std::vector<Dart> stack;
  components_ = 0;
  for (Dart s = 0; s < n; ++s) {
    if (comp[s] != -1) continue;
    comp[s] = components_;
    stack.push_back(s);
    while (!stack.empty()) {
      Dart d = stack.back();
      stack.pop_back();
      for (Dart e : {sigma_[d], alpha(d)}) {
        if (comp[e] == -1) {
          comp[e] = components_;
          stack.push_back(e);
        }
      }
    }
    ++components_;
  }
}

std::vector<Dart> PlanarMap::darts_at(int v) const {
  std::vector<Dart> out;
  out.reserve(vertex_degree_[v]);
  Dart d = vertex_first_[v];
  do {
    out.push_back(d);
    d = sigma_[d];
  } while (d != vertex_first_[v]);
  return out;
}

std::vector<std::vector<Dart>> PlanarMap::dart_rotations() const {
  std::vector<std::vector<Dart>> out;
  out.reserve(num_vertices());
  for (int v = 0; v < num_vertices(); ++v) out.push_back(darts_at(v));
  return out;
}

std::vector<std::vector<int>> PlanarMap::rotations() const {
  auto out = dart_rotations();
  for (auto& r : out)
    for (auto& d : r) d = edge_of(d);
  return out;
}

int PlanarMap::genus() const {
  if (!is_connected()) throw Error(ErrorCode::Disconnected, std::to_string(components_) + " components");
  return (2 - num_vertices() + num_edges() - num_faces()) / 2;
}

PlanarMap build_map(const std::vector<std::vector<long>>& rotations) {
  if (rotations.empty()) throw Error(ErrorCode::EmptyInput, "no vertices");
  std::map<long, int> uses;
  for (const auto& r : rotations)
    for (long e : r) ++uses[e];
  std::map<long, int> rank;
  for (auto [id, count] : uses) {
    if (count != 2)
      throw Error(ErrorCode::DuplicateEdgeUse,
                  "edge " + std::to_string(id) + " used " + std::to_string(count) + " times");
    const int k = static_cast<int>(rank.size());
    rank[id] = k;
  }
  std::vector<char> first_taken(rank.size(), 0);
  std::vector<std::vector<Dart>> darts;
  darts.reserve(rotations.size());
  for (const auto& r : rotations) {
    if (r.empty()) throw Error(ErrorCode::EmptyInput, "vertex with empty rotation");
    std::vector<Dart> row;
    row.reserve(r.size());
    for (long e : r) {
      const int k = rank[e];
      row.push_back(2 * k + (first_taken[k] ? 1 : 0));
      first_taken[k] = 1;
    }
    darts.push_back(std::move(row));
  }
  return PlanarMap::from_dart_rotations(darts);
}

std::vector<std::vector<Dart>> faces(const PlanarMap& map) {
  std::vector<std::vector<Dart>> out(map.num_faces());
  for (int f = 0; f < map.num_faces(); ++f) {
    Dart d = map.face_dart(f);
    do {
      out[f].push_back(d);
      d = map.phi(d);
    } while (d != map.face_dart(f));
  }
  return out;
}

int genus(const PlanarMap& map) { return map.genus(); }

void require_sphere(const PlanarMap& map) {
  if (map.genus() != 0)
    throw Error(ErrorCode::PositiveGenus, "genus " + std::to_string(map.genus()));
}

PlanarMap dual(const PlanarMap& map) {
  require_sphere(map);
  // Faces are walked clockwise, so their counterclockwise rotation is phi^-1.
  std::vector<Dart> sigma(map.num_darts());
  for (Dart d = 0; d < map.num_darts(); ++d) sigma[map.phi(d)] = d;
  return PlanarMap::from_sigma(std::move(sigma));
}

bool is_simple(const PlanarMap& map) {
  std::vector<std::pair<int, int>> ends;
  ends.reserve(map.num_edges());
  for (int e = 0; e < map.num_edges(); ++e) {
    int a = map.vertex_of(2 * e), b = map.vertex_of(2 * e + 1);
    if (a == b) return false;
    ends.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(ends.begin(), ends.end());
  return std::adjacent_find(ends.begin(), ends.end()) == ends.end();
}

PlanarMap mirror(const PlanarMap& map) {
  auto rot = map.dart_rotations();
  for (auto& r : rot) std::reverse(r.begin() + 1, r.end());
  return PlanarMap::from_dart_rotations(rot);
}

namespace {

struct Tracer {
  const PlanarMap& map;
  std::vector<int> label;
  std::vector<Dart> order;

  explicit Tracer(const PlanarMap& m) : map(m), label(m.num_darts(), -1), order() {
    order.reserve(m.num_darts());
  }

  // Breadth-first trace from root. Appends to out; when best is given, stops
  // as soon as the trace is known to be larger. Returns <0, 0, >0 like a
  // three-way comparison against best (negative when no best is given).
  int run(Dart root, bool reversed, std::vector<std::int32_t>& out, const std::vector<std::int32_t>* best) {
    std::fill(label.begin(), label.end(), -1);
    order.clear();
    out.clear();
    out.push_back(map.num_vertices());
    out.push_back(map.num_edges());
    int cmp = best ? 0 : -1;
    auto emit = [&](std::int32_t value) {
      const std::size_t pos = out.size();
      out.push_back(value);
      if (cmp == 0) {
        if (value < (*best)[pos]) cmp = -1;
        else if (value > (*best)[pos]) cmp = 1;
      }
    };
    auto lab = [&](Dart d) {
      if (label[d] == -1) {
        label[d] = static_cast<int>(order.size());
        order.push_back(d);
      }
      return label[d];
    };
    lab(root);
    for (std::size_t i = 0; i < order.size(); ++i) {
      const Dart x = order[i];
      emit(lab(alpha(x)));
      emit(lab(reversed ? map.sigma_inv(x) : map.sigma(x)));
      if (cmp > 0) return 1;
    }
    return cmp;
  }
};

struct BestRoot {
  std::vector<std::int32_t> code;
  Dart root = 0;
  bool reversed = false;
};

BestRoot find_best(const PlanarMap& map, bool include_mirror) {
  if (!map.is_connected())
    throw Error(ErrorCode::Disconnected, std::to_string(map.num_components()) + " components");
  Tracer tracer(map);
  BestRoot best;
  std::vector<std::int32_t> scratch;
  bool have = false;
  for (int pass = 0; pass < (include_mirror ? 2 : 1); ++pass) {
    const bool reversed = pass == 1;
    for (Dart r = 0; r < map.num_darts(); ++r) {
      const int cmp = tracer.run(r, reversed, scratch, have ? &best.code : nullptr);
      if (cmp < 0) {
        best.code.swap(scratch);
        best.root = r;
        best.reversed = reversed;
        have = true;
      }
    }
  }
  return best;
}

}  // namespace

CanonicalCode canonical_code(const PlanarMap& map, bool include_mirror) {
  return CanonicalCode{find_best(map, include_mirror).code, include_mirror};
}

bool isomorphic(const PlanarMap& a, const PlanarMap& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_edges() != b.num_edges() ||
      a.num_faces() != b.num_faces())
    return false;
  return canonical_code(a, true) == canonical_code(b, true);
}

PlanarMap canonical_form(const PlanarMap& map, bool include_mirror) {
  const BestRoot best = find_best(map, include_mirror);
  Tracer tracer(map);
  std::vector<std::int32_t> scratch;
  tracer.run(best.root, best.reversed, scratch, nullptr);
  // Edges numbered by first appearance along the trace; the earlier dart of
  // each edge gets the even index.
  std::vector<Dart> perm(map.num_darts(), -1);
  int next_edge = 0;
  for (Dart d : tracer.order) {
    if (perm[d] != -1) continue;
    perm[d] = 2 * next_edge;
    perm[alpha(d)] = 2 * next_edge + 1;
    ++next_edge;
  }
  std::vector<Dart> sigma(map.num_darts());
  for (Dart d = 0; d < map.num_darts(); ++d) {
    const Dart next = best.reversed ? map.sigma_inv(d) : map.sigma(d);
    sigma[perm[d]] = perm[next];
  }
  return PlanarMap::from_sigma(std::move(sigma));
}

PlanarMap relabel(const PlanarMap& map, std::span<const Dart> perm) {
  if (static_cast<int>(perm.size()) != map.num_darts())
    throw Error(ErrorCode::BadParams, "permutation size mismatch");
  for (Dart d = 0; d < map.num_darts(); ++d)
    if (perm[alpha(d)] != alpha(perm[d]))
      throw Error(ErrorCode::BadParams, "permutation does not respect edge pairing");
  std::vector<Dart> sigma(map.num_darts());
  for (Dart d = 0; d < map.num_darts(); ++d) sigma[perm[d]] = perm[map.sigma(d)];
  return PlanarMap::from_sigma(std::move(sigma));
}

}  // namespace luneknot

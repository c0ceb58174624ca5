#include "luneknot/enumerate.hpp"

namespace luneknot {

namespace {

int vertex_root(const std::vector<Dart>& sigma, Dart d) {
  int best = d;
  for (Dart x = sigma[d]; x != d; x = sigma[x]) best = std::min(best, x);
  return best;
}

}  // namespace

PlaneGraph random_plane_graph(int edges, std::mt19937_64& rng, bool allow_loops) {
  if (edges < 1) throw Error(ErrorCode::BadSize, "random graph needs at least one edge");
  // Darts 0 and 1 form a single edge between two vertices.
  std::vector<Dart> sigma = {0, 1};
  auto insert_after = [&](Dart at, Dart fresh) {
    sigma[fresh] = sigma[at];
    sigma[at] = fresh;
  };
  auto pick = [&](int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); };

  for (int e = 1; e < edges; ++e) {
    const Dart a = 2 * e, b = 2 * e + 1;
    sigma.resize(2 * e + 2);
    const int n = 2 * e;
    const int op = pick(3);
    if (op == 0) {
      // Pendant edge to a new vertex.
      insert_after(pick(n), a);
      sigma[b] = b;
      continue;
    }
    // A chord between two corners of one face. The corner following alpha(z)
    // lies in face_of(z) for every z on that face.
    const Dart z1 = pick(n);
    std::vector<Dart> face;
    for (Dart z = z1;;) {
      face.push_back(z);
      z = sigma[alpha(z)];
      if (z == z1) break;
    }
    Dart z2 = face[pick(static_cast<int>(face.size()))];
    if (op == 2) z2 = z1;
    const bool same_vertex = vertex_root(sigma, alpha(z1)) == vertex_root(sigma, alpha(z2));
    if (!allow_loops && same_vertex) {
      insert_after(pick(n), a);
      sigma[b] = b;
      continue;
    }
    if (z1 == z2) {
      insert_after(alpha(z1), a);
      insert_after(a, b);
    } else {
      insert_after(alpha(z1), a);
      insert_after(alpha(z2), b);
    }
  }
  return PlaneGraph(PlanarMap::from_sigma(std::move(sigma)));
}

}  // namespace luneknot

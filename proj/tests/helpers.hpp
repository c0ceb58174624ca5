#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "luneknot/constructions.hpp"
#include "luneknot/enumerate.hpp"
#include "luneknot/io.hpp"

namespace testing {

using namespace luneknot;

inline Universe trefoil() { return braid_closure_shadow({2, {1, 1, 1}}); }

inline PlanarMap loop_map() { return build_map({{0, 0}}); }

inline PlanarMap path3() { return build_map({{0}, {0, 1}, {1}}); }

inline PlaneGraph cube() { return PlaneGraph(dual(venn().map())); }

inline PlaneGraph octahedron() { return PlaneGraph(venn().map()); }

/// K5 with neighbours in increasing order at every vertex.
inline PlanarMap k5() {
  std::vector<std::vector<long>> rot(5);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      if (i != j) rot[i].push_back(std::min(i, j) * 5 + std::max(i, j));
  return build_map(rot);
}

/// Random dart relabelling that keeps edge pairs together.
inline PlanarMap shuffle(const PlanarMap& m, std::mt19937_64& rng) {
  std::vector<int> edges(m.num_edges());
  std::iota(edges.begin(), edges.end(), 0);
  std::shuffle(edges.begin(), edges.end(), rng);
  std::vector<Dart> perm(m.num_darts());
  for (int k = 0; k < m.num_edges(); ++k) {
    const bool flip = rng() & 1;
    perm[2 * k] = 2 * edges[k] + flip;
    perm[2 * k + 1] = 2 * edges[k] + !flip;
  }
  return relabel(m, perm);
}

/// Orientation-preserving automorphisms, found by propagating 0 -> r.
inline int rotation_automorphisms(const PlanarMap& m) {
  int count = 0;
  for (Dart r = 0; r < m.num_darts(); ++r) {
    std::vector<Dart> f(m.num_darts(), -1);
    std::vector<Dart> stack = {0};
    f[0] = r;
    bool ok = true;
    while (!stack.empty() && ok) {
      const Dart d = stack.back();
      stack.pop_back();
      for (auto [src, dst] : {std::pair{m.sigma(d), m.sigma(f[d])}, std::pair{alpha(d), alpha(f[d])}}) {
        if (f[src] == -1) {
          f[src] = dst;
          stack.push_back(src);
        } else if (f[src] != dst) {
          ok = false;
        }
      }
    }
    count += ok;
  }
  return count;
}

/// Rooted planar maps with n edges: 2 * 3^n * (2n)! / (n! (n+2)!).
inline long rooted_map_count(int n) {
  long double x = 2;
  for (int i = 0; i < n; ++i) x *= 3;
  for (int i = 1; i <= 2 * n; ++i) x *= i;
  for (int i = 1; i <= n; ++i) x /= i;
  for (int i = 1; i <= n + 2; ++i) x /= i;
  return static_cast<long>(x + 0.5);
}

}  // namespace testing

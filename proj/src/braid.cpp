#include <numeric>
#include <string>

#include "luneknot/constructions.hpp"

namespace luneknot {

Universe braid_closure_shadow(const BraidWord& word) {
  const int n = word.strands;
  if (n < 2) throw Error(ErrorCode::BadParams, "a braid needs at least two strands");
  if (word.letters.empty()) throw Error(ErrorCode::BadParams, "empty braid word");
  for (int i : word.letters)
    if (i < 1 || i >= n)
      throw Error(ErrorCode::BadParams, "generator " + std::to_string(i) + " outside 1.." + std::to_string(n - 1));

  // events[j]: letters touching position j, top to bottom.
  std::vector<std::vector<int>> events(n + 1);
  for (int t = 0; t < static_cast<int>(word.letters.size()); ++t) {
    events[word.letters[t]].push_back(t);
    events[word.letters[t] + 1].push_back(t);
  }
  for (int j = 1; j <= n; ++j)
    if (events[j].empty())
      throw Error(ErrorCode::DisconnectedClosure, "position " + std::to_string(j) + " is never crossed");

  // Edge (j, k) runs from the k-th event at position j down to the next one,
  // the last wrapping around the closure.
  std::vector<long> base(n + 2, 0);
  for (int j = 1; j <= n; ++j) base[j + 1] = base[j] + static_cast<long>(events[j].size());
  const int letters = static_cast<int>(word.letters.size());
  std::vector<std::vector<long>> rot(letters, std::vector<long>(4));
  for (int j = 1; j <= n; ++j) {
    const int c = static_cast<int>(events[j].size());
    for (int k = 0; k < c; ++k) {
      const int t = events[j][k];
      const bool left = word.letters[t] == j;
      const long below = base[j] + k;
      const long above = base[j] + (k + c - 1) % c;
      // Rotation: above-right, above-left, below-left, below-right.
      if (left) {
        rot[t][1] = above;
        rot[t][2] = below;
      } else {
        rot[t][0] = above;
        rot[t][3] = below;
      }
    }
  }
  PlanarMap m = build_map(rot);
  if (!m.is_connected()) throw Error(ErrorCode::DisconnectedClosure, "closure splits into separate diagrams");
  return as_universe(std::move(m));
}

BraidWord braid_shadow_word(int k, int m, int l) {
  if (k < 1 || m < 0 || m > 5 || l < 0 || l > 1)
    throw Error(ErrorCode::BadParams, "braid_shadow needs k >= 1, 0 <= m <= 5, 0 <= l <= 1");
  BraidWord w{4, {}};
  for (int i = 0; i < 4 * k - 1; ++i) w.letters.insert(w.letters.end(), {1, 2, 3});
  for (int i = 0; i < m; ++i) w.letters.insert(w.letters.end(), {2, 1});
  for (int i = 0; i < l; ++i) w.letters.push_back(2);
  return w;
}

Universe braid_shadow(int k, int m, int l) {
  Universe u = braid_closure_shadow(braid_shadow_word(k, m, l));
  if (u.v() != 3 * (4 * k - 1) + 2 * m + l) throw Error(ErrorCode::ConstructionFailed, "braid_shadow: crossing count");
  return u;
}

Universe polygon_family(int p, int n) {
  if (p < 3 || n < 1) throw Error(ErrorCode::BadParams, "polygon_family needs p >= 3 and n >= 1");
  const int q = p == 3 ? n + 1 : n + 2;
  BraidWord w{q, {}};
  for (int r = 0; r < p; ++r)
    for (int i = 1; i < q; ++i) w.letters.push_back(i);
  Universe u = braid_closure_shadow(w);
  const bool should_be_simple = p > 3 || n >= 2;
  if (u.v() != p * (q - 1) || u.mu() != std::gcd(p, q) || (should_be_simple && !is_lune_free(u)))
    throw Error(ErrorCode::ConstructionFailed, "polygon_family: postcondition");
  return u;
}

}  // namespace luneknot

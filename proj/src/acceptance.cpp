#include "luneknot/acceptance.hpp"

#include <chrono>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>

#include "luneknot/constructions.hpp"

namespace luneknot {

namespace {

struct Bounds {
  int census_v;
  int minimal_v;
  int identity_enum_v;
  std::size_t identity_min_graphs;
  int family_v_max;
  int corpus_simple_edges;
  int corpus_multi_edges;
  int corpus_deg3_edges;
  int random_graphs;
  std::vector<int> no_tight_v;
  int braid_k_max;
  int cross_check_v;
};

Bounds bounds_for(Suite s) {
  if (s == Suite::Full) return {12, 7, 13, 500, 40, 10, 8, 10, 100, {7, 11, 13}, 3, 10};
  return {10, 7, 10, 100, 20, 7, 5, 7, 20, {7, 11}, 1, 8};
}

struct Outcome {
  std::ostringstream detail;
  std::vector<std::string> failures;

  void fail(const std::string& why) { failures.push_back(why); }
  bool passed() const { return failures.empty(); }
  std::string text() const {
    std::string s = detail.str();
    for (const auto& f : failures) s += (s.empty() ? "" : "; ") + f;
    return s;
  }
};

using Check = std::function<void(Outcome&)>;

std::string join(const std::vector<int>& xs) {
  std::string s;
  for (int x : xs) s += (s.empty() ? "" : ",") + std::to_string(x);
  return s;
}

// 1 ------------------------------------------------------------------------
void census_reproduction(const Bounds& b, const EnumConfig& config, Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  EnumFilter f;
  f.mu = 1;
  f.v_min = 1;
  f.v_max = b.census_v;
  std::map<int, int> counts;
  for (const auto& e : enumerate_universes(f, config)) ++counts[e.universe.v()];
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const std::map<int, int> expected_all = {{8, 1}, {9, 1}, {10, 1}, {11, 1}, {12, 3}};
  std::map<int, int> expected;
  for (auto [v, n] : expected_all)
    if (v <= b.census_v) expected[v] = n;
  std::ostringstream got;
  for (int v = 1; v <= b.census_v; ++v) got << (v > 1 ? " " : "") << v << ':' << counts[v];
  o.detail << "knot graphs per v: " << got.str() << " in " << secs << " s";
  for (int v = 1; v <= b.census_v; ++v) {
    const int want = expected.count(v) ? expected.at(v) : 0;
    if (counts[v] != want) o.fail("v=" + std::to_string(v) + ": " + std::to_string(counts[v]) + " != " + std::to_string(want));
  }
  if (secs >= 600) o.fail("runtime " + std::to_string(secs) + " s >= 600 s");
}

// 2 ------------------------------------------------------------------------
void minimality(const Bounds& b, const EnumConfig& config, Outcome& o) {
  EnumFilter f;
  f.v_min = 1;
  f.v_max = b.minimal_v;
  const auto list = enumerate_universes(f, config);
  int up_to_6 = 0, knots_below_8 = 0;
  bool venn_found = false;
  for (const auto& e : list) {
    if (e.universe.v() <= 6) {
      ++up_to_6;
      venn_found = venn_found || isomorphic(e.universe.map(), venn().map());
    }
    if (e.universe.mu() == 1) ++knots_below_8;
  }
  o.detail << "lune-free universes with v<=6: " << up_to_6 << (venn_found ? " (Venn)" : "")
           << "; lune-free knot universes with v<=" << b.minimal_v << ": " << knots_below_8;
  if (up_to_6 != 1 || !venn_found) o.fail("expected the Venn graph alone for v <= 6");
  if (knots_below_8 != 0) o.fail("found a lune-free knot universe below 8 crossings");
}

// 3 ------------------------------------------------------------------------
void triangle_identity(const Bounds& b, const EnumConfig& config, Outcome& o) {
  std::map<CanonicalCode, Universe> pool;
  auto add = [&](const Universe& u) {
    if (is_lune_free(u)) pool.emplace(canonical_code(u.map()), u);
  };
  auto try_add = [&](auto&& make) {
    try {
      add(make());
    } catch (const Error&) {
    }
  };
  EnumFilter f;
  f.v_min = 1;
  f.v_max = b.identity_enum_v;
  const auto enumerated = enumerate_universes(f, config);
  for (const auto& e : enumerated) add(e.universe);

  std::vector<Universe> built = {venn(), g8(), tight_link_graph_12()};
  for (int v = 8; v <= b.family_v_max; ++v) {
    built.push_back(lune_free_knot_graph(v));
    try {
      built.push_back(tight_knot_graph(v));
    } catch (const Error&) {
    }
  }
  for (int p = 3; p <= 8; ++p)
    for (int n = p == 3 ? 2 : 1; n <= 6; ++n) built.push_back(polygon_family(p, n));
  for (int k = 1; k <= 2; ++k)
    for (int m = 0; m <= 5; ++m)
      for (int l = 0; l <= 1; ++l) {
        Universe u = braid_shadow(k, m, l);
        if (is_lune_free(u)) built.push_back(u);
      }
  for (const auto& u : built) add(u);
  for (const auto& u : built)
    if (u.v() <= 30) try_add([&] { return plus_nine(u, RewriteSite::edge(0)); });

  // Local moves at every site of the small enumerated and constructed graphs.
  std::vector<Universe> seeds;
  for (const auto& e : enumerated)
    if (e.universe.v() <= 12) seeds.push_back(e.universe);
  for (const auto& u : built)
    if (u.v() <= 20) seeds.push_back(u);
  for (const auto& u : seeds) {
    const PlanarMap& m = u.map();
    for (Dart d = 0; d < m.num_darts(); ++d) {
      try_add([&] { return double_move(u, RewriteSite::edge(d)); });
      for (Dart g = 0; g < m.num_darts(); ++g)
        if (m.face_of(g) == m.face_of(d)) try_add([&] { return crossing_device(u, RewriteSite::face_edge_pair(d, g)); });
    }
  }

  int bad = 0, min_f3 = 1 << 30;
  for (const auto& [code, u] : pool) {
    const FaceCensus c = face_census(u);
    if (c.lune_free_defect() != 0) ++bad;
    min_f3 = std::min(min_f3, c.f(3));
  }
  o.detail << pool.size() << " distinct lune-free universes (" << enumerated.size() << " enumerated), identity violations "
           << bad << ", min f3 " << min_f3;
  if (pool.size() < b.identity_min_graphs) o.fail("only " + std::to_string(pool.size()) + " graphs checked");
  if (bad != 0) o.fail(std::to_string(bad) + " universes violate the face identity");
  if (min_f3 < 8) o.fail("a lune-free universe has fewer than 8 triangles");
}

// 4 ------------------------------------------------------------------------
void every_order(const Bounds& b, Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<int> failed;
  for (int v = 8; v <= b.family_v_max; ++v) {
    try {
      const Universe u = lune_free_knot_graph(v);
      if (u.v() != v || !is_lune_free(u) || u.mu() != 1) failed.push_back(v);
    } catch (const Error&) {
      failed.push_back(v);
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.detail << "v=8.." << b.family_v_max << " built and verified in " << secs << " s";
  if (!failed.empty()) o.fail("failed for v=" + join(failed));
  if (secs >= 60) o.fail("runtime " + std::to_string(secs) + " s >= 60 s");
}

// 5 ------------------------------------------------------------------------
void tight_constructive(const Bounds& b, Outcome& o) {
  std::vector<int> built, refused, wrong;
  for (int v = 1; v <= b.family_v_max; ++v) {
    const bool realizable = v >= 8 && (v % 6 == 0 || v % 6 == 2 || v % 6 == 3 || v % 6 == 4) && v != 12;
    try {
      const Universe u = tight_knot_graph(v);
      const bool ok = u.v() == v && is_lune_free(u) && is_tight(u) && u.mu() == 1;
      (ok && realizable ? built : wrong).push_back(v);
    } catch (const Error& e) {
      (e.code() == ErrorCode::Unrealizable && !realizable ? refused : wrong).push_back(v);
    }
  }
  o.detail << built.size() << " built, " << refused.size() << " refused as unrealizable";
  if (!wrong.empty()) o.fail("wrong outcome for v=" + join(wrong));
}

// 6 ------------------------------------------------------------------------
void tight_impossibility(const Bounds& b, const EnumConfig& config, Outcome& o) {
  std::ostringstream d;
  for (int v : b.no_tight_v) {
    EnumFilter f = EnumFilter::exactly(v);
    f.tight = true;
    const auto n = enumerate_universes(f, config).size();
    d << "tight links v=" << v << ": " << n << "; ";
    if (n != 0) o.fail("found " + std::to_string(n) + " tight lune-free universes at v=" + std::to_string(v));
  }
  EnumFilter f12 = EnumFilter::exactly(12);
  f12.tight = true;
  const auto list12 = enumerate_universes(f12, config);
  int knots = 0;
  bool found = false;
  std::vector<int> mus;
  const Universe target = tight_link_graph_12();
  for (const auto& e : list12) {
    mus.push_back(e.universe.mu());
    if (e.universe.mu() == 1) ++knots;
    if (isomorphic(e.universe.map(), target.map())) found = true;
  }
  d << "v=12: " << list12.size() << " tight (mu " << join(mus) << "), " << knots << " knots, 3-component example "
    << (found ? "found" : "missing");
  EnumFilter f6 = EnumFilter::exactly(6);
  f6.tight = true;
  const auto list6 = enumerate_universes(f6, config);
  d << "; v=6 exception: " << list6.size() << " tight lune-free link universe"
    << (list6.size() == 1 && isomorphic(list6[0].universe.map(), venn().map()) ? " (octahedron, mu=3)" : "");
  o.detail << d.str();
  if (knots != 0) o.fail("tight lune-free knot universe at v=12");
  if (!found || target.mu() != 3 || !is_tight(target)) o.fail("12-crossing tight link example not matched");
}

// 7, 8 ---------------------------------------------------------------------
std::vector<PlaneGraph> plane_corpus(const Bounds& b, const EnumConfig& config, bool simple_only) {
  std::vector<PlaneGraph> out = enumerate_plane_graphs(b.corpus_simple_edges, 1, 1, true, config);
  if (simple_only) return out;
  for (auto& g : enumerate_plane_graphs(b.corpus_multi_edges, 1, 1, false, config)) out.push_back(std::move(g));
  for (auto& g : enumerate_plane_graphs(b.corpus_deg3_edges, 3, 3, false, config)) out.push_back(std::move(g));
  std::mt19937_64 rng(20240611);
  for (int i = 0; i < b.random_graphs; ++i)
    out.push_back(random_plane_graph(2 + static_cast<int>(rng() % 29), rng));
  return out;
}

void angle_oracle(const Bounds& b, const EnumConfig& config, Outcome& o) {
  const auto corpus = plane_corpus(b, config, false);
  int checked = 0, bad = 0;
  for (const auto& g : corpus) {
    if (g.e() < 2) continue;
    ++checked;
    if (angle_components(g) != medial(g).mu()) ++bad;
  }
  o.detail << checked << " plane graphs (simple <= " << b.corpus_simple_edges << " edges, multigraphs <= "
           << b.corpus_multi_edges << ", min degrees 3 <= " << b.corpus_deg3_edges << ", " << b.random_graphs
           << " random), mismatches " << bad;
  if (bad != 0) o.fail(std::to_string(bad) + " graphs where angle components differ from strand count");
}

void special_graphs(const Bounds& b, const EnumConfig& config, Outcome& o) {
  const auto corpus = plane_corpus(b, config, true);
  int checked = 0, special = 0, medial_bad = 0, classify_bad = 0;
  std::map<std::string, int> tags;
  for (const auto& g : corpus) {
    if (g.e() < 2) continue;
    ++checked;
    const bool s = is_special(g);
    const Universe d = medial(g);
    const bool tight_lf = is_lune_free(d) && is_tight(d);
    const SpecialClass c = classify_special(g);
    if (s) {
      ++special;
      ++tags[to_string(c.tag)];
    }
    if (s != tight_lf) ++medial_bad;
    if (s != (c.tag != SpecialTag::Other)) ++classify_bad;
  }
  o.detail << checked << " simple plane graphs with <= " << b.corpus_simple_edges << " edges, " << special << " special (";
  bool first = true;
  for (auto [t, n] : tags) {
    o.detail << (first ? "" : ", ") << t << ' ' << n;
    first = false;
  }
  o.detail << "), medial mismatches " << medial_bad << ", classifier mismatches " << classify_bad;
  if (medial_bad) o.fail(std::to_string(medial_bad) + " graphs where special != medial tight and lune-free");
  if (classify_bad) o.fail(std::to_string(classify_bad) + " graphs where special != classified");
}

// 9 ------------------------------------------------------------------------
void laddering(Outcome& o) {
  std::ostringstream d;
  for (int base : {9, 15, 18, 24}) {
    PlaneGraph g = ladder_base(base);
    d << base;
    for (int step = 1; step <= 3; ++step) {
      PlaneGraph c(canonical_form(g.map()));
      Dart site = 0;
      while (c.map().degree(c.map().vertex_of(site)) != 3) ++site;
      g = ladder(c, RewriteSite::vertex(site));
      const Universe m = medial(g);
      const bool ok = g.e() == base + 12 * step && is_special(g) && is_lune_free(m) && is_tight(m) && m.mu() == 1;
      d << "->" << g.e();
      if (!ok) o.fail("base " + std::to_string(base) + " step " + std::to_string(step));
    }
    d << ' ';
  }
  o.detail << "edges " << d.str() << "all special with tight knot medials";
}

// 10 -----------------------------------------------------------------------
void polygon_families(Outcome& o) {
  std::vector<int> mu3;
  for (int n = 2; n <= 12; ++n) {
    const int mu = polygon_family(3, n).mu();
    const int want = n % 3 == 2 ? 3 : 1;
    if (mu == 3) mu3.push_back(n);
    if (mu != want) o.fail("triangle family n=" + std::to_string(n) + ": mu=" + std::to_string(mu));
  }
  for (int n : {1, 3, 5, 7}) {
    const Universe u = polygon_family(4, n);
    if (u.mu() != 1 || u.v() != 4 * n + 4) o.fail("square family n=" + std::to_string(n));
  }
  o.detail << "triangle family mu=3 exactly at n=" << join(mu3) << "; square family n=1,3,5,7 are knots on 4n+4 crossings";
}

// 11 -----------------------------------------------------------------------
void k_lunes(Outcome& o) {
  int checked = 0;
  for (int k = 0; k <= 6; ++k) {
    const int v0 = k % 2 == 0 ? k + 8 : k + 9;
    for (int v : {v0, v0 + 1, v0 + 5}) {
      ++checked;
      try {
        const Universe u = k_lune_graph(k, v);
        if (u.v() != v || u.mu() != 1 || lune_count(u) != k)
          o.fail("k=" + std::to_string(k) + " v=" + std::to_string(v));
      } catch (const Error& e) {
        o.fail(e.what());
      }
    }
  }
  o.detail << checked << " (k, v) pairs with exactly k lunes and one component";
}

// 12 -----------------------------------------------------------------------
void braid_remark(const Bounds& b, Outcome& o) {
  std::vector<std::string> knot_wrong, tight_wrong;
  int excluded_but_knot = 0;
  for (int k = 1; k <= b.braid_k_max; ++k)
    for (int m = 0; m <= 5; ++m)
      for (int l = 0; l <= 1; ++l) {
        const Universe u = braid_shadow(k, m, l);
        const bool excluded = m == 2 || m == 5 || (m % 3 == 1 && l % 3 == 1);
        const bool knot = u.mu() == 1;
        const bool tight = is_lune_free(u) && is_tight(u);
        const std::string tag = "(" + std::to_string(k) + "," + std::to_string(m) + "," + std::to_string(l) +
                                ") mu=" + std::to_string(u.mu());
        if (knot == excluded) knot_wrong.push_back(tag);
        if (knot && excluded) ++excluded_but_knot;
        if (tight != (m == 0 && l == 0)) tight_wrong.push_back(tag);
      }
  o.detail << "k=1.." << b.braid_k_max << ": tight exactly at m=l=0 " << (tight_wrong.empty() ? "holds" : "fails");
  if (!tight_wrong.empty()) o.fail("tightness differs at " + std::to_string(tight_wrong.size()) + " words");
  if (!knot_wrong.empty()) {
    std::string list;
    for (const auto& s : knot_wrong) list += (list.empty() ? "" : " ") + s;
    o.fail("knot pattern differs at " + list +
           "; excluded words that are knots: " + std::to_string(excluded_but_knot) +
           "; appending one generator changes the closure "
           "permutation by a transposition, so S(k,m,0) and S(k,m,1) never both have one component");
  }
}

// 13 -----------------------------------------------------------------------
void cross_check(const Bounds& b, const EnumConfig& config, Outcome& o) {
  const auto t0 = std::chrono::steady_clock::now();
  std::ostringstream d;
  for (int v = 1; v <= b.cross_check_v; ++v) {
    const CrossCheckReport r = cross_check_report(v, config);
    d << (v > 1 ? " " : "") << v << ':' << r.pipeline_a.size() << '/' << r.pipeline_b.size();
    if (!r.agree())
      o.fail("v=" + std::to_string(v) + ": " + std::to_string(r.only_a.size()) + " only direct, " +
             std::to_string(r.only_b.size()) + " only medial");
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  o.detail << "direct/medial counts " << d.str() << " in " << secs << " s";
  if (secs >= 300) o.fail("runtime " + std::to_string(secs) + " s >= 300 s");
}

}  // namespace

std::vector<CriterionResult> run_acceptance(Suite suite, const EnumConfig& config,
                                            const std::function<void(const CriterionResult&)>& on_result) {
  const Bounds b = bounds_for(suite);
  const std::vector<std::pair<std::string, Check>> checks = {
      {"census of lune-free knot graphs", [&](Outcome& o) { census_reproduction(b, config, o); }},
      {"minimal lune-free link and knot universes", [&](Outcome& o) { minimality(b, config, o); }},
      {"triangle count identity", [&](Outcome& o) { triangle_identity(b, config, o); }},
      {"lune-free knot graphs of every order", [&](Outcome& o) { every_order(b, o); }},
      {"tight knot graphs: constructive half", [&](Outcome& o) { tight_constructive(b, o); }},
      {"tight graphs: impossibility half", [&](Outcome& o) { tight_impossibility(b, config, o); }},
      {"angle components equal strand count", [&](Outcome& o) { angle_oracle(b, config, o); }},
      {"special graphs and their classification", [&](Outcome& o) { special_graphs(b, config, o); }},
      {"laddering the cubic bases", [&](Outcome& o) { laddering(o); }},
      {"polygon family component counts", [&](Outcome& o) { polygon_families(o); }},
      {"knot graphs with exactly k lunes", [&](Outcome& o) { k_lunes(o); }},
      {"braid closure shadows", [&](Outcome& o) { braid_remark(b, o); }},
      {"direct and medial enumeration agree", [&](Outcome& o) { cross_check(b, config, o); }},
  };
  std::vector<CriterionResult> results;
  for (std::size_t i = 0; i < checks.size(); ++i) {
    CriterionResult r;
    r.id = static_cast<int>(i) + 1;
    r.name = checks[i].first;
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      checks[i].second(o);
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    r.passed = o.passed();
    r.detail = o.text();
    if (on_result) on_result(r);
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CriterionResult& r) {
  char head[160];
  std::snprintf(head, sizeof head, "%s [%2d] %s (%.2f s): ", r.passed ? "PASS" : "FAIL", r.id, r.name.c_str(), r.seconds);
  return head + r.detail;
}

}  // namespace luneknot

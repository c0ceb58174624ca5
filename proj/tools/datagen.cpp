// Regenerates the graph tables under data/ from exhaustive searches.
//
//   luneknot_datagen OUT_DIR
//
// venn.uni and g8.uni are transcribed by hand and are not touched.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>

#include "luneknot/enumerate.hpp"
#include "luneknot/io.hpp"

using namespace luneknot;

namespace {

void save(const std::filesystem::path& dir, const std::string& name, const std::string& comment, const PlanarMap& m) {
  std::ofstream out(dir / name, std::ios::binary);
  out << "# " << comment << '\n' << write_uni(m);
  std::cout << "wrote " << name << " (" << comment << ")\n";
}

std::string census(const PlanarMap& m) { return face_census(m).to_string(); }

}  // namespace

int main(int argc, char** argv) {
  if (argc != 2) {
    std::cerr << "usage: luneknot_datagen OUT_DIR\n";
    return 2;
  }
  const std::filesystem::path dir = argv[1];
  EnumConfig config = EnumConfig::from_env();

  for (int v = 9; v <= 11; ++v) {
    EnumFilter f = EnumFilter::exactly(v);
    f.mu = 1;
    const auto list = enumerate_universes(f, config);
    if (list.size() != 1) {
      std::cerr << "expected one knot graph at v=" << v << ", found " << list.size() << '\n';
      return 1;
    }
    save(dir, "knot" + std::to_string(v) + ".uni",
         "Lune-free knot graph, " + std::to_string(v) + " crossings, faces " + census(list[0].universe.map()),
         list[0].universe.map());
  }

  {
    EnumFilter f = EnumFilter::exactly(12);
    f.mu = 1;
    auto list = enumerate_universes(f, config);
    // Graphs with only 3- and 4-faces first, each group in code order.
    std::stable_partition(list.begin(), list.end(),
                          [](const EnumeratedUniverse& e) { return face_census(e.universe).counts.rbegin()->first <= 4; });
    for (std::size_t i = 0; i < list.size(); ++i)
      save(dir, std::string("knot12") + static_cast<char>('a' + i) + ".uni",
           "Lune-free knot graph, 12 crossings, faces " + census(list[i].universe.map()), list[i].universe.map());
  }

  {
    EnumFilter f = EnumFilter::exactly(12);
    f.tight = true;
    const PlanarMap w6 = medial(wheel(6)).map();
    for (const auto& e : enumerate_universes(f, config)) {
      std::cout << "tight v=12: mu=" << e.universe.mu() << " faces " << census(e.universe.map())
                << (isomorphic(e.universe.map(), w6) ? " (medial of the 6-wheel)" : "") << '\n';
      if (isomorphic(e.universe.map(), w6))
        save(dir, "link12.uni", "Tight lune-free link shadow, 12 crossings, 3 components, faces " + census(w6),
             e.universe.map());
    }
  }

  // Cubic sphere graphs whose medial is a knot graph.
  for (int e : {9, 15, 18, 24}) {
    const auto t0 = std::chrono::steady_clock::now();
    MapSearch spec;
    spec.darts = 2 * e;
    spec.min_degree = spec.max_degree = 3;
    spec.min_face_degree = 3;
    spec.simple = true;
    auto found = search_maps(spec, [](const PlanarMap& m) { return medial(PlaneGraph(m)).mu() == 1; }, config);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::cout << "cubic e=" << e << ": " << found.size() << " candidates in " << secs << " s\n";
    if (found.empty()) return 1;
    std::vector<std::pair<CanonicalCode, PlanarMap>> ranked;
    for (auto& m : found) ranked.emplace_back(canonical_code(m), canonical_form(m));
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    const PlanarMap& g = ranked.front().second;
    save(dir, "special" + std::to_string(e) + ".uni",
         "Cubic sphere graph with " + std::to_string(e) + " edges whose medial is a tight knot graph; faces " + census(g),
         g);
  }
  return 0;
}

#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "helpers.hpp"

using namespace luneknot;
using namespace testing;

namespace {

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string error_text(const std::string& text) {
  try {
    parse_uni(text);
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("shipped data files round-trip") {
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(data_dir())) {
    if (entry.path().extension() != ".uni") continue;
    ++files;
    const PlanarMap m = read_uni_file(entry.path());
    const std::string normalized = write_uni(m);
    CHECK(write_uni(parse_uni(normalized)) == normalized);
    CHECK(parse_uni(normalized) == m);
    CHECK(normalized.find('\r') == std::string::npos);
    CHECK(normalized.rfind("map v=" + std::to_string(m.num_vertices()) + " e=" + std::to_string(m.num_edges()) + "\n", 0) == 0);
  }
  CHECK(files >= 13);
  const Universe v = as_universe(read_uni_file(data_dir() / "venn.uni"));
  CHECK(v.v() == 6);
  CHECK(v.mu() == 3);
}

TEST_CASE("census graphs round-trip") {
  EnumFilter f;
  f.v_min = 1;
  f.v_max = 12;
  for (const auto& e : enumerate_universes(f)) {
    const std::string text = write_uni(e.universe.map());
    const PlanarMap back = parse_uni(text);
    CHECK(write_uni(back) == text);
    CHECK(back.rotations() == e.universe.map().rotations());
  }
}

TEST_CASE("comments, blank lines and CRLF are accepted") {
  const PlanarMap m = parse_uni("# trefoil\r\nmap v=3 e=6\r\n\r\n0: 0 1 2 3  # first\r\n1: 2 3 4 5\r\n2: 4 5 0 1\r\n");
  CHECK(m.num_vertices() == 3);
  CHECK(m.num_edges() == 6);
}

TEST_CASE("syntax errors carry a position") {
  CHECK(error_text("map v=1 e=1\n0: 0 x\n").find("line 2") != std::string::npos);
  CHECK(error_text("map v=1 e=1\n0: 0 x\n").find("col 6") != std::string::npos);
  CHECK(error_text("graph v=1 e=1\n").find("line 1") != std::string::npos);
  CHECK(error_text("map v=2 e=1\n0: 0 0\n").find("SyntaxError") != std::string::npos);
  CHECK(error_text("map v=1 e=1\n0: 0 0 0\n").find("EdgeCountError") != std::string::npos);
  CHECK(error_text("map v=2 e=2\n0: 0 1\n1: 0 1\n5: 2\n").find("SyntaxError") != std::string::npos);
  CHECK(error_text("map v=1 e=2\n0: 0 0\n").find("EdgeCountError") != std::string::npos);
}

TEST_CASE("planar code") {
  const auto venn_code = export_planar_code(venn().map());
  CHECK(venn_code.size() == 1 + 6 * 5);
  CHECK(venn_code[0] == 6);
  for (int v = 0; v < 6; ++v) CHECK(venn_code[1 + 5 * v + 4] == 0);
  CHECK_THROWS_AS(export_planar_code(trefoil().map()), Error);
  for (const PlanarMap& m : {g8().map(), wheel(7).map(), cube().map()}) {
    std::size_t expected = 1;
    for (int v = 0; v < m.num_vertices(); ++v) expected += m.degree(v) + 1;
    CHECK(export_planar_code(m).size() == expected);
    const auto file = planar_code_file(m);
    CHECK(file.size() == expected + 15);
    CHECK(std::string(file.begin(), file.begin() + 15) == ">>planar_code<<");
  }
}

TEST_CASE("Tutte embedding of 3-connected graphs") {
  const PlanarMap o = venn().map();
  const Embedding e = tutte_embed(o, 0);
  CHECK(e.max_residual < 1e-9);
  CHECK_FALSE(has_crossing_edges(o, e));
  CHECK_THROWS_AS(tutte_embed(path3(), 0), Error);
  CHECK_FALSE(is_three_connected(path3()));

  EnumFilter f;
  f.v_min = 1;
  f.v_max = 12;
  int drawn = 0;
  for (const auto& u : enumerate_universes(f)) {
    const PlanarMap& m = u.universe.map();
    if (!is_three_connected(m)) continue;
    ++drawn;
    for (int face = 0; face < m.num_faces(); ++face) {
      const Embedding emb = tutte_embed(m, face);
      CHECK(emb.max_residual < 1e-9);
      CHECK_FALSE(has_crossing_edges(m, emb));
      for (const auto& p : emb.xy) CHECK((std::isfinite(p[0]) && std::isfinite(p[1])));
    }
  }
  CHECK(drawn > 5);
}

TEST_CASE("DOT and SVG exports") {
  const std::string svg = export_svg(g8().map());
  std::size_t circles = 0;
  for (std::size_t p = svg.find("<circle"); p != std::string::npos; p = svg.find("<circle", p + 1)) ++circles;
  CHECK(circles == 8);
  CHECK(svg.find("</svg>") != std::string::npos);
  const std::string dot = export_dot(trefoil().map());
  CHECK(dot.find("graph") != std::string::npos);
  CHECK(!export_svg(trefoil().map()).empty());
}

TEST_CASE("file round-trip through disk") {
  const auto path = std::filesystem::temp_directory_path() / "luneknot_roundtrip.uni";
  write_uni_file(path, g8().map());
  CHECK(slurp(path) == write_uni(g8().map()));
  CHECK(read_uni_file(path) == g8().map());
  std::filesystem::remove(path);
}

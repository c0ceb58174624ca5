// luneknot: command-line front end.
//
// Exit status: 0 success, 1 domain error (reason on stderr), 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "luneknot/acceptance.hpp"
#include "luneknot/constructions.hpp"
#include "luneknot/io.hpp"

using namespace luneknot;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

int to_int(const std::string& s) {
  try {
    std::size_t used = 0;
    const int x = std::stoi(s, &used);
    if (used == s.size()) return x;
  } catch (const std::exception&) {
  }
  throw UsageError("expected an integer, got '" + s + "'");
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(ErrorCode::DataFile, "cannot write " + out_path);
  f << text;
}

void analyze(const std::string& file) {
  const PlanarMap m = read_uni_file(file);
  std::cout << "v=" << m.num_vertices() << " e=" << m.num_edges() << " f=" << m.num_faces() << '\n';
  std::cout << "census=" << face_census(m).to_string() << '\n';
  bool four_regular = m.is_connected() && m.genus() == 0;
  for (int v = 0; v < m.num_vertices() && four_regular; ++v) four_regular = m.degree(v) == 4;
  if (!four_regular) {
    const PlaneGraph g(m);
    std::cout << "universe=false simple=" << yes_no(is_simple(m)) << " special=" << yes_no(is_special(g))
              << " class=" << to_string(classify_special(g).tag) << '\n';
    if (g.e() >= 2) std::cout << "medial_mu=" << medial(g).mu() << '\n';
    return;
  }
  const Universe u = as_universe(m);
  const bool lf = is_lune_free(u);
  std::cout << "mu=" << u.mu() << " tight=" << (lf ? yes_no(is_tight(u)) : "n/a") << " lune_free=" << yes_no(lf) << '\n';
  std::cout << "lunes=" << lune_count(u) << " simple=" << yes_no(is_simple(m))
            << " admissible=" << (lf ? yes_no(is_admissible(u)) : "n/a") << " knot=" << yes_no(u.mu() == 1) << '\n';
}

PlanarMap construct(const std::vector<std::string>& args) {
  if (args.empty()) throw UsageError("construct needs a name");
  const std::string& name = args[0];
  auto want = [&](std::size_t n) {
    if (args.size() != n + 1)
      throw UsageError("construct " + name + " takes " + std::to_string(n) + " integer argument(s)");
  };
  auto arg = [&](std::size_t i) { return to_int(args[i]); };
  if (name == "venn") return want(0), venn().map();
  if (name == "g8") return want(0), g8().map();
  if (name == "family") return want(2), polygon_family(arg(1), arg(2)).map();
  if (name == "tight") return want(1), tight_knot_graph(arg(1)).map();
  if (name == "lunefree") return want(1), lune_free_knot_graph(arg(1)).map();
  if (name == "klune") return want(2), k_lune_graph(arg(1), arg(2)).map();
  if (name == "braid") return want(3), braid_shadow(arg(1), arg(2), arg(3)).map();
  if (name == "wheel") return want(1), wheel(arg(1)).map();
  throw UsageError("unknown construction '" + name + "' (venn | g8 | family | tight | lunefree | klune | braid | wheel)");
}

void enumerate_cmd(int v, bool simple, std::optional<int> mu, bool tight, bool census, const EnumConfig& config) {
  EnumFilter f;
  f.require_simple = simple;
  f.mu = mu;
  if (tight) f.tight = true;
  f.v_min = census ? 1 : v;
  f.v_max = v;
  const auto list = enumerate_universes(f, config);
  if (census) {
    std::map<int, int> counts;
    for (const auto& e : list) ++counts[e.universe.v()];
    std::cout << "v count\n";
    for (int i = 1; i <= v; ++i) std::cout << i << ' ' << counts[i] << '\n';
    return;
  }
  int i = 0;
  for (const auto& e : list) {
    std::cout << "# graph " << ++i << ": mu=" << e.universe.mu() << " faces " << face_census(e.universe).to_string()
              << '\n'
              << write_uni(e.universe.map()) << '\n';
  }
  std::cout << "# " << list.size() << " graphs\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Knot and link shadows on the sphere: analysis, constructions, enumeration"};
  app.require_subcommand(1);
  EnumConfig config = EnumConfig::from_env();
  std::string out_path;

  std::string analyze_file;
  auto* analyze_cmd = app.add_subcommand("analyze", "Print counts, face census and verdicts for a .uni file");
  analyze_cmd->add_option("file", analyze_file)->required();

  std::vector<std::string> construct_args;
  auto* construct_cmd = app.add_subcommand("construct", "Build a named graph and write it as UniText");
  construct_cmd->add_option("name_and_args", construct_args, "venn | g8 | family P N | tight V | lunefree V | "
                                                             "klune K V | braid K M L | wheel N")
      ->required();
  construct_cmd->add_option("-o,--output", out_path);

  std::string medial_file;
  bool inverse = false;
  auto* medial_cmd = app.add_subcommand("medial", "Medial graph, or with --inverse the checkerboard inverse");
  medial_cmd->add_option("file", medial_file)->required();
  medial_cmd->add_flag("--inverse", inverse);
  medial_cmd->add_option("-o,--output", out_path);

  int enum_v = 0;
  bool simple = false, tight = false, census = false;
  std::optional<int> mu;
  auto* enum_cmd = app.add_subcommand("enumerate", "List universes on v crossings up to sphere isomorphism");
  enum_cmd->add_option("--v", enum_v, "crossing count (upper bound with --census)")->required()->check(CLI::Range(1, 64));
  enum_cmd->add_flag("--simple", simple, "lune-free only");
  enum_cmd->add_option("--mu", mu, "number of components");
  enum_cmd->add_flag("--tight", tight, "tight lune-free only");
  enum_cmd->add_flag("--census", census, "print counts for every v up to --v");
  enum_cmd->add_option("--threads", config.threads)->check(CLI::Range(1, 256));

  std::string suite = "paper";
  auto* verify_cmd = app.add_subcommand("verify", "Run the acceptance checks");
  verify_cmd->add_option("--suite", suite)->check(CLI::IsMember({"paper", "quick"}));
  verify_cmd->add_option("--threads", config.threads)->check(CLI::Range(1, 256));

  std::string export_file, format;
  auto* export_cmd = app.add_subcommand("export", "Convert a .uni file");
  export_cmd->add_option("file", export_file)->required();
  export_cmd->add_option("--format", format)->required()->check(CLI::IsMember({"uni", "planarcode", "dot", "svg"}));
  export_cmd->add_option("-o,--output", out_path);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*analyze_cmd) {
      analyze(analyze_file);
    } else if (*construct_cmd) {
      emit(write_uni(construct(construct_args)), out_path);
    } else if (*medial_cmd) {
      const PlanarMap m = read_uni_file(medial_file);
      emit(write_uni(inverse ? premedial(as_universe(m)).map() : medial(PlaneGraph(m)).map()), out_path);
    } else if (*enum_cmd) {
      enumerate_cmd(enum_v, simple || tight, mu, tight, census, config);
    } else if (*verify_cmd) {
      const auto results = run_acceptance(suite == "paper" ? Suite::Full : Suite::Quick, config,
                                          [](const CriterionResult& r) { std::cout << format_result(r) << std::endl; });
      int failed = 0;
      for (const auto& r : results) failed += !r.passed;
      std::cout << results.size() - failed << '/' << results.size() << " criteria passed\n";
      return failed ? 1 : 0;
    } else if (*export_cmd) {
      const PlanarMap m = read_uni_file(export_file);
      if (format == "uni") emit(write_uni(m), out_path);
      else if (format == "dot") emit(export_dot(m), out_path);
      else if (format == "svg") emit(export_svg(m), out_path);
      else {
        const auto bytes = planar_code_file(m);
        emit(std::string(bytes.begin(), bytes.end()), out_path);
      }
    }
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}

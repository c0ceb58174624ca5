#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "luneknot/io.hpp"

namespace luneknot {

namespace {

struct Token {
  std::string_view text;
  int col;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return out;
}

[[noreturn]] void syntax(int line, int col, const std::string& what) {
  throw Error(ErrorCode::SyntaxError, "line " + std::to_string(line) + ", col " + std::to_string(col) + ": " + what);
}

long parse_long(std::string_view s, int line, int col) {
  long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size()) syntax(line, col, "expected an integer, got '" + std::string(s) + "'");
  return value;
}

long parse_field(const Token& t, std::string_view key, int line) {
  if (t.text.substr(0, key.size()) != key) syntax(line, t.col, "expected '" + std::string(key) + "<n>'");
  return parse_long(t.text.substr(key.size()), line, t.col + static_cast<int>(key.size()));
}

}  // namespace

PlanarMap parse_uni(std::string_view text) {
  long v_decl = -1, e_decl = -1;
  std::map<long, std::vector<long>> rows;
  int line_no = 0;
  int last_line = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    last_line = line_no;
    if (v_decl < 0) {
      if (tokens[0].text != "map") syntax(line_no, tokens[0].col, "expected header 'map v=<V> e=<E>'");
      if (tokens.size() != 3) syntax(line_no, tokens.size() > 3 ? tokens[3].col : static_cast<int>(line.size()) + 1,
                                     "header takes exactly 'v=' and 'e=' fields");
      v_decl = parse_field(tokens[1], "v=", line_no);
      e_decl = parse_field(tokens[2], "e=", line_no);
      if (v_decl < 1) syntax(line_no, tokens[1].col, "vertex count must be positive");
      if (e_decl < 0) syntax(line_no, tokens[2].col, "edge count must be non-negative");
      continue;
    }
    const Token& head = tokens[0];
    if (head.text.size() < 2 || head.text.back() != ':') syntax(line_no, head.col, "expected '<vertex>:'");
    const long vertex = parse_long(head.text.substr(0, head.text.size() - 1), line_no, head.col);
    if (vertex < 0 || vertex >= v_decl)
      syntax(line_no, head.col, "vertex " + std::to_string(vertex) + " outside 0.." + std::to_string(v_decl - 1));
    if (rows.count(vertex)) syntax(line_no, head.col, "vertex " + std::to_string(vertex) + " listed twice");
    if (tokens.size() < 2) syntax(line_no, static_cast<int>(line.size()) + 1, "vertex with no edges");
    std::vector<long> row;
    for (std::size_t i = 1; i < tokens.size(); ++i) row.push_back(parse_long(tokens[i].text, line_no, tokens[i].col));
    rows.emplace(vertex, std::move(row));
  }
  if (v_decl < 0) throw Error(ErrorCode::EmptyInput, "no header");
  if (static_cast<long>(rows.size()) != v_decl)
    syntax(last_line + 1, 1, "header declares " + std::to_string(v_decl) + " vertices, found " + std::to_string(rows.size()));
  std::map<long, int> uses;
  for (const auto& [v, row] : rows)
    for (long e : row) ++uses[e];
  for (auto [e, n] : uses)
    if (n != 2) throw Error(ErrorCode::EdgeCountError, "edge " + std::to_string(e) + " used " + std::to_string(n) + " times");
  if (static_cast<long>(uses.size()) != e_decl)
    throw Error(ErrorCode::EdgeCountError,
                "header declares " + std::to_string(e_decl) + " edges, found " + std::to_string(uses.size()));
  std::vector<std::vector<long>> rot;
  rot.reserve(rows.size());
  for (auto& [v, row] : rows) rot.push_back(std::move(row));
  return build_map(rot);
}

std::string write_uni(const PlanarMap& map) {
  std::ostringstream os;
  os << "map v=" << map.num_vertices() << " e=" << map.num_edges() << '\n';
  const auto rot = map.rotations();
  for (int v = 0; v < map.num_vertices(); ++v) {
    os << v << ':';
    for (int e : rot[v]) os << ' ' << e;
    os << '\n';
  }
  return os.str();
}

PlanarMap read_uni_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::DataFile, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_uni(buf.str());
}

void write_uni_file(const std::filesystem::path& path, const PlanarMap& map) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::DataFile, "cannot write " + path.string());
  out << write_uni(map);
}

}  // namespace luneknot

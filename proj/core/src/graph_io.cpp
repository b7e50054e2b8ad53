#include "glskit/graph_io.hpp"

#include <cctype>
#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace gls {

namespace {

bool is_blank_or_comment(const std::string& line) {
  for (char c : line) {
    if (c == '#') return true;
    if (!std::isspace(static_cast<unsigned char>(c))) return false;
  }
  return true;  // blank
}

[[noreturn]] void fail(std::size_t line_no, const std::string& what) {
  throw GraphParseError("line " + std::to_string(line_no) + ": " + what);
}

std::int64_t parse_int(const std::string& token, std::size_t line_no) {
  std::size_t pos = 0;
  std::int64_t value = 0;
  try {
    value = std::stoll(token, &pos);
  } catch (const std::exception&) {
    fail(line_no, "expected an integer, got '" + token + "'");
  }
  if (pos != token.size()) {
    fail(line_no, "trailing characters in integer '" + token + "'");
  }
  return value;
}

}  // namespace

Graph parse_graph(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_n = false;
  std::size_t n = 0;
  std::vector<std::pair<Vertex, Vertex>> edges;

  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (is_blank_or_comment(line)) continue;

    std::istringstream tokens(line);
    std::vector<std::string> parts;
    for (std::string tok; tokens >> tok;) parts.push_back(tok);

    if (!have_n) {
      if (parts.size() != 1) fail(line_no, "expected a single vertex count");
      std::int64_t value = parse_int(parts[0], line_no);
      if (value < 0) fail(line_no, "vertex count must be nonnegative");
      if (value > std::numeric_limits<Vertex>::max()) {
        fail(line_no, "vertex count too large");
      }
      n = static_cast<std::size_t>(value);
      have_n = true;
      continue;
    }

    if (parts.size() != 2) fail(line_no, "expected 'u v'");
    std::int64_t u = parse_int(parts[0], line_no);
    std::int64_t v = parse_int(parts[1], line_no);
    if (u < 0 || v < 0 || u >= static_cast<std::int64_t>(n) ||
        v >= static_cast<std::int64_t>(n)) {
      fail(line_no, "endpoint out of range [0, " + std::to_string(n) + ")");
    }
    if (u == v) fail(line_no, "self-loop at vertex " + std::to_string(u));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }

  if (!have_n) throw GraphParseError("missing vertex count");
  return Graph::from_edge_list(n, edges);
}

Graph parse_graph(const std::string& text) {
  std::istringstream in(text);
  return parse_graph(in);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GraphParseError("cannot open '" + path + "'");
  return parse_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << '\n';
  for (const auto& [u, v] : g.edges()) {
    out << u << ' ' << v << '\n';
  }
}

std::string graph_to_string(const Graph& g) {
  std::ostringstream out;
  write_graph(out, g);
  return out.str();
}

void save_graph_file(const std::string& path, const Graph& g) {
  std::ofstream out(path);
  if (!out) throw GraphParseError("cannot open '" + path + "' for writing");
  write_graph(out, g);
}

}  // namespace gls

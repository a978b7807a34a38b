#include "symtree/graph_io.h"

#include <charconv>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <unordered_map>

#include "symtree/errors.h"

namespace symtree {

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::uint64_t parse_uint(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError(line, "malformed token '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph load_edge_list(std::istream& in, std::vector<std::uint64_t>* original_ids) {
  std::unordered_map<std::uint64_t, Vertex> compact;
  std::vector<std::uint64_t> ids;
  std::vector<Edge> edges;
  auto id_of = [&](std::uint64_t raw) {
    auto [it, inserted] = compact.emplace(raw, static_cast<Vertex>(ids.size()));
    if (inserted) ids.push_back(raw);
    return it->second;
  };
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() != 2) throw ParseError(line_no, "expected two vertex ids");
    std::uint64_t a = parse_uint(tokens[0], line_no);
    std::uint64_t b = parse_uint(tokens[1], line_no);
    Vertex u = id_of(a);
    Vertex v = id_of(b);
    edges.emplace_back(u, v);
  }
  if (original_ids) *original_ids = ids;
  return Graph(ids.size(), edges);
}

DimacsGraph load_dimacs(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::uint64_t n = 0;
  std::uint64_t m = 0;
  std::uint64_t edge_lines = 0;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> colors;
  auto vertex = [&](std::string_view token) {
    std::uint64_t v = parse_uint(token, line_no);
    if (v < 1 || v > n) throw ParseError(line_no, "vertex id out of range");
    return static_cast<Vertex>(v - 1);
  };
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_tokens(line);
    if (tokens.empty() || tokens[0] == "c") continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate problem line");
      if (tokens.size() != 4 || tokens[1] != "edge") {
        throw ParseError(line_no, "expected 'p edge n m'");
      }
      n = parse_uint(tokens[2], line_no);
      m = parse_uint(tokens[3], line_no);
      if (n > 0xffffffffULL) throw ParseError(line_no, "too many vertices");
      colors.assign(n, 0);
      have_header = true;
    } else if (tokens[0] == "e") {
      if (!have_header) throw ParseError(line_no, "edge before problem line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'e u v'");
      edges.emplace_back(vertex(tokens[1]), vertex(tokens[2]));
      ++edge_lines;
    } else if (tokens[0] == "n") {
      if (!have_header) throw ParseError(line_no, "color before problem line");
      if (tokens.size() != 3) throw ParseError(line_no, "expected 'n v c'");
      Vertex v = vertex(tokens[1]);
      colors[v] = parse_uint(tokens[2], line_no);
    } else {
      throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }
  }
  if (!have_header) throw ParseError(0, "missing problem line");
  if (edge_lines != m) {
    throw ParseError(0, "header declares " + std::to_string(m) + " edges, found " +
                            std::to_string(edge_lines));
  }
  DimacsGraph out{Graph(n, edges), Coloring::from_values(colors)};
  return out;
}

void save_edge_list(const Graph& g, std::ostream& out) {
  // Self-loops first so that first appearance reproduces vertex ids and
  // isolated vertices survive.
  for (Vertex v = 0; v < g.num_vertices(); ++v) out << v << ' ' << v << '\n';
  for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace symtree

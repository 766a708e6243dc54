#include "pbound/edge_list.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <vector>

#include "pbound/errors.hpp"

namespace pbound {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) out.push_back(line.substr(i, j - i));
    i = j;
  }
  return out;
}

std::size_t to_index(std::string_view token, std::size_t line_no) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                     std::string(token) + "'");
  }
  return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool have_header = false;
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Edge> edges;
  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_ws(line);
    if (tokens.empty() || tokens[0].front() == '#') continue;
    if (tokens.size() != 2) {
      throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
    }
    const std::size_t a = to_index(tokens[0], line_no);
    const std::size_t b = to_index(tokens[1], line_no);
    if (!have_header) {
      n = a;
      m = b;
      have_header = true;
      edges.reserve(m);
      continue;
    }
    if (edges.size() == m) {
      throw ParseError("line " + std::to_string(line_no) + ": more than " + std::to_string(m) + " edges");
    }
    edges.emplace_back(a, b);
  }
  if (!have_header) throw ParseError("missing 'n m' header");
  if (edges.size() != m) {
    throw ParseError("expected " + std::to_string(m) + " edges, found " + std::to_string(edges.size()));
  }
  return Graph::from_edge_list(n, edges);
}

Graph parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return read_edge_list(in);
}

Graph load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (auto [a, b] : g.edges()) out << a << ' ' << b << '\n';
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  write_edge_list(out, g);
  return out.str();
}

Perturbation parse_perturbation(std::string_view spec) {
  auto tokens = split_ws(spec);
  if (tokens.empty()) throw InvalidPerturbation("empty perturbation spec");
  std::vector<Vertex> args;
  for (std::size_t k = 1; k < tokens.size(); ++k) {
    try {
      args.push_back(to_index(tokens[k], 1));
    } catch (const ParseError&) {
      throw InvalidPerturbation("bad vertex '" + std::string(tokens[k]) + "' in perturbation spec");
    }
  }
  const std::string_view kind = tokens[0];
  if (kind == "vertex") {
    if (args.size() < 2) throw InvalidPerturbation("'vertex' needs u and at least one target");
    return Perturbation::vertex_connection(args[0], {args.begin() + 1, args.end()});
  }
  if (kind == "edge") {
    if (args.size() != 2) throw InvalidPerturbation("'edge' needs exactly two vertices");
    return Perturbation::edge_addition(args[0], args[1]);
  }
  if (kind == "pendant") {
    if (args.size() != 1) throw InvalidPerturbation("'pendant' needs exactly one vertex");
    return Perturbation::pendant_edge(args[0]);
  }
  throw InvalidPerturbation("unknown perturbation kind '" + std::string(kind) + "'");
}

}  // namespace pbound

#pragma once

#include <iosfwd>
#include <string>
#include <string_view>

#include "pbound/graph.hpp"

namespace pbound {

// Edge-list text: a header line "n m" followed by m lines "i j" (0-indexed,
// whitespace separated). Blank lines and lines starting with '#' are skipped.
// Throws ParseError on malformed text, self-loops or out-of-range endpoints.
Graph read_edge_list(std::istream& in);
Graph parse_edge_list(std::string_view text);
Graph load_edge_list(const std::string& path);

void write_edge_list(std::ostream& out, const Graph& g);
std::string format_edge_list(const Graph& g);

// "vertex u v1 .. vg" | "edge u v" | "pendant u". Throws InvalidPerturbation.
Perturbation parse_perturbation(std::string_view spec);

}  // namespace pbound

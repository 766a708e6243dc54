#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pbound/matrix.hpp"

namespace pbound {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Edges are stored normalized (first < second) and sorted.
class Graph {
 public:
  Graph() = default;

  // Throws ParseError on a self-loop or an endpoint >= n. Duplicate edges, in
  // either orientation, collapse to one.
  static Graph from_edge_list(std::size_t n, const std::vector<Edge>& pairs);

  std::size_t vertex_count() const { return adjacency_.size(); }
  std::size_t edge_count() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Vertex>& neighbors(Vertex v) const;

  bool has_edge(Vertex a, Vertex b) const;

  // Throws std::out_of_range for v >= n.
  std::size_t degree(Vertex v) const;

  // Dense 0/1 adjacency matrix.
  SymMatrix adjacency() const;

  bool operator==(const Graph& other) const { return edges_ == other.edges_ && vertex_count() == other.vertex_count(); }

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

Graph empty_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

bool is_connected(const Graph& g);

// Common degree when every vertex has the same degree.
std::optional<std::size_t> is_regular(const Graph& g);

// Vertices of `second` are shifted by first.vertex_count().
Graph disjoint_union(const Graph& first, const Graph& second);

// Disjoint union plus every edge between the two vertex sets.
Graph join(const Graph& first, const Graph& second);

// Graph with the listed vertices removed; survivors keep their relative order.
Graph remove_vertices(const Graph& g, std::vector<Vertex> removed);

// apex adjacent to all other vertices and g - apex regular.
bool is_cone_over_regular(const Graph& g, Vertex apex);

// u, v nonadjacent, both adjacent to everything else, g - u - v regular.
bool is_double_cone_over_regular(const Graph& g, Vertex u, Vertex v);

enum class PerturbationKind { VertexConnection, EdgeAddition, PendantEdge };

std::string to_string(PerturbationKind kind);

// One of the three local modifications.
//
//   VertexConnection: isolated vertex `anchor` joined to every vertex of
//                     `targets` (g = targets.size()).
//   EdgeAddition:     new edge anchor--targets[0].
//   PendantEdge:      new vertex n joined to `anchor`.
struct Perturbation {
  PerturbationKind kind = PerturbationKind::EdgeAddition;
  Vertex anchor = 0;
  std::vector<Vertex> targets;

  static Perturbation vertex_connection(Vertex isolated, std::vector<Vertex> targets);
  static Perturbation edge_addition(Vertex u, Vertex v);
  static Perturbation pendant_edge(Vertex u);

  // Number of edges added.
  std::size_t added_edges() const;

  // Textual form accepted by parse_perturbation: "vertex u v1 .. vg",
  // "edge u v" or "pendant u".
  std::string describe() const;

  bool operator==(const Perturbation&) const = default;
};

// Throws InvalidPerturbation if p's invariants do not hold against host.
void validate(const Graph& host, const Perturbation& p);

// Vertex count of the perturbed graph.
std::size_t final_vertex_count(const Graph& host, const Perturbation& p);

// The perturbed graph. Does not check connectivity.
Graph apply_perturbation(const Graph& host, const Perturbation& p);

// adjacency(final) - adjacency(host) padded to the final dimension.
SymMatrix perturbation_matrix(const Graph& host, const Perturbation& p);

}  // namespace pbound

#include "pbound/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pbound/errors.hpp"

namespace pbound {

Graph Graph::from_edge_list(std::size_t n, const std::vector<Edge>& pairs) {
  Graph g;
  g.adjacency_.resize(n);
  g.edges_.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a >= n || b >= n) {
      throw ParseError("edge (" + std::to_string(a) + "," + std::to_string(b) +
                       ") has an endpoint outside 0.." + std::to_string(n) + "-1");
    }
    if (a == b) throw ParseError("self-loop at vertex " + std::to_string(a));
    g.edges_.emplace_back(std::min(a, b), std::max(a, b));
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (auto [a, b] : g.edges_) {
    g.adjacency_[a].push_back(b);
    g.adjacency_[b].push_back(a);
  }
  for (auto& nbrs : g.adjacency_) std::sort(nbrs.begin(), nbrs.end());
  return g;
}

const std::vector<Vertex>& Graph::neighbors(Vertex v) const {
  if (v >= vertex_count()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
  return adjacency_[v];
}

bool Graph::has_edge(Vertex a, Vertex b) const {
  if (a >= vertex_count() || b >= vertex_count()) return false;
  return std::binary_search(adjacency_[a].begin(), adjacency_[a].end(), b);
}

std::size_t Graph::degree(Vertex v) const { return neighbors(v).size(); }

SymMatrix Graph::adjacency() const {
  SymMatrix m(vertex_count());
  for (auto [a, b] : edges_) m.set(a, b, 1.0);
  return m;
}

Graph empty_graph(std::size_t n) { return Graph::from_edge_list(n, {}); }

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_edge_list(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_edge_list(n, e);
}

bool is_connected(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<Vertex> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex v = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(v)) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

std::optional<std::size_t> is_regular(const Graph& g) {
  if (g.vertex_count() == 0) return std::nullopt;
  const std::size_t d = g.degree(0);
  for (Vertex v = 1; v < g.vertex_count(); ++v) {
    if (g.degree(v) != d) return std::nullopt;
  }
  return d;
}

Graph disjoint_union(const Graph& first, const Graph& second) {
  const std::size_t shift = first.vertex_count();
  std::vector<Edge> e = first.edges();
  for (auto [a, b] : second.edges()) e.emplace_back(a + shift, b + shift);
  return Graph::from_edge_list(shift + second.vertex_count(), e);
}

Graph join(const Graph& first, const Graph& second) {
  const std::size_t shift = first.vertex_count();
  std::vector<Edge> e = disjoint_union(first, second).edges();
  for (Vertex a = 0; a < shift; ++a)
    for (Vertex b = 0; b < second.vertex_count(); ++b) e.emplace_back(a, b + shift);
  return Graph::from_edge_list(shift + second.vertex_count(), e);
}

Graph remove_vertices(const Graph& g, std::vector<Vertex> removed) {
  std::sort(removed.begin(), removed.end());
  constexpr Vertex kGone = static_cast<Vertex>(-1);
  std::vector<Vertex> relabel(g.vertex_count(), kGone);
  Vertex next = 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (!std::binary_search(removed.begin(), removed.end(), v)) relabel[v] = next++;
  }
  std::vector<Edge> e;
  for (auto [a, b] : g.edges()) {
    if (relabel[a] != kGone && relabel[b] != kGone) e.emplace_back(relabel[a], relabel[b]);
  }
  return Graph::from_edge_list(next, e);
}

bool is_cone_over_regular(const Graph& g, Vertex apex) {
  const std::size_t n = g.vertex_count();
  if (apex >= n) throw std::out_of_range("apex out of range");
  if (g.degree(apex) != n - 1) return false;
  if (n == 1) return false;  // nothing to be a cone over
  return is_regular(remove_vertices(g, {apex})).has_value();
}

bool is_double_cone_over_regular(const Graph& g, Vertex u, Vertex v) {
  const std::size_t n = g.vertex_count();
  if (u >= n || v >= n) throw std::out_of_range("vertex out of range");
  if (u == v) throw std::invalid_argument("double cone needs two distinct vertices");
  if (n < 3 || g.has_edge(u, v)) return false;
  if (g.degree(u) != n - 2 || g.degree(v) != n - 2) return false;
  return is_regular(remove_vertices(g, {u, v})).has_value();
}

std::string to_string(PerturbationKind kind) {
  switch (kind) {
    case PerturbationKind::VertexConnection: return "vertex";
    case PerturbationKind::EdgeAddition: return "edge";
    case PerturbationKind::PendantEdge: return "pendant";
  }
  return "unknown";
}

Perturbation Perturbation::vertex_connection(Vertex isolated, std::vector<Vertex> targets) {
  return {PerturbationKind::VertexConnection, isolated, std::move(targets)};
}

Perturbation Perturbation::edge_addition(Vertex u, Vertex v) {
  return {PerturbationKind::EdgeAddition, u, {v}};
}

Perturbation Perturbation::pendant_edge(Vertex u) { return {PerturbationKind::PendantEdge, u, {}}; }

std::size_t Perturbation::added_edges() const {
  return kind == PerturbationKind::VertexConnection ? targets.size() : 1;
}

std::string Perturbation::describe() const {
  std::string s = to_string(kind) + " " + std::to_string(anchor);
  for (Vertex t : targets) s += " " + std::to_string(t);
  return s;
}

void validate(const Graph& host, const Perturbation& p) {
  const std::size_t n = host.vertex_count();
  auto fail = [&](const std::string& why) {
    throw InvalidPerturbation("'" + p.describe() + "': " + why);
  };
  if (p.anchor >= n) fail("vertex " + std::to_string(p.anchor) + " out of range");
  switch (p.kind) {
    case PerturbationKind::VertexConnection: {
      if (p.targets.empty()) fail("needs at least one target");
      if (host.degree(p.anchor) != 0) fail("vertex " + std::to_string(p.anchor) + " is not isolated");
      std::vector<Vertex> sorted = p.targets;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) fail("repeated target");
      for (Vertex t : sorted) {
        if (t >= n) fail("target " + std::to_string(t) + " out of range");
        if (t == p.anchor) fail("target equals the isolated vertex");
      }
      break;
    }
    case PerturbationKind::EdgeAddition: {
      if (p.targets.size() != 1) fail("needs exactly two endpoints");
      const Vertex v = p.targets[0];
      if (v >= n) fail("vertex " + std::to_string(v) + " out of range");
      if (v == p.anchor) fail("endpoints coincide");
      if (host.has_edge(p.anchor, v)) fail("edge already present");
      break;
    }
    case PerturbationKind::PendantEdge:
      if (!p.targets.empty()) fail("takes a single vertex");
      break;
  }
}

std::size_t final_vertex_count(const Graph& host, const Perturbation& p) {
  return host.vertex_count() + (p.kind == PerturbationKind::PendantEdge ? 1 : 0);
}

Graph apply_perturbation(const Graph& host, const Perturbation& p) {
  validate(host, p);
  std::vector<Edge> e = host.edges();
  switch (p.kind) {
    case PerturbationKind::VertexConnection:
      for (Vertex t : p.targets) e.emplace_back(p.anchor, t);
      break;
    case PerturbationKind::EdgeAddition:
      e.emplace_back(p.anchor, p.targets[0]);
      break;
    case PerturbationKind::PendantEdge:
      e.emplace_back(p.anchor, host.vertex_count());
      break;
  }
  return Graph::from_edge_list(final_vertex_count(host, p), e);
}

SymMatrix perturbation_matrix(const Graph& host, const Perturbation& p) {
  validate(host, p);
  SymMatrix m(final_vertex_count(host, p));
  switch (p.kind) {
    case PerturbationKind::VertexConnection:
      for (Vertex t : p.targets) m.set(p.anchor, t, 1.0);
      break;
    case PerturbationKind::EdgeAddition:
      m.set(p.anchor, p.targets[0], 1.0);
      break;
    case PerturbationKind::PendantEdge:
      m.set(p.anchor, host.vertex_count(), 1.0);
      break;
  }
  return m;
}

}  // namespace pbound

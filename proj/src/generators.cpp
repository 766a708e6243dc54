#include "pbound/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <string>

#include "pbound/errors.hpp"

namespace pbound {

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  // splitmix64 finalizer over master + index * golden ratio
  std::uint64_t z = master + (index + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

Graph regular_circulant(std::size_t n, std::size_t delta) {
  if (n == 0 || delta >= n || (n * delta) % 2 != 0) {
    throw StructuralError("no " + std::to_string(delta) + "-regular graph on " + std::to_string(n) +
                          " vertices");
  }
  std::vector<Edge> e;
  for (std::size_t offset = 1; offset <= delta / 2; ++offset) {
    for (Vertex i = 0; i < n; ++i) e.emplace_back(i, (i + offset) % n);
  }
  if (delta % 2 == 1) {
    for (Vertex i = 0; i < n / 2; ++i) e.emplace_back(i, i + n / 2);
  }
  return Graph::from_edge_list(n, e);
}

Graph random_graph(Rng& rng, std::size_t n, double p) {
  std::vector<Edge> e;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (rng.coin(p)) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

Graph random_connected_graph(Rng& rng, std::size_t n, double p) {
  for (;;) {
    Graph g = random_graph(rng, n, p);
    if (is_connected(g)) return g;
  }
}

namespace {

std::vector<std::vector<Vertex>> components_of(const Graph& g) {
  const SymMatrix a = g.adjacency();
  return a.components();
}

}  // namespace

Instance random_instance(Rng& rng, PerturbationKind kind, std::size_t n, double p) {
  if (n < 3) throw DomainError("random_instance: n must be at least 3");
  switch (kind) {
    case PerturbationKind::VertexConnection: {
      const Graph rest = random_graph(rng, n - 1, p);
      const Vertex u = rng.below(n);
      auto lift = [u](Vertex v) { return v < u ? v : v + 1; };
      std::vector<Edge> e;
      for (auto [a, b] : rest.edges()) e.emplace_back(lift(a), lift(b));
      std::vector<bool> chosen(n - 1, false);
      for (Vertex v = 0; v + 1 < n; ++v) chosen[v] = rng.coin(0.5);
      for (const auto& comp : components_of(rest)) {
        const bool hit = std::any_of(comp.begin(), comp.end(), [&](Vertex v) { return chosen[v]; });
        if (!hit) chosen[comp[rng.below(comp.size())]] = true;
      }
      std::vector<Vertex> targets;
      for (Vertex v = 0; v + 1 < n; ++v)
        if (chosen[v]) targets.push_back(lift(v));
      return {Graph::from_edge_list(n, e), Perturbation::vertex_connection(u, targets)};
    }
    case PerturbationKind::EdgeAddition: {
      Graph g;
      do {
        g = random_connected_graph(rng, n, p);
      } while (g.edge_count() == n * (n - 1) / 2);
      std::vector<Edge> missing;
      for (Vertex i = 0; i < n; ++i)
        for (Vertex j = i + 1; j < n; ++j)
          if (!g.has_edge(i, j)) missing.emplace_back(i, j);
      auto [a, b] = missing[rng.below(missing.size())];
      if (rng.coin(0.5)) std::swap(a, b);
      return {std::move(g), Perturbation::edge_addition(a, b)};
    }
    case PerturbationKind::PendantEdge: {
      Graph g = random_connected_graph(rng, n, p);
      const Vertex u = rng.below(n);
      return {std::move(g), Perturbation::pendant_edge(u)};
    }
  }
  throw DomainError("random_instance: unknown perturbation kind");
}

Instance equality_instance(PerturbationKind kind, std::size_t n, std::size_t delta) {
  const Graph base = regular_circulant(n, delta);
  switch (kind) {
    case PerturbationKind::VertexConnection: {
      std::vector<Vertex> targets(n);
      std::iota(targets.begin(), targets.end(), Vertex{1});
      return {disjoint_union(empty_graph(1), base), Perturbation::vertex_connection(0, targets)};
    }
    case PerturbationKind::EdgeAddition:
      return {join(empty_graph(2), base), Perturbation::edge_addition(0, 1)};
    case PerturbationKind::PendantEdge:
      return {join(empty_graph(1), base), Perturbation::pendant_edge(0)};
  }
  throw DomainError("equality_instance: unknown perturbation kind");
}

namespace {

// Bit index of the pair (i, j), i < j, in an n <= 8 vertex code.
constexpr int pair_bit(std::size_t i, std::size_t j) { return static_cast<int>(j * (j - 1) / 2 + i); }

using Code = std::uint32_t;
using Adj = std::vector<std::uint8_t>;  // row-major n x n, 0/1

// Minimum code over all relabelings that list vertices by nonincreasing
// degree. The degree partition is an isomorphism invariant, so equal codes
// mean isomorphic graphs.
Code canonical_code(std::size_t n, const Adj& adj) {
  std::vector<std::size_t> deg(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) deg[i] += adj[i * n + j];
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), Vertex{0});
  std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
    return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
  });
  std::vector<std::pair<std::size_t, std::size_t>> classes;  // [begin, end)
  for (std::size_t i = 0; i < n;) {
    std::size_t j = i;
    while (j < n && deg[order[j]] == deg[order[i]]) ++j;
    classes.emplace_back(i, j);
    i = j;
  }

  Code best = ~Code{0};
  std::vector<Vertex> perm = order;
  auto evaluate = [&] {
    Code c = 0;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i)
        if (adj[perm[i] * n + perm[j]]) c |= Code{1} << pair_bit(i, j);
    best = std::min(best, c);
  };
  // Odometer over the permutations of each degree class.
  auto recurse = [&](auto&& self, std::size_t cls) -> void {
    if (cls == classes.size()) {
      evaluate();
      return;
    }
    auto [b, e] = classes[cls];
    std::sort(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e));
    do {
      self(self, cls + 1);
    } while (std::next_permutation(perm.begin() + static_cast<long>(b), perm.begin() + static_cast<long>(e)));
  };
  recurse(recurse, 0);
  return best;
}

Adj decode(std::size_t n, Code code) {
  Adj adj(n * n, 0);
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (code & (Code{1} << pair_bit(i, j))) adj[i * n + j] = adj[j * n + i] = 1;
  return adj;
}

Graph to_graph(std::size_t n, Code code) {
  std::vector<Edge> e;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (code & (Code{1} << pair_bit(i, j))) e.emplace_back(i, j);
  return Graph::from_edge_list(n, e);
}

}  // namespace

std::vector<Graph> enumerate_graphs(std::size_t n) {
  if (n > 8) throw DomainError("enumerate_graphs: n must be at most 8");
  std::vector<Graph> out;
  if (n == 0) {
    out.push_back(empty_graph(0));
    return out;
  }
  std::set<Code> level{0};  // K1
  for (std::size_t k = 2; k <= n; ++k) {
    std::set<Code> next;
    for (Code code : level) {
      const Adj small = decode(k - 1, code);
      for (std::uint32_t mask = 0; mask < (1u << (k - 1)); ++mask) {
        Adj adj(k * k, 0);
        for (std::size_t i = 0; i + 1 < k; ++i)
          for (std::size_t j = 0; j + 1 < k; ++j) adj[i * k + j] = small[i * (k - 1) + j];
        for (std::size_t i = 0; i + 1 < k; ++i)
          if (mask & (1u << i)) adj[i * k + (k - 1)] = adj[(k - 1) * k + i] = 1;
        next.insert(canonical_code(k, adj));
      }
    }
    level = std::move(next);
  }
  for (Code code : level) out.push_back(to_graph(n, code));
  return out;
}

}  // namespace pbound

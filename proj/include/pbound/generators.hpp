#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "pbound/graph.hpp"

namespace pbound {

// Seeded generator for reproducible experiments. Wraps std::mt19937_64, whose
// output sequence is fixed by the C++ standard; the mappings to doubles and
// bounded integers below are ours, so draws are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  // Uniform on {0, .., bound-1}; bound > 0.
  std::size_t below(std::size_t bound) { return static_cast<std::size_t>(next() % bound); }
  bool coin(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Seed for trial `index` of a run with master seed `master`. Independent of
// the order in which trials are evaluated.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

// Edge probabilities cycled by the random instance generators.
inline constexpr double kEdgeProbabilities[] = {0.3, 0.5, 0.8};

// delta-regular circulant graph on n vertices. Throws StructuralError unless
// delta < n and n * delta is even.
Graph regular_circulant(std::size_t n, std::size_t delta);

// G(n, p).
Graph random_graph(Rng& rng, std::size_t n, double p);

// G(n, p) conditioned on connectivity by rejection.
Graph random_connected_graph(Rng& rng, std::size_t n, double p);

struct Instance {
  Graph host;
  Perturbation perturbation;
};

// Random valid instance whose perturbed graph has n vertices (n >= 3;
// VertexConnection, EdgeAddition) or whose host has n vertices (PendantEdge).
// VertexConnection hosts are G(n-1, p) plus an isolated vertex at a random
// position; the targets hit every component. EdgeAddition and PendantEdge
// hosts are connected, and EdgeAddition hosts are not complete.
Instance random_instance(Rng& rng, PerturbationKind kind, std::size_t n, double p);

// The equality-case instance over the delta-regular circulant G on n vertices:
//   VertexConnection: host {u} u G, u = 0 joined to all of G;
//   EdgeAddition:     host ({u} u {v}) + G, edge u = 0, v = 1;
//   PendantEdge:      host {u} + G, pendant at u = 0.
Instance equality_instance(PerturbationKind kind, std::size_t n, std::size_t delta);

// All graphs on n vertices up to isomorphism (n <= 8), ordered by canonical
// code.
std::vector<Graph> enumerate_graphs(std::size_t n);

}  // namespace pbound

#include <doctest.h>

#include <set>

#include "pbound/errors.hpp"
#include "pbound/generators.hpp"
#include "pbound/report.hpp"

using namespace pbound;

TEST_CASE("graph enumeration counts") {
  const std::size_t all[] = {1, 2, 4, 11, 34, 156, 1044};
  const std::size_t connected[] = {1, 1, 2, 6, 21, 112, 853};
  for (std::size_t n = 1; n <= 7; ++n) {
    const auto graphs = enumerate_graphs(n);
    CHECK(graphs.size() == all[n - 1]);
    std::size_t c = 0;
    for (const Graph& g : graphs) c += is_connected(g) ? 1 : 0;
    CHECK(c == connected[n - 1]);
  }
  CHECK_THROWS(enumerate_graphs(9));
}

TEST_CASE("rng determinism") {
  Rng a(42), b(42), c(43);
  bool differs = false;
  for (int i = 0; i < 100; ++i) {
    const auto x = a.next();
    CHECK(x == b.next());
    differs = differs || x != c.next();
  }
  CHECK(differs);
  Rng d(1);
  for (int i = 0; i < 1000; ++i) {
    const double u = d.uniform();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
    CHECK(d.below(7) < 7);
  }
  CHECK(derive_seed(42, 0) == derive_seed(42, 0));
  std::set<std::uint64_t> seeds;
  for (std::uint64_t i = 0; i < 1000; ++i) seeds.insert(derive_seed(42, i));
  CHECK(seeds.size() == 1000);
  CHECK(derive_seed(42, 5) != derive_seed(43, 5));
}

TEST_CASE("random graphs are reproducible") {
  Rng a(9), b(9);
  for (int i = 0; i < 20; ++i) {
    CHECK(random_graph(a, 10, 0.4) == random_graph(b, 10, 0.4));
    const Graph g = random_connected_graph(a, 9, 0.3);
    CHECK(g == random_connected_graph(b, 9, 0.3));
    CHECK(is_connected(g));
  }
  Rng e(1);
  CHECK(random_graph(e, 6, 0.0).edge_count() == 0);
  CHECK(random_graph(e, 6, 1.0) == complete_graph(6));
}

TEST_CASE("regular circulants") {
  for (std::size_t n = 1; n <= 10; ++n)
    for (std::size_t delta = 0; delta < n; ++delta) {
      if ((n * delta) % 2 != 0) {
        CHECK_THROWS_AS(regular_circulant(n, delta), StructuralError);
        continue;
      }
      const Graph g = regular_circulant(n, delta);
      CHECK(g.vertex_count() == n);
      CHECK(is_regular(g) == std::optional<std::size_t>(delta));
    }
  CHECK_THROWS_AS(regular_circulant(3, 3), StructuralError);
}

TEST_CASE("random instances are valid") {
  for (std::uint64_t trial = 0; trial < 600; ++trial) {
    Rng rng(derive_seed(1, trial));
    const auto kind = static_cast<PerturbationKind>(trial % 3);
    const std::size_t n = 3 + rng.below(10);
    const Instance inst = random_instance(rng, kind, n, kEdgeProbabilities[(trial / 3) % 3]);
    CHECK(inst.perturbation.kind == kind);
    CHECK_NOTHROW(validate(inst.host, inst.perturbation));
    const Graph fin = apply_perturbation(inst.host, inst.perturbation);
    CHECK(is_connected(fin));
    if (kind == PerturbationKind::PendantEdge) {
      CHECK(inst.host.vertex_count() == n);
    } else {
      CHECK(fin.vertex_count() == n);
    }
    if (kind != PerturbationKind::VertexConnection) CHECK(is_connected(inst.host));
  }
  Rng rng(0);
  CHECK_THROWS(random_instance(rng, PerturbationKind::EdgeAddition, 2, 0.5));
}

TEST_CASE("equality instances are recognized") {
  for (auto kind : {PerturbationKind::VertexConnection, PerturbationKind::EdgeAddition, PerturbationKind::PendantEdge})
    for (std::size_t n = 1; n <= 8; ++n)
      for (std::size_t delta = 0; delta < n; ++delta) {
        if ((n * delta) % 2 != 0) continue;
        const Instance inst = equality_instance(kind, n, delta);
        CHECK(equality_expected(inst.host, inst.perturbation));
        const BoundReport r = analyze(inst.host, inst.perturbation);
        CHECK(std::abs(*r.slack) <= kEqualityTolerance);
      }
}

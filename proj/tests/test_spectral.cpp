#include <doctest.h>

#include <cmath>
#include <numeric>

#include "pbound/errors.hpp"
#include "pbound/generators.hpp"
#include "pbound/graph.hpp"
#include "pbound/spectral.hpp"

using namespace pbound;
using doctest::Approx;

namespace {

double lambda_at(const SymMatrix& a, const SymMatrix& p, double t) {
  return largest_eigenvalue(a.plus_scaled(p, t));
}

}  // namespace

TEST_CASE("perron on small graphs") {
  const PerronPair k2 = perron(complete_graph(2).adjacency());
  CHECK(k2.lambda == Approx(1.0).epsilon(1e-12));
  CHECK(k2.x[0] == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));
  CHECK(k2.x[1] == Approx(1.0 / std::sqrt(2.0)).epsilon(1e-10));

  const PerronPair c4 = perron(cycle_graph(4).adjacency());
  CHECK(c4.lambda == Approx(2.0).epsilon(1e-12));
  for (double v : c4.x) CHECK(v == Approx(0.5).epsilon(1e-10));

  const PerronPair p3 = perron(path_graph(3).adjacency());
  CHECK(p3.lambda == Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(p3.residual <= 1e-11);

  const PerronPair k1 = perron(empty_graph(1).adjacency());
  CHECK(k1.lambda == 0.0);
  CHECK(k1.x[0] == Approx(1.0));
}

TEST_CASE("perron rejects invalid input") {
  CHECK_THROWS_AS(perron(empty_graph(2).adjacency()), StructuralError);
  SymMatrix neg(2);
  neg.set(0, 1, -1.0);
  CHECK_THROWS_AS(perron(neg), StructuralError);
}

TEST_CASE("perron finishes with inverse iteration when power iteration stalls") {
  PerronOptions starved;
  starved.max_iterations = 1;
  const SymMatrix p9 = path_graph(9).adjacency();
  const PerronPair pp = perron(p9, starved);
  CHECK(std::abs(pp.lambda - largest_eigenvalue(p9)) <= 1e-12);
  CHECK(pp.residual <= 1e-11);

  // C4 and K1,4 share index 2; joining both weakly to a new vertex leaves
  // lambda_1 - lambda_2 tiny, far beyond the reach of the power iteration cap.
  const Graph host = disjoint_union(empty_graph(1), disjoint_union(cycle_graph(4), join(empty_graph(1), empty_graph(4))));
  const Perturbation p = Perturbation::vertex_connection(0, {1, 5});
  const SymMatrix a = host.adjacency().plus_scaled(perturbation_matrix(host, p), 0.01);
  const PerronPair tied = perron(a);
  CHECK(tied.iterations > perron_iteration_cap(a.dim()));
  CHECK(std::abs(tied.lambda - largest_eigenvalue(a)) <= 1e-12);
  CHECK(tied.residual <= 1e-11);
  CHECK(*std::min_element(tied.x.begin(), tied.x.end()) > 0.0);
}

TEST_CASE("perron iteration cap") {
  CHECK(perron_iteration_cap(2) == 278);
  CHECK(perron_iteration_cap(100) == 92104);
}

TEST_CASE("perron_by_components handles disconnected matrices") {
  const Graph g = disjoint_union(empty_graph(1), cycle_graph(4));
  const PerronPair pp = perron_by_components(g.adjacency());
  CHECK(pp.lambda == Approx(2.0).epsilon(1e-12));
  CHECK(pp.x[0] == 0.0);
  CHECK(norm2(pp.x) == Approx(1.0).epsilon(1e-12));

  const PerronPair zero = perron_by_components(empty_graph(3).adjacency());
  CHECK(zero.lambda == 0.0);
  CHECK(norm2(zero.x) == Approx(1.0));
}

TEST_CASE("full_spectrum examples") {
  const Vector k2 = full_spectrum(complete_graph(2).adjacency());
  CHECK(k2[0] == Approx(1.0));
  CHECK(k2[1] == Approx(-1.0));

  const Vector c4 = full_spectrum(cycle_graph(4).adjacency());
  const double expected[] = {2.0, 0.0, 0.0, -2.0};
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(c4[i] - expected[i]) <= 1e-10);

  for (double v : full_spectrum(SymMatrix(3))) CHECK(v == 0.0);
}

TEST_CASE("jacobi eigensystem residuals") {
  Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Graph g = random_graph(rng, 2 + rng.below(12), 0.5);
    const SymMatrix a = g.adjacency();
    const EigenSystem es = jacobi_eigensystem(a);
    for (std::size_t k = 0; k < es.values.size(); ++k) {
      const Vector ax = a * es.vectors[k];
      double r = 0.0;
      for (std::size_t i = 0; i < ax.size(); ++i) r += std::pow(ax[i] - es.values[k] * es.vectors[k][i], 2);
      CHECK(std::sqrt(r) <= 1e-10);
      CHECK(norm2(es.vectors[k]) == Approx(1.0).epsilon(1e-12));
      if (k > 0) CHECK(es.values[k - 1] >= es.values[k]);
    }
  }
}

TEST_CASE("perron agrees with jacobi on random connected graphs") {
  for (std::uint64_t trial = 0; trial < 200; ++trial) {
    Rng rng(derive_seed(3, trial));
    const Graph g = random_connected_graph(rng, 1 + rng.below(12), kEdgeProbabilities[trial % 3]);
    const SymMatrix a = g.adjacency();
    const PerronPair pp = perron(a);
    const Vector spec = full_spectrum(a);
    CHECK(std::abs(pp.lambda - spec.front()) <= 1e-9);
    CHECK(norm2(pp.x) == Approx(1.0).epsilon(1e-12));
    if (g.vertex_count() > 1) {
      CHECK(*std::min_element(pp.x.begin(), pp.x.end()) > 0.0);
    }
    CHECK(std::abs(std::accumulate(spec.begin(), spec.end(), 0.0)) <= 1e-9);
  }
}

TEST_CASE("rayleigh quotient") {
  const SymMatrix c4 = cycle_graph(4).adjacency();
  CHECK(rayleigh_quotient(c4, Vector(4, 1.0)) == Approx(2.0));
  CHECK(rayleigh_quotient(SymMatrix(3), Vector{1.0, 2.0, 3.0}) == 0.0);
  const EigenSystem es = jacobi_eigensystem(path_graph(5).adjacency());
  for (std::size_t k = 0; k < 5; ++k) CHECK(rayleigh_quotient(path_graph(5).adjacency(), es.vectors[k]) == Approx(es.values[k]));
  CHECK_THROWS_AS(rayleigh_quotient(c4, Vector(4, 0.0)), DomainError);
}

TEST_CASE("lambda_derivative examples") {
  const double s = 1.0 / std::sqrt(2.0);
  CHECK(lambda_derivative(SymMatrix(2), Vector{s, s}) == 0.0);
  CHECK(lambda_derivative(complete_graph(2).adjacency(), Vector{s, s}) == Approx(1.0));
  CHECK_THROWS_AS(lambda_derivative(SymMatrix(2), Vector{1.0, 1.0}), DomainError);

  const Graph c4 = cycle_graph(4);
  const Perturbation chord = Perturbation::edge_addition(0, 2);
  const SymMatrix a = c4.adjacency();
  const SymMatrix p = perturbation_matrix(c4, chord);
  const PerronPair mid = perron(a.plus_scaled(p, 0.5));
  const double h = 1e-5;
  const double fd = (lambda_at(a, p, 0.5 + h) - lambda_at(a, p, 0.5 - h)) / (2 * h);
  CHECK(std::abs(lambda_derivative(p, mid.x) - fd) <= 1e-6);
}

TEST_CASE("derivative identity on random instances") {
  const double h = 1e-5;
  for (std::uint64_t trial = 0; trial < 30; ++trial) {
    Rng rng(derive_seed(5, trial));
    const auto kind = static_cast<PerturbationKind>(trial % 3);
    const Instance inst = random_instance(rng, kind, 3 + rng.below(8), 0.5);
    const std::size_t nf = final_vertex_count(inst.host, inst.perturbation);
    const SymMatrix a = inst.host.adjacency().padded(nf);
    const SymMatrix p = perturbation_matrix(inst.host, inst.perturbation);
    for (int k = 1; k <= 20; ++k) {
      const double t = k / 21.0;
      const PerronPair pp = perron(a.plus_scaled(p, t));
      const double fd = (lambda_at(a, p, t + h) - lambda_at(a, p, t - h)) / (2 * h);
      CHECK(std::abs(lambda_derivative(p, pp.x) - fd) <= 1e-6);
    }
    CHECK(lambda_at(a, p, 1.0) > lambda_at(a, p, 0.0));
  }
}

TEST_CASE("SymMatrix basics") {
  const double bad[] = {0, 1, 2, 0};
  CHECK_THROWS_AS(SymMatrix::from_dense(2, bad), DomainError);
  const double good[] = {1, 2, 2, 3};
  const SymMatrix m = SymMatrix::from_dense(2, good);
  CHECK(m(0, 1) == 2.0);
  CHECK(m.padded(3)(2, 2) == 0.0);
  CHECK(m.padded(3)(1, 1) == 3.0);
  CHECK(SymMatrix::identity(3)(1, 1) == 1.0);
  CHECK(m.plus_scaled(SymMatrix::identity(2), 2.0)(0, 0) == 3.0);
  CHECK_FALSE(disjoint_union(path_graph(2), path_graph(2)).adjacency().is_connected());
  CHECK(disjoint_union(path_graph(2), path_graph(3)).adjacency().components().size() == 2);
}

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "pbound/bounds.hpp"
#include "pbound/errors.hpp"

using namespace pbound;
using doctest::Approx;

namespace {

const double kSqrt2 = std::numbers::sqrt2;
const double kSqrt5 = std::sqrt(5.0);

// All real roots of x^3 + a x^2 + b x + c via the trigonometric method, or a
// single root when the discriminant is positive.
std::vector<double> cubic_roots(double a, double b, double c) {
  const double p = b - a * a / 3.0;
  const double q = 2.0 * a * a * a / 27.0 - a * b / 3.0 + c;
  const double disc = q * q / 4.0 + p * p * p / 27.0;
  std::vector<double> roots;
  if (disc > 0) {
    const double s = std::sqrt(disc);
    roots.push_back(std::cbrt(-q / 2.0 + s) + std::cbrt(-q / 2.0 - s) - a / 3.0);
  } else {
    const double r = 2.0 * std::sqrt(-p / 3.0);
    const double phi = std::acos(std::clamp(3.0 * q / (p * r), -1.0, 1.0));
    for (int k = 0; k < 3; ++k) roots.push_back(r * std::cos((phi - 2.0 * std::numbers::pi * k) / 3.0) - a / 3.0);
  }
  return roots;
}

}  // namespace

TEST_CASE("h examples") {
  CHECK(h_fn(std::sqrt(3.0), 3) == Approx(0.0));
  CHECK(h_fn(1 + kSqrt5, 4) == Approx(2.0));
  CHECK(h_fn(3, 1) == Approx(8.0 / 3.0));
  CHECK_THROWS_AS(h_fn(0.0, 1), DomainError);

  CHECK(h_inv(0, 3) == Approx(std::sqrt(3.0)).epsilon(1e-14));
  CHECK(h_inv(2, 4) == Approx(1 + kSqrt5).epsilon(1e-14));
  for (double x : {0.5, 1.0, 7.3})
    for (double g : {1.0, 2.0, 10.0}) CHECK(h_inv(h_fn(x, g), g) == Approx(x).epsilon(1e-13));
}

TEST_CASE("k examples") {
  CHECK(std::abs(k_fn(kSqrt2, 2)) <= 1e-15);
  CHECK(k_inv(-1, 2) == Approx(1.0).epsilon(1e-15));
  for (double x : {0.3, 1.0, 4.2})
    for (double d : {1.0, 2.0, 9.0}) CHECK(k_inv(k_fn(x, d), d) == Approx(x).epsilon(1e-13));
  CHECK_THROWS_AS(k_fn(-1.0, 1), DomainError);
}

TEST_CASE("l1 and l2 examples") {
  CHECK(l1(1, 1) == 0.0);
  CHECK(std::abs(l2(kSqrt2, 1)) <= 1e-15);
  CHECK(l1(3.7, 0) == 3.7);
  CHECK_THROWS_AS(l1(0.0, 1), DomainError);
  CHECK_THROWS_AS(l2(1.0, 1), DomainError);
}

TEST_CASE("l2_inv examples") {
  CHECK(l2_inv(0, 1) == Approx(kSqrt2).epsilon(1e-13));
  for (double x : {1.5, 2.0, 10.0})
    for (double d : {1.0, 3.0}) CHECK(l2_inv(l2(x, d), d) == Approx(x).epsilon(1e-12));

  const double nu = l2_inv(l1(kSqrt2, 1), 1);
  CHECK(nu == Approx(1.6566967995).epsilon(1e-9));
  CHECK(nu > (1 + kSqrt5) / 2);
  CHECK(l2(nu, 1) == Approx(1 / kSqrt2).epsilon(1e-12));

  CHECK(l2_inv(3.0, 0) == 3.0);
  CHECK_THROWS_AS(l2_inv(0.5, 0), DomainError);
}

TEST_CASE("round trips over the parameter grid") {
  for (int yi = -50; yi <= 50; ++yi) {
    const double y = yi + 0.37;
    for (int p = 1; p <= 20; ++p) {
      CHECK(std::abs(h_fn(h_inv(y, p), p) - y) <= 1e-10);
      CHECK(std::abs(k_fn(k_inv(y, p), p) - y) <= 1e-10);
      CHECK(std::abs(l2(l2_inv(y, p), p) - y) <= 1e-10);
    }
  }
}

TEST_CASE("cubic root uniqueness") {
  for (double lam : {1.0, 1.3, 2.0, 3.5, 7.0, 20.0, 150.0}) {
    for (double d : {1.0, 2.0, 3.0, 5.0, 10.0}) {
      const double y = l1(lam, d);
      const auto roots = cubic_roots(-y, -(d + 1), y);
      int above = 0;
      for (double r : roots)
        if (r >= std::sqrt(d + 1)) ++above;
      if (y >= 0) CHECK(above == 1);
      int above_one = 0;
      double root = 0;
      for (double r : roots)
        if (r > 1.0) ++above_one, root = r;
      REQUIRE(above_one == 1);
      CHECK(l2_inv(y, d) == Approx(root).epsilon(1e-11));
    }
  }
}

TEST_CASE("sextic equals twice the product of the two cubics") {
  // Closed-form cone-plus-pendant sextic versus its factorization, checked
  // pointwise on a grid of (nu, y, d).
  for (double nu : {-2.0, 0.3, 1.1, 2.7})
    for (double y : {-3.0, 0.0, 1.7})
      for (double d : {1.0, 4.0}) {
        const double c1 = nu * nu * nu - y * nu * nu - (d + 1) * nu + y;
        const double c2 = nu * nu * nu + y * nu * nu - (d + 1) * nu - y;
        const double n2 = nu * nu;
        const double sextic = 2 * (n2 * n2 * n2 - (2 * (d + 1) + y * y) * n2 * n2 +
                                   ((d + 1) * (d + 1) + 2 * y * y) * n2 - y * y);
        CHECK(sextic == Approx(2 * c1 * c2).epsilon(1e-12));
      }
}

TEST_CASE("vertex connection bound") {
  CHECK(bound_vertex_connection(0, 3) == Approx(std::sqrt(3.0)));
  CHECK(bound_vertex_connection(2, 4) == Approx(1 + kSqrt5));
  CHECK(bound_vertex_connection(2, 1) == Approx(1 + kSqrt2));
  CHECK_THROWS_AS(bound_vertex_connection(2, 0), DomainError);
}

TEST_CASE("edge addition bound") {
  CHECK(bound_edge_addition(kSqrt2, 1, 1) == Approx(2.0).epsilon(1e-14));
  const double b = bound_edge_addition((1 + kSqrt5) / 2, 1, 1);
  CHECK(b == Approx(2.1386).epsilon(1e-4));
  CHECK(b > 2.0);
  CHECK(bound_edge_addition(3.1, 2, 5) == bound_edge_addition(3.1, 5, 2));
  CHECK_THROWS_AS(bound_edge_addition(0.0, 1, 1), DomainError);
}

TEST_CASE("pendant edge bound") {
  CHECK(bound_pendant_edge(1, 1) == Approx(kSqrt2).epsilon(1e-13));
  CHECK(bound_pendant_edge(kSqrt2, 1) > (1 + kSqrt5) / 2);
  CHECK(bound_pendant_edge(2, 2) > 2.0);
  for (double lam : {1.0, 2.5, 9.0})
    for (double d : {1.0, 3.0}) CHECK(bound_pendant_edge_literal(lam, d, 1) == bound_pendant_edge(lam, d));
  CHECK(bound_pendant_edge_literal(2.0, 1, 3) != bound_pendant_edge(2.0, 1));
}

TEST_CASE("dispatch") {
  CHECK(bound({PerturbationKind::VertexConnection, 2, {4, 0, 0}}) == bound_vertex_connection(2, 4));
  CHECK(bound({PerturbationKind::EdgeAddition, 2, {0, 1, 3}}) == bound_edge_addition(2, 1, 3));
  CHECK(bound({PerturbationKind::PendantEdge, 2, {0, 2, 0}}) == bound_pendant_edge(2, 2));
}

TEST_CASE("bound_params") {
  const Graph c4 = cycle_graph(4);
  const BoundParams e = bound_params(c4, Perturbation::edge_addition(0, 2));
  CHECK(e.delta_u == 2);
  CHECK(e.delta_v == 2);
  CHECK(bound_params(path_graph(3), Perturbation::pendant_edge(0)).delta_u == 1);
  CHECK(bound_params(disjoint_union(empty_graph(1), c4), Perturbation::vertex_connection(0, {1, 2, 3})).g == 3);
}

TEST_CASE("monotonicity") {
  for (double lam = 1.0; lam < 30.0; lam *= 1.3) {
    const double next = lam * 1.3;
    for (double p = 1; p <= 6; ++p) {
      CHECK(bound_vertex_connection(next, p) > bound_vertex_connection(lam, p));
      CHECK(bound_vertex_connection(lam, p + 1) > bound_vertex_connection(lam, p));
      CHECK(bound_edge_addition(next, p, 1) > bound_edge_addition(lam, p, 1));
      CHECK(bound_edge_addition(lam, p + 1, 1) > bound_edge_addition(lam, p, 1));
      CHECK(bound_pendant_edge(next, p) > bound_pendant_edge(lam, p));
      CHECK(bound_pendant_edge(lam, p + 1) > bound_pendant_edge(lam, p));
    }
  }
}

TEST_CASE("stable gaps agree with direct subtraction at moderate lambda") {
  for (double lam : {0.5, 1.0, 2.0, 5.0, 12.0}) {
    for (double p : {1.0, 2.0, 7.0}) {
      CHECK(vertex_connection_gap(lam, p) == Approx(bound_vertex_connection(lam, p) - lam).epsilon(1e-10));
      CHECK(edge_addition_gap(lam, p, 2) == Approx(bound_edge_addition(lam, p, 2) - lam).epsilon(1e-10));
      if (lam >= 1.0) CHECK(pendant_edge_gap(lam, p) == Approx(bound_pendant_edge(lam, p) - lam).epsilon(1e-8));
    }
  }
}

TEST_CASE("asymptotic gaps") {
  CHECK(asymptotic_gap(PerturbationKind::VertexConnection, 10, {1, 0, 0}) == Approx(0.1));
  CHECK(asymptotic_gap(PerturbationKind::EdgeAddition, 10, {0, 1, 1}) == Approx(0.02));
  CHECK(asymptotic_gap(PerturbationKind::PendantEdge, 10, {0, 1, 0}) == Approx(0.001));
  CHECK_THROWS_AS(asymptotic_gap(PerturbationKind::PendantEdge, 0, {0, 1, 0}), DomainError);

  const BoundParams unit{1, 1, 1};
  for (auto kind : {PerturbationKind::VertexConnection, PerturbationKind::EdgeAddition, PerturbationKind::PendantEdge}) {
    double previous = 0.0;
    for (double lam : {25.0, 50.0, 100.0, 500.0, 1000.0}) {
      const double ratio = bound_gap({kind, lam, unit}) / asymptotic_gap(kind, lam, unit);
      CHECK(std::abs(ratio - 1.0) <= 0.05);
      if (previous != 0.0) CHECK(std::abs(ratio - 1.0) <= std::abs(previous - 1.0));
      previous = ratio;
    }
  }
  for (double lam : {100.0, 500.0, 1000.0}) {
    CHECK(pendant_edge_gap(lam, 1) < edge_addition_gap(lam, 1, 1));
    CHECK(edge_addition_gap(lam, 1, 1) < vertex_connection_gap(lam, 1));
  }
}

TEST_CASE("coclique bound") {
  const CocliqueBound two = coclique_bound(100, {3, 5});
  CHECK(two.asymptotic == Approx(100.0008).epsilon(1e-14));
  CHECK(two.iterated == Approx(100 + edge_addition_gap(100, 3, 5)).epsilon(1e-14));
  CHECK_THROWS_AS(coclique_bound(10, {3}), DomainError);
  CHECK_THROWS_AS(coclique_bound(0, {3, 3}), DomainError);

  for (double lam : {5.0, 25.0, 100.0}) {
    const CocliqueBound c = coclique_bound(lam, {1, 2, 4});
    CHECK(c.iterated >= lam);
  }

  // Updating the degrees after each edge contributes a second term of the
  // same order: gap ~ ((m-1) sum + m(m-1)(m-2)/2) / lambda^2.
  for (std::vector<double> degrees : {std::vector<double>{5, 5, 5}, {1, 1, 1}, {2, 3, 4, 5}}) {
    const double m = static_cast<double>(degrees.size());
    double sum = 0;
    for (double d : degrees) sum += d;
    const double lam = 1000.0;
    const CocliqueBound c = coclique_bound(lam, degrees);
    const double derived = ((m - 1) * sum + m * (m - 1) * (m - 2) / 2) / (lam * lam);
    CHECK((c.iterated - lam) / derived == Approx(1.0).epsilon(0.01));
    CHECK(c.asymptotic == Approx(lam + (m - 1) * sum / (lam * lam)).epsilon(1e-15));
  }
}

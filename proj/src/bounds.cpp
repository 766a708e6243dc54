#include "pbound/bounds.hpp"

#include <cmath>
#include <string>

#include "pbound/errors.hpp"
#include "pbound/roots.hpp"

namespace pbound {
namespace {

// Positive root of xi^2 - y*xi - c = 0 (c > 0), using the form that avoids
// cancellation for either sign of y.
double positive_root(double y, double c) {
  const double s = std::sqrt(y * y + 4.0 * c);
  return y >= 0.0 ? 0.5 * (y + s) : 2.0 * c / (s - y);
}

void require_positive(double xi, const char* what) {
  if (!(xi > 0.0)) throw DomainError(std::string(what) + ": argument must be positive");
}

}  // namespace

BoundParams bound_params(const Graph& host, const Perturbation& p) {
  validate(host, p);
  BoundParams out;
  switch (p.kind) {
    case PerturbationKind::VertexConnection:
      out.g = static_cast<double>(p.targets.size());
      break;
    case PerturbationKind::EdgeAddition:
      out.delta_u = static_cast<double>(host.degree(p.anchor));
      out.delta_v = static_cast<double>(host.degree(p.targets[0]));
      break;
    case PerturbationKind::PendantEdge:
      out.delta_u = static_cast<double>(host.degree(p.anchor));
      break;
  }
  return out;
}

double h_fn(double xi, double g) {
  require_positive(xi, "h_fn");
  return xi - g / xi;
}

double h_inv(double y, double g) {
  if (!(g > 0.0)) throw DomainError("h_inv: g must be at least 1");
  return positive_root(y, g);
}

double k_fn(double xi, double d) {
  require_positive(xi, "k_fn");
  return xi - d / xi;
}

double k_inv(double y, double d) {
  if (d < 0.0) throw DomainError("k_inv: negative degree sum");
  if (d == 0.0) {
    if (!(y > 0.0)) throw DomainError("k_inv: no preimage for d = 0 and y <= 0");
    return y;
  }
  return positive_root(y, d);
}

double l1(double xi, double delta_u) {
  require_positive(xi, "l1");
  return xi - delta_u / xi;
}

double l2(double xi, double delta_u) {
  if (!(xi > 1.0)) throw DomainError("l2: argument must exceed 1");
  return xi - delta_u / (xi - 1.0 / xi);
}

double l2_inv(double y, double delta_u) {
  if (delta_u < 0.0) throw DomainError("l2_inv: negative degree");
  if (delta_u == 0.0) {
    // l2 is the identity on (1, inf).
    if (!(y > 1.0)) throw DomainError("l2_inv: no root above 1 for degree 0 and y <= 1");
    return y;
  }
  const double d = delta_u;
  auto cubic = [y, d](double nu) {
    const double value = ((nu - y) * nu - (d + 1.0)) * nu + y;
    const double slope = (3.0 * nu - 2.0 * y) * nu - (d + 1.0);
    return std::pair{value, slope};
  };
  // The cubic is exactly -d at nu = 1 and positive at hi, and has a single
  // root above 1. At nu = sqrt(d+1) it equals -y*d, so that end is unsafe as a
  // bracket once y rounds to zero.
  const double hi = std::abs(y) + d + 2.0;
  return bracketed_newton(cubic, 1.0, hi, 0.0);
}

double bound_vertex_connection(double lambda_initial, double g) {
  if (!(g >= 1.0)) throw DomainError("bound_vertex_connection: g must be at least 1");
  if (lambda_initial < 0.0) throw DomainError("bound_vertex_connection: negative index");
  return h_inv(lambda_initial, g);
}

double bound_edge_addition(double lambda_initial, double delta_u, double delta_v) {
  require_positive(lambda_initial, "bound_edge_addition");
  const double d = delta_u + delta_v;
  return 1.0 + k_inv(k_fn(lambda_initial, d) - 1.0, d);
}

double bound_pendant_edge(double lambda_initial, double delta_u) {
  require_positive(lambda_initial, "bound_pendant_edge");
  return l2_inv(l1(lambda_initial, delta_u), delta_u);
}

double bound_pendant_edge_literal(double lambda_initial, double delta_u, double g) {
  return bound_pendant_edge(lambda_initial, g * delta_u);
}

double bound(const BoundInput& in) {
  switch (in.kind) {
    case PerturbationKind::VertexConnection:
      return bound_vertex_connection(in.lambda_initial, in.params.g);
    case PerturbationKind::EdgeAddition:
      return bound_edge_addition(in.lambda_initial, in.params.delta_u, in.params.delta_v);
    case PerturbationKind::PendantEdge:
      return bound_pendant_edge(in.lambda_initial, in.params.delta_u);
  }
  throw DomainError("bound: unknown perturbation kind");
}

double vertex_connection_gap(double lambda_initial, double g) {
  if (!(g >= 1.0)) throw DomainError("vertex_connection_gap: g must be at least 1");
  if (lambda_initial < 0.0) throw DomainError("vertex_connection_gap: negative index");
  return 2.0 * g / (std::sqrt(lambda_initial * lambda_initial + 4.0 * g) + lambda_initial);
}

// With bound = lambda + e, the increment solves
//   e^2 + (lambda - 1 + d/lambda) e - d/lambda = 0.
double edge_addition_gap(double lambda_initial, double delta_u, double delta_v) {
  require_positive(lambda_initial, "edge_addition_gap");
  const double c = (delta_u + delta_v) / lambda_initial;
  if (c == 0.0) return 0.0;
  const double b = lambda_initial - 1.0 + c;
  return positive_root(-b, c);
}

// With bound = lambda + e, substituting nu = lambda + e into the l2 cubic gives
//   e^3 + (2 lambda + d/lambda) e^2 + (lambda^2 + d - 1) e - d/lambda = 0,
// which has exactly one root in (0, |l1(lambda)| + d + 2).
double pendant_edge_gap(double lambda_initial, double delta_u) {
  require_positive(lambda_initial, "pendant_edge_gap");
  const double lam = lambda_initial;
  const double d = delta_u;
  if (d == 0.0) {
    if (!(lam > 1.0)) throw DomainError("pendant_edge_gap: no root above 1 for degree 0");
    return 0.0;
  }
  const double a2 = 2.0 * lam + d / lam;
  const double a1 = lam * lam + d - 1.0;
  const double a0 = -d / lam;
  auto cubic = [=](double e) {
    return std::pair{((e + a2) * e + a1) * e + a0, (3.0 * e + 2.0 * a2) * e + a1};
  };
  const double hi = std::abs(l1(lam, d)) + d + 2.0;
  return bracketed_newton(cubic, 0.0, hi, 0.0);
}

double bound_gap(const BoundInput& in) {
  switch (in.kind) {
    case PerturbationKind::VertexConnection:
      return vertex_connection_gap(in.lambda_initial, in.params.g);
    case PerturbationKind::EdgeAddition:
      return edge_addition_gap(in.lambda_initial, in.params.delta_u, in.params.delta_v);
    case PerturbationKind::PendantEdge:
      return pendant_edge_gap(in.lambda_initial, in.params.delta_u);
  }
  throw DomainError("bound_gap: unknown perturbation kind");
}

double asymptotic_gap(PerturbationKind kind, double lambda_initial, const BoundParams& params) {
  require_positive(lambda_initial, "asymptotic_gap");
  const double lam = lambda_initial;
  switch (kind) {
    case PerturbationKind::VertexConnection:
      return params.g / lam;
    case PerturbationKind::EdgeAddition:
      return (params.delta_u + params.delta_v) / (lam * lam);
    case PerturbationKind::PendantEdge:
      return params.delta_u / (lam * lam * lam);
  }
  throw DomainError("asymptotic_gap: unknown perturbation kind");
}

CocliqueBound coclique_bound(double lambda_initial, const std::vector<double>& degrees) {
  const std::size_t m = degrees.size();
  if (m < 2) throw DomainError("coclique_bound: need at least two vertices");
  require_positive(lambda_initial, "coclique_bound");
  double sum = 0.0;
  for (double d : degrees) sum += d;

  CocliqueBound out;
  out.asymptotic = lambda_initial + static_cast<double>(m - 1) * sum / (lambda_initial * lambda_initial);

  std::vector<double> current = degrees;
  double lam = lambda_initial;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      lam = bound_edge_addition(lam, current[i], current[j]);
      current[i] += 1.0;
      current[j] += 1.0;
    }
  }
  out.iterated = lam;
  return out;
}

}  // namespace pbound

#pragma once

#include <vector>

#include "pbound/graph.hpp"

namespace pbound {

// Degree data a bound needs besides lambda_I. Only the fields relevant to the
// perturbation kind are read: g for VertexConnection, delta_u and delta_v for
// EdgeAddition, delta_u for PendantEdge.
struct BoundParams {
  double g = 0.0;
  double delta_u = 0.0;
  double delta_v = 0.0;
};

struct BoundInput {
  PerturbationKind kind = PerturbationKind::EdgeAddition;
  double lambda_initial = 0.0;
  BoundParams params;
};

// Degree data read off the host graph for perturbation p.
BoundParams bound_params(const Graph& host, const Perturbation& p);

// xi - g/xi on (0, inf).
double h_fn(double xi, double g);
// Positive root of xi^2 - y*xi - g = 0.
double h_inv(double y, double g);

// xi - d/xi on (0, inf), d = delta_u + delta_v.
double k_fn(double xi, double d);
double k_inv(double y, double d);

// xi - d/xi on (0, inf).
double l1(double xi, double delta_u);
// xi - d/(xi - 1/xi) on (1, inf).
double l2(double xi, double delta_u);

// Inverse of l2: the unique root in (1, inf) of
//   nu^3 - y nu^2 - (d+1) nu + y = 0.
// For y >= 0 this is the only root with nu >= sqrt(d+1). Solved by bracketed
// Newton on [1, |y|+d+2].
// Throws DomainError when no such root exists (d = 0 and y <= 1).
double l2_inv(double y, double delta_u);

// Upper bound on the index after joining an isolated vertex to g vertices.
// lambda_I = 0 is allowed (edgeless host).
double bound_vertex_connection(double lambda_initial, double g);

// Upper bound on the index after adding the edge uv between nonadjacent
// vertices of degrees delta_u, delta_v: 1 + k_inv(k_fn(lambda_I) - 1).
double bound_edge_addition(double lambda_initial, double delta_u, double delta_v);

// Upper bound on the index after attaching a pendant edge at a vertex of
// degree delta_u: l2_inv(l1(lambda_I)).
double bound_pendant_edge(double lambda_initial, double delta_u);

// The pendant bound with g * delta_u in place of delta_u in both l1 and l2.
// Equal to bound_pendant_edge when g = 1.
double bound_pendant_edge_literal(double lambda_initial, double delta_u, double g);

double bound(const BoundInput& in);

// bound - lambda_I evaluated without the cancellation of the subtraction, so
// the increment keeps full relative precision at large lambda_I.
double vertex_connection_gap(double lambda_initial, double g);
double edge_addition_gap(double lambda_initial, double delta_u, double delta_v);
double pendant_edge_gap(double lambda_initial, double delta_u);
double bound_gap(const BoundInput& in);

// First-order growth of each bound: g/lambda, (du+dv)/lambda^2, du/lambda^3.
double asymptotic_gap(PerturbationKind kind, double lambda_initial, const BoundParams& params);

struct CocliqueBound {
  double asymptotic = 0.0;  // lambda_I + (m-1) * sum(degrees) / lambda_I^2
  double iterated = 0.0;    // edge bound applied to all m(m-1)/2 pairs in turn
};

// Bound for joining every pair of an m-vertex coclique. The iterated value
// feeds each edge bound into the next in lexicographic pair order and bumps
// both endpoint degrees after every edge. Throws DomainError for m < 2 or
// lambda_I <= 0.
CocliqueBound coclique_bound(double lambda_initial, const std::vector<double>& degrees);

}  // namespace pbound

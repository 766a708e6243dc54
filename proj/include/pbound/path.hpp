#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "pbound/bounds.hpp"
#include "pbound/graph.hpp"
#include "pbound/matrix.hpp"

namespace pbound {

// One point of the continuous perturbation A(t) = A_I + tP.
struct PathSample {
  double t = 0.0;
  double lambda = 0.0;
  Vector x;
  std::optional<double> derivative_lhs;  // central difference of lambda(t)
  std::optional<double> derivative_rhs;  // <P x, x>
};

struct Path {
  PerturbationKind kind = PerturbationKind::EdgeAddition;
  BoundParams params;
  std::vector<PathSample> samples;

  double lambda_initial() const { return samples.front().lambda; }
  double lambda_final() const { return samples.back().lambda; }
};

struct PathOptions {
  // Central-difference half-width; 0 selects min(1e-5, 1/(4 steps)).
  double h = 0.0;
  double perron_tol = 1e-11;
};

// Samples t_k = k/steps, k = 0..steps. Each Perron solve is seeded with the
// previous grid point's vector. At t = 0 a disconnected A(0) is handled per
// component (lambda(0) is the host's index). Derivative fields are filled at
// interior points only.
//
// Throws DomainError for steps < 2, InvalidPerturbation for a bad
// perturbation, StructuralError if the perturbed graph is disconnected.
Path sample_path(const Graph& host, const Perturbation& p, std::size_t steps,
                 const PathOptions& opts = {});

// Right-hand side f(t, lambda) of the differential inequality lambda' <= f.
double inequality_rhs(PerturbationKind kind, const BoundParams& params, double t, double lambda);

struct InequalityCheck {
  double max_violation = 0.0;  // max of <Px,x> - f(t, lambda) over interior samples
  double max_deviation = 0.0;  // max of |<Px,x> - f(t, lambda)|
  double min_slack = 0.0;      // min of f(t, lambda) - <Px,x>
  std::size_t points = 0;
};

// Throws std::invalid_argument if `kind` differs from the path's kind.
InequalityCheck check_differential_inequality(const Path& path, PerturbationKind kind,
                                              const BoundParams& params);

// Solution u(t) of the Cauchy problem u' = f(t, u), u(0) = lambda_I:
//   VertexConnection: positive root of u^2 - lambda_I u - g t^2 = 0;
//   EdgeAddition:     larger root of u^2 - (t + C) u + (t C - d) = 0, C = k_fn(lambda_I);
//   PendantEdge:      fixed-step RK4 with 10^4 steps on [0, t].
double comparison_solution(PerturbationKind kind, const BoundParams& params, double lambda_initial,
                           double t);

inline constexpr double kDominanceSlack = 1e-9;
inline constexpr double kTightness = 1e-7;

struct ComparisonCheck {
  std::vector<double> comparison;  // u(t_k)
  std::vector<double> margin;      // u(t_k) - lambda(t_k)
  double max_violation = 0.0;      // max(0, -margin)
  bool dominated = true;           // every margin >= -1e-9
  bool strict = true;              // every margin with t_k > 0 is > 0
  bool tight = true;               // every |margin| <= 1e-7

  // dominated, plus tight for an equality case or strict otherwise.
  bool holds(bool equality_case) const { return dominated && (equality_case ? tight : strict); }
};

ComparisonCheck check_comparison(const Path& path, PerturbationKind kind, const BoundParams& params);

// Closed-form Perron pair along the equality-case paths, for a delta-regular
// graph G on n vertices.
struct JoinSolution {
  double lambda = 0.0;
  double alpha = 0.0;
  std::optional<double> beta;
  std::optional<double> gamma;
  // Pendant case only: squared norm of the unnormalized direction
  // (t(l-d), l(l-d), l j), and the closed form
  // 2(n+t^2)l^2 - d(n+t+3t^2)l + 2t^2 d^2. They agree at t = 1 (or d = 0) but
  // not in general, so alpha, beta, gamma are normalized with the former.
  std::optional<double> norm_squared;
  std::optional<double> closed_form_norm_squared;
};

// Cone {u} + G along u joined to G with weight t: entries (alpha, beta j).
JoinSolution closed_form_vertex_join(std::size_t n, std::size_t delta, double t);

// Double cone ({u} u {v}) + G with uv weighted t: entries (alpha, alpha, gamma j).
JoinSolution closed_form_edge_join(std::size_t n, std::size_t delta, double t);

// Cone {u} + G with a pendant vertex w attached at u with weight t:
// entries (alpha at w, beta at u, gamma j).
JoinSolution closed_form_pendant_join(std::size_t n, std::size_t delta, double t);

// Tab-separated rows "t lambda derivative_lhs derivative_rhs comparison_u margin"
// with 12 significant digits; missing derivatives print as "nan".
void write_path_tsv(std::ostream& out, const Path& path, const ComparisonCheck& comparison);

}  // namespace pbound

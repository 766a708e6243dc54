#pragma once

#include <optional>

#include "pbound/bounds.hpp"
#include "pbound/graph.hpp"

namespace pbound {

inline constexpr double kValiditySlack = 1e-9;
inline constexpr double kEqualityTolerance = 1e-8;
inline constexpr double kStrictnessFloor = 1e-7;

struct BoundReport {
  PerturbationKind kind = PerturbationKind::EdgeAddition;
  BoundParams params;
  double lambda_initial = 0.0;
  std::optional<double> lambda_final_exact;
  double bound = 0.0;
  // lambda_I + first-order gap; absent when lambda_I = 0 (edgeless host).
  std::optional<double> asymptotic_estimate;
  bool equality_case = false;
  std::optional<double> slack;  // bound - lambda_final_exact
};

// Whether the structural equality characterization holds:
//   VertexConnection: final graph is a cone over a regular graph at u;
//   EdgeAddition:     host is a double cone over a regular graph at u, v;
//   PendantEdge:      host is a cone over a regular graph at u.
bool equality_expected(const Graph& host, const Perturbation& p);

// Exact indices from the Jacobi eigensolver, the matching bound and the
// equality flag. Throws InvalidPerturbation for a bad perturbation and
// StructuralError when the perturbed graph is disconnected (or, for a pendant
// edge, the host is).
BoundReport analyze(const Graph& host, const Perturbation& p);

}  // namespace pbound

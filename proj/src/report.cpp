#include "pbound/report.hpp"

#include "pbound/errors.hpp"
#include "pbound/spectral.hpp"

namespace pbound {

bool equality_expected(const Graph& host, const Perturbation& p) {
  switch (p.kind) {
    case PerturbationKind::VertexConnection:
      return is_cone_over_regular(apply_perturbation(host, p), p.anchor);
    case PerturbationKind::EdgeAddition:
      return is_double_cone_over_regular(host, p.anchor, p.targets[0]);
    case PerturbationKind::PendantEdge:
      return is_cone_over_regular(host, p.anchor);
  }
  return false;
}

BoundReport analyze(const Graph& host, const Perturbation& p) {
  validate(host, p);
  const Graph final_graph = apply_perturbation(host, p);
  if (!is_connected(final_graph)) throw StructuralError("perturbed graph is not connected");
  if (p.kind == PerturbationKind::PendantEdge && !is_connected(host)) {
    throw StructuralError("pendant edge needs a connected host");
  }

  BoundReport r;
  r.kind = p.kind;
  r.params = bound_params(host, p);
  r.lambda_initial = largest_eigenvalue(host.adjacency());
  // Jacobi can leave -0.0 or a few ulps below zero for an edgeless host.
  if (r.lambda_initial < 0.0) r.lambda_initial = 0.0;
  r.lambda_final_exact = largest_eigenvalue(final_graph.adjacency());
  r.bound = bound({p.kind, r.lambda_initial, r.params});
  if (r.lambda_initial > 0.0) {
    r.asymptotic_estimate = r.lambda_initial + asymptotic_gap(p.kind, r.lambda_initial, r.params);
  }
  r.equality_case = equality_expected(host, p);
  r.slack = r.bound - *r.lambda_final_exact;
  return r;
}

}  // namespace pbound

#include "pbound/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "pbound/edge_list.hpp"
#include "pbound/errors.hpp"
#include "pbound/path.hpp"
#include "pbound/report.hpp"

namespace pbound {
namespace {

constexpr double kDerivativeTolerance = 1e-6;
constexpr double kInequalityTolerance = 1e-6;
constexpr std::size_t kMaxRecordedFailures = 10;

std::string fmt(double v) {
  std::ostringstream s;
  s.precision(12);
  s << v;
  return s.str();
}

class Checker {
 public:
  Checker(const VerifyConfig& config, VerifySummary& summary) : config_(config), summary_(summary) {}

  void run(const Instance& inst, bool inject) {
    const PerturbationKind kind = inst.perturbation.kind;
    switch (kind) {
      case PerturbationKind::VertexConnection: ++summary_.vertex_instances; break;
      case PerturbationKind::EdgeAddition: ++summary_.edge_instances; break;
      case PerturbationKind::PendantEdge: ++summary_.pendant_instances; break;
    }
    try {
      check(inst, inject);
    } catch (const std::exception& e) {
      fail(inst, "exception", e.what());
    }
  }

 private:
  void check(const Instance& inst, bool inject) {
    BoundReport r = analyze(inst.host, inst.perturbation);
    if (inject) {
      r.bound -= 1.0;
      r.slack = *r.slack - 1.0;
    }
    const double slack = *r.slack;
    if (first_) {
      summary_.max_bound_slack = summary_.min_bound_slack = slack;
      first_ = false;
    }
    summary_.max_bound_slack = std::max(summary_.max_bound_slack, slack);
    summary_.min_bound_slack = std::min(summary_.min_bound_slack, slack);
    summary_.max_bound_violation = std::max(summary_.max_bound_violation, -slack);
    if (slack < -config_.tolerance) {
      fail(inst, "bound validity", "lambda_F " + fmt(*r.lambda_final_exact) + " exceeds bound " + fmt(r.bound));
    }

    if (r.equality_case) {
      ++summary_.equality_instances;
      if (std::abs(slack) <= kEqualityTolerance) {
        ++summary_.equality_confirmed;
      } else {
        fail(inst, "equality case", "structural equality case but slack " + fmt(slack));
      }
    } else if (slack >= kStrictnessFloor) {
      ++summary_.strict_confirmed;
    } else {
      fail(inst, "strictness", "non-equality instance with slack " + fmt(slack));
    }

    const Path path = sample_path(inst.host, inst.perturbation, config_.path_steps);
    double derivative_error = 0.0;
    for (const PathSample& s : path.samples) {
      if (s.derivative_lhs && s.derivative_rhs) {
        derivative_error = std::max(derivative_error, std::abs(*s.derivative_lhs - *s.derivative_rhs));
      }
    }
    summary_.max_derivative_error = std::max(summary_.max_derivative_error, derivative_error);
    const InequalityCheck ineq = check_differential_inequality(path, path.kind, path.params);
    summary_.max_differential_violation = std::max(summary_.max_differential_violation, ineq.max_violation);
    const ComparisonCheck cmp = check_comparison(path, path.kind, path.params);
    summary_.max_comparison_violation = std::max(summary_.max_comparison_violation, cmp.max_violation);

    if (derivative_error > kDerivativeTolerance) {
      fail(inst, "derivative identity", "|<Px,x> - finite difference| = " + fmt(derivative_error));
    }
    if (ineq.max_violation > kInequalityTolerance) {
      fail(inst, "differential inequality", "violation " + fmt(ineq.max_violation));
    }
    if (r.equality_case && ineq.max_deviation > kInequalityTolerance) {
      fail(inst, "differential equality", "deviation " + fmt(ineq.max_deviation));
    }
    if (!cmp.holds(r.equality_case)) {
      fail(inst, "comparison", "max violation " + fmt(cmp.max_violation) +
                                   (r.equality_case ? ", not tight" : ", not strict"));
    }
  }

  void fail(const Instance& inst, std::string check, std::string detail) {
    if (summary_.failures.size() < kMaxRecordedFailures) {
      summary_.failures.push_back({std::move(check), std::move(detail), reproducer(inst)});
    } else if (summary_.failures.size() == kMaxRecordedFailures) {
      summary_.failures.push_back({"truncated", "further failures not recorded", ""});
    }
  }

  const VerifyConfig& config_;
  VerifySummary& summary_;
  bool first_ = true;
};

}  // namespace

std::string reproducer(const Instance& instance) {
  return format_edge_list(instance.host) + "# perturbation: " + instance.perturbation.describe() + "\n";
}

VerifySummary run_verification(const VerifyConfig& config) {
  if (config.trials == 0) throw DomainError("verify: trials must be at least 1");
  if (config.n_max < 3) throw DomainError("verify: n_max must be at least 3");
  VerifySummary summary;
  Checker checker(config, summary);

  const std::size_t n_eq = std::min<std::size_t>(config.n_max, 8);
  for (PerturbationKind kind : {PerturbationKind::VertexConnection, PerturbationKind::EdgeAddition,
                                PerturbationKind::PendantEdge}) {
    for (std::size_t n = 1; n <= n_eq; ++n) {
      for (std::size_t delta = 0; delta < n; ++delta) {
        if ((n * delta) % 2 != 0) continue;
        checker.run(equality_instance(kind, n, delta), false);
      }
    }
  }

  constexpr PerturbationKind kinds[] = {PerturbationKind::VertexConnection, PerturbationKind::EdgeAddition,
                                        PerturbationKind::PendantEdge};
  for (std::size_t trial = 0; trial < config.trials; ++trial) {
    Rng rng(derive_seed(config.seed, trial));
    const PerturbationKind kind = kinds[trial % 3];
    const double p = kEdgeProbabilities[(trial / 3) % 3];
    const std::size_t n = 3 + rng.below(config.n_max - 2);
    checker.run(random_instance(rng, kind, n, p), config.inject_failure && trial == 0);
  }
  return summary;
}

}  // namespace pbound

#include "pbound/path.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "pbound/errors.hpp"
#include "pbound/roots.hpp"
#include "pbound/spectral.hpp"

namespace pbound {

Path sample_path(const Graph& host, const Perturbation& p, std::size_t steps, const PathOptions& opts) {
  if (steps < 2) throw DomainError("sample_path: steps must be at least 2");
  validate(host, p);
  const Graph final_graph = apply_perturbation(host, p);
  if (!is_connected(final_graph)) throw StructuralError("perturbed graph is not connected");

  const std::size_t dim = final_graph.vertex_count();
  const SymMatrix a0 = host.adjacency().padded(dim);
  const SymMatrix pm = perturbation_matrix(host, p);
  const double h = opts.h > 0.0 ? opts.h : std::min(1e-5, 0.25 / static_cast<double>(steps));
  PerronOptions popts;
  popts.tol = opts.perron_tol;

  auto at = [&](double t) { return a0.plus_scaled(pm, t); };

  Path path;
  path.kind = p.kind;
  path.params = bound_params(host, p);
  path.samples.reserve(steps + 1);

  Vector seed;
  for (std::size_t k = 0; k <= steps; ++k) {
    PathSample s;
    s.t = static_cast<double>(k) / static_cast<double>(steps);
    PerronPair pair = k == 0 ? perron_by_components(at(0.0), popts) : perron(at(s.t), popts, seed);
    s.lambda = pair.lambda;
    s.x = std::move(pair.x);
    if (k > 0 && k < steps) {
      const double up = perron(at(s.t + h), popts, s.x).lambda;
      const double down = perron(at(s.t - h), popts, s.x).lambda;
      s.derivative_lhs = (up - down) / (2.0 * h);
      s.derivative_rhs = lambda_derivative(pm, s.x);
    }
    seed = s.x;
    path.samples.push_back(std::move(s));
  }
  return path;
}

double inequality_rhs(PerturbationKind kind, const BoundParams& params, double t, double lambda) {
  switch (kind) {
    case PerturbationKind::VertexConnection: {
      const double g = params.g;
      return 2.0 * g * t * lambda / (lambda * lambda + g * t * t);
    }
    case PerturbationKind::EdgeAddition: {
      const double d = params.delta_u + params.delta_v;
      return d / ((lambda - t) * (lambda - t) + d);
    }
    case PerturbationKind::PendantEdge: {
      const double d = params.delta_u;
      const double diff = lambda * lambda - t * t;
      return 2.0 * lambda * t * d / (diff * diff + d * (lambda * lambda + t * t));
    }
  }
  throw DomainError("inequality_rhs: unknown perturbation kind");
}

InequalityCheck check_differential_inequality(const Path& path, PerturbationKind kind,
                                              const BoundParams& params) {
  if (kind != path.kind) {
    throw std::invalid_argument("check_differential_inequality: path was sampled for a '" +
                                to_string(path.kind) + "' perturbation, not '" + to_string(kind) + "'");
  }
  InequalityCheck out;
  out.max_violation = -std::numeric_limits<double>::infinity();
  out.min_slack = std::numeric_limits<double>::infinity();
  for (const PathSample& s : path.samples) {
    if (!s.derivative_rhs) continue;
    const double diff = *s.derivative_rhs - inequality_rhs(kind, params, s.t, s.lambda);
    out.max_violation = std::max(out.max_violation, diff);
    out.max_deviation = std::max(out.max_deviation, std::abs(diff));
    out.min_slack = std::min(out.min_slack, -diff);
    ++out.points;
  }
  if (out.points == 0) {
    out.max_violation = 0.0;
    out.min_slack = 0.0;
  }
  return out;
}

namespace {

double pendant_comparison(double lambda_initial, double delta_u, double t) {
  constexpr int kSteps = 10000;
  const BoundParams params{0.0, delta_u, 0.0};
  auto f = [&](double s, double y) { return inequality_rhs(PerturbationKind::PendantEdge, params, s, y); };
  const double h = t / kSteps;
  double y = lambda_initial;
  for (int i = 0; i < kSteps; ++i) {
    const double s = h * i;
    const double k1 = f(s, y);
    const double k2 = f(s + 0.5 * h, y + 0.5 * h * k1);
    const double k3 = f(s + 0.5 * h, y + 0.5 * h * k2);
    const double k4 = f(s + h, y + h * k3);
    y += h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  }
  return y;
}

}  // namespace

double comparison_solution(PerturbationKind kind, const BoundParams& params, double lambda_initial,
                           double t) {
  if (t < 0.0 || t > 1.0) throw DomainError("comparison_solution: t must lie in [0, 1]");
  if (lambda_initial < 0.0) throw DomainError("comparison_solution: negative index");
  // Shared initial condition, returned exactly.
  if (t == 0.0 && (kind == PerturbationKind::VertexConnection || lambda_initial > 0.0)) {
    return lambda_initial;
  }
  switch (kind) {
    case PerturbationKind::VertexConnection: {
      const double c = params.g * t * t;
      const double s = std::sqrt(lambda_initial * lambda_initial + 4.0 * c);
      return 0.5 * (lambda_initial + s);
    }
    case PerturbationKind::EdgeAddition: {
      if (!(lambda_initial > 0.0)) throw DomainError("comparison_solution: index must be positive");
      const double d = params.delta_u + params.delta_v;
      const double c = lambda_initial - d / lambda_initial;
      const double s = std::sqrt((t - c) * (t - c) + 4.0 * d);
      const double sum = t + c;
      if (sum >= 0.0) return 0.5 * (sum + s);
      return 2.0 * (t * c - d) / (sum - s);
    }
    case PerturbationKind::PendantEdge:
      if (!(lambda_initial > 0.0)) throw DomainError("comparison_solution: index must be positive");
      return pendant_comparison(lambda_initial, params.delta_u, t);
  }
  throw DomainError("comparison_solution: unknown perturbation kind");
}

ComparisonCheck check_comparison(const Path& path, PerturbationKind kind, const BoundParams& params) {
  ComparisonCheck out;
  const double lambda_initial = path.lambda_initial();
  for (const PathSample& s : path.samples) {
    const double u = comparison_solution(kind, params, lambda_initial, s.t);
    const double margin = u - s.lambda;
    out.comparison.push_back(u);
    out.margin.push_back(margin);
    out.max_violation = std::max(out.max_violation, -margin);
    if (margin < -kDominanceSlack) out.dominated = false;
    if (s.t > 0.0 && !(margin > 0.0)) out.strict = false;
    if (std::abs(margin) > kTightness) out.tight = false;
  }
  return out;
}

namespace {

void check_join_args(std::size_t n, std::size_t delta, double t) {
  if (n == 0) throw DomainError("closed form: n must be at least 1");
  if (delta >= n) throw DomainError("closed form: a regular graph on n vertices has degree < n");
  if (!(t > 0.0 && t <= 1.0)) throw DomainError("closed form: t must lie in (0, 1]");
}

}  // namespace

JoinSolution closed_form_vertex_join(std::size_t n, std::size_t delta, double t) {
  check_join_args(n, delta, t);
  const double d = static_cast<double>(delta);
  const double nn = static_cast<double>(n);
  JoinSolution s;
  s.lambda = 0.5 * d + std::sqrt(0.25 * d * d + nn * t * t);
  s.alpha = std::sqrt((s.lambda - d) / (2.0 * s.lambda - d));
  s.beta = std::sqrt(s.lambda / (nn * (2.0 * s.lambda - d)));
  return s;
}

JoinSolution closed_form_edge_join(std::size_t n, std::size_t delta, double t) {
  check_join_args(n, delta, t);
  const double d = static_cast<double>(delta);
  const double nn = static_cast<double>(n);
  const double root = std::sqrt((d - t) * (d - t) + 8.0 * nn);
  const double ratio = (d - t) / root;
  JoinSolution s;
  s.lambda = 0.5 * (t + d + root);
  s.alpha = 0.5 * std::sqrt(1.0 - ratio);
  s.gamma = std::sqrt(1.0 + ratio) / std::sqrt(2.0 * nn);
  return s;
}

JoinSolution closed_form_pendant_join(std::size_t n, std::size_t delta, double t) {
  check_join_args(n, delta, t);
  const double d = static_cast<double>(delta);
  const double nn = static_cast<double>(n);
  const double t2 = t * t;
  // Largest root of l^3 - d l^2 - (n + t^2) l + d t^2; it is the only root
  // above max(d, t).
  auto cubic = [=](double l) {
    return std::pair{((l - d) * l - (nn + t2)) * l + d * t2, (3.0 * l - 2.0 * d) * l - (nn + t2)};
  };
  const double lo = std::max(d, t);
  const double hi = d + t + nn + 1.0;
  JoinSolution s;
  s.lambda = bracketed_newton(cubic, lo, hi, 0.0);
  const double l = s.lambda;
  s.norm_squared = (l - d) * (l - d) * (t2 + l * l) + nn * l * l;
  s.closed_form_norm_squared = 2.0 * (nn + t2) * l * l - d * (nn + t + 3.0 * t2) * l + 2.0 * t2 * d * d;
  const double norm = std::sqrt(*s.norm_squared);
  s.alpha = (l - d) * t / norm;
  s.beta = (l - d) * l / norm;
  s.gamma = l / norm;
  return s;
}

void write_path_tsv(std::ostream& out, const Path& path, const ComparisonCheck& comparison) {
  const auto old_flags = out.flags();
  const auto old_precision = out.precision();
  out << std::setprecision(12);
  out << "# t\tlambda\tderivative_lhs\tderivative_rhs\tcomparison_u\tmargin\n";
  auto opt = [&](const std::optional<double>& v) {
    if (v) {
      out << *v;
    } else {
      out << "nan";
    }
  };
  for (std::size_t k = 0; k < path.samples.size(); ++k) {
    const PathSample& s = path.samples[k];
    out << s.t << '\t' << s.lambda << '\t';
    opt(s.derivative_lhs);
    out << '\t';
    opt(s.derivative_rhs);
    out << '\t' << comparison.comparison.at(k) << '\t' << comparison.margin.at(k) << '\n';
  }
  out.flags(old_flags);
  out.precision(old_precision);
}

}  // namespace pbound

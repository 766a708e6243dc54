#include "pbound/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include "pbound/edge_list.hpp"
#include "pbound/errors.hpp"
#include "pbound/generators.hpp"
#include "pbound/path.hpp"
#include "pbound/spectral.hpp"
#include "pbound/verify.hpp"

namespace pbound::cli {

using nlohmann::json;

double round12(double value) {
  if (!std::isfinite(value)) return value;
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return std::strtod(buf, nullptr);
}

namespace {

json number_or_null(const std::optional<double>& v) { return v ? json(round12(*v)) : json(nullptr); }

json optional_to_json(const std::optional<double>& v) { return number_or_null(v); }

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

void write_tsv_value(std::ostream& out, const std::optional<double>& v) {
  if (v) {
    out << *v;
  } else {
    out << "nan";
  }
}

int cmd_bound(const RunConfig& cfg, std::ostream& out) {
  const Graph host = load_edge_list(*cfg.input_path);
  const Perturbation p = parse_perturbation(cfg.perturbation);
  const BoundReport r = analyze(host, p);
  if (cfg.format == Format::Json) {
    out << report_to_json(r).dump(2) << '\n';
  } else {
    out.precision(12);
    out << "lambda_I\tlambda_F_exact\tbound\tasymptotic_estimate\tequality_case\tslack\n";
    out << r.lambda_initial << '\t';
    write_tsv_value(out, r.lambda_final_exact);
    out << '\t' << r.bound << '\t';
    write_tsv_value(out, r.asymptotic_estimate);
    out << '\t' << (r.equality_case ? "true" : "false") << '\t';
    write_tsv_value(out, r.slack);
    out << '\n';
  }
  return kOk;
}

int cmd_path(const RunConfig& cfg, std::size_t steps, std::ostream& out, std::ostream& err) {
  const Graph host = load_edge_list(*cfg.input_path);
  const Perturbation p = parse_perturbation(cfg.perturbation);
  if (steps < 2) {
    err << "error: --steps must be at least 2\n";
    return kUsageError;
  }
  const Path path = sample_path(host, p, steps);
  const ComparisonCheck cmp = check_comparison(path, path.kind, path.params);
  if (cfg.format == Format::Tsv) {
    write_path_tsv(out, path, cmp);
    return kOk;
  }
  json rows = json::array();
  for (std::size_t k = 0; k < path.samples.size(); ++k) {
    const PathSample& s = path.samples[k];
    rows.push_back({{"t", round12(s.t)},
                    {"lambda", round12(s.lambda)},
                    {"derivative_lhs", optional_to_json(s.derivative_lhs)},
                    {"derivative_rhs", optional_to_json(s.derivative_rhs)},
                    {"comparison_u", round12(cmp.comparison[k])},
                    {"margin", round12(cmp.margin[k])}});
  }
  out << rows.dump(2) << '\n';
  return kOk;
}

int cmd_verify(const VerifyConfig& vc, std::ostream& out, std::ostream& err) {
  const VerifySummary s = run_verification(vc);
  json j = {
      {"seed", vc.seed},
      {"trials", vc.trials},
      {"n_max", vc.n_max},
      {"instances",
       {{"vertex", s.vertex_instances}, {"edge", s.edge_instances}, {"pendant", s.pendant_instances}}},
      {"equality_instances", s.equality_instances},
      {"equality_confirmed", s.equality_confirmed},
      {"strict_confirmed", s.strict_confirmed},
      {"max_bound_slack", round12(s.max_bound_slack)},
      {"min_bound_slack", round12(s.min_bound_slack)},
      {"max_bound_violation", round12(s.max_bound_violation)},
      {"max_derivative_error", round12(s.max_derivative_error)},
      {"max_differential_violation", round12(s.max_differential_violation)},
      {"max_comparison_violation", round12(s.max_comparison_violation)},
      {"failures", s.failures.size()},
      {"ok", s.ok()},
  };
  out << j.dump(2) << '\n';
  for (const VerifyFailure& f : s.failures) {
    err << "FAILED " << f.check << ": " << f.detail << '\n' << f.reproducer;
  }
  return s.ok() ? kOk : kInvariantFailure;
}

int cmd_construct(const std::string& kind_name, std::size_t n, std::size_t delta,
                  const std::optional<std::string>& graph_out, std::ostream& out, std::ostream& err) {
  PerturbationKind kind;
  if (kind_name == "vertex") {
    kind = PerturbationKind::VertexConnection;
  } else if (kind_name == "edge") {
    kind = PerturbationKind::EdgeAddition;
  } else if (kind_name == "pendant") {
    kind = PerturbationKind::PendantEdge;
  } else {
    err << "error: kind must be vertex, edge or pendant\n";
    return kUsageError;
  }
  const Instance inst = equality_instance(kind, n, delta);
  const double d = static_cast<double>(delta);
  const double nn = static_cast<double>(n);

  double lambda_i = 0.0;
  double lambda_f = 0.0;
  double expected_bound = 0.0;
  switch (kind) {
    case PerturbationKind::VertexConnection:
      lambda_i = d;
      lambda_f = closed_form_vertex_join(n, delta, 1.0).lambda;
      expected_bound = bound_vertex_connection(lambda_i, nn);
      break;
    case PerturbationKind::EdgeAddition:
      lambda_i = 0.5 * (d + std::sqrt(d * d + 8.0 * nn));
      lambda_f = closed_form_edge_join(n, delta, 1.0).lambda;
      expected_bound = bound_edge_addition(lambda_i, nn, nn);
      break;
    case PerturbationKind::PendantEdge:
      lambda_i = closed_form_vertex_join(n, delta, 1.0).lambda;
      lambda_f = closed_form_pendant_join(n, delta, 1.0).lambda;
      expected_bound = bound_pendant_edge(lambda_i, nn);
      break;
  }
  const BoundReport r = analyze(inst.host, inst.perturbation);
  constexpr double kAgreement = 1e-9;
  const bool agrees = std::abs(lambda_i - r.lambda_initial) <= kAgreement &&
                      std::abs(lambda_f - *r.lambda_final_exact) <= kAgreement &&
                      std::abs(expected_bound - r.bound) <= kAgreement && r.equality_case &&
                      std::abs(*r.slack) <= kAgreement;

  const std::string edges = format_edge_list(inst.host);
  if (graph_out) {
    std::ofstream f(*graph_out);
    if (!f) {
      err << "error: cannot write '" << *graph_out << "'\n";
      return kUsageError;
    }
    f << edges;
  }
  json j = {
      {"kind", kind_name},
      {"n", n},
      {"delta", delta},
      {"edge_list", edges},
      {"perturbation", inst.perturbation.describe()},
      {"closed_form", {{"lambda_I", round12(lambda_i)}, {"lambda_F", round12(lambda_f)}, {"bound", round12(expected_bound)}}},
      {"report", report_to_json(r)},
      {"agrees", agrees},
  };
  out << j.dump(2) << '\n';
  if (!agrees) err << "error: closed form and eigensolver disagree\n";
  return agrees ? kOk : kInvariantFailure;
}

}  // namespace

json report_to_json(const BoundReport& r) {
  return {
      {"lambda_I", round12(r.lambda_initial)},
      {"lambda_F_exact", number_or_null(r.lambda_final_exact)},
      {"bound", round12(r.bound)},
      {"asymptotic_estimate", number_or_null(r.asymptotic_estimate)},
      {"equality_case", r.equality_case},
      {"slack", number_or_null(r.slack)},
  };
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Index bounds for locally perturbed graphs", "pbound"};
  app.require_subcommand(1);

  RunConfig cfg;
  std::string format = "json";
  std::vector<std::string> spec_tokens;
  std::string input;
  std::size_t steps = 32;
  std::uint64_t seed = 42;
  std::size_t trials = 500;
  std::size_t n_max = 9;
  double tolerance = 1e-9;
  bool inject_failure = false;
  std::string kind_name;
  std::size_t n = 0;
  std::size_t delta = 0;
  std::string graph_out;

  auto* bound_cmd = app.add_subcommand("bound", "Bound the index of a perturbed graph");
  bound_cmd->add_option("graph", input, "Edge-list file")->required();
  bound_cmd->add_option("perturbation", spec_tokens,
                        "'vertex u v1 .. vg' | 'edge u v' | 'pendant u'")->required();
  bound_cmd->add_option("--format", format, "json (default) or tsv")->check(CLI::IsMember({"json", "tsv"}));

  auto* path_cmd = app.add_subcommand("path", "Sample lambda(t) along the continuous perturbation");
  path_cmd->add_option("graph", input, "Edge-list file")->required();
  path_cmd->add_option("perturbation", spec_tokens, "Perturbation spec")->required();
  path_cmd->add_option("--steps", steps, "Grid intervals, at least 2 (default 32)");
  path_cmd->add_option("--format", format, "tsv (default) or json")->check(CLI::IsMember({"json", "tsv"}));

  auto* verify_cmd = app.add_subcommand("verify", "Randomized check of every bound invariant");
  verify_cmd->add_option("--seed", seed, "Master seed (default 42)");
  verify_cmd->add_option("--trials", trials, "Random instances (default 500)")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--n-max", n_max, "Largest instance size (default 9)")->check(CLI::Range(std::size_t{3}, std::size_t{64}));
  verify_cmd->add_option("--steps", steps, "Path grid intervals per instance (default 16)");
  verify_cmd->add_option("--tolerance", tolerance, "Validity slack, exploratory runs only (default 1e-9)");
  verify_cmd->add_flag("--inject-failure", inject_failure, "Debug: corrupt the first bound");

  auto* construct_cmd = app.add_subcommand("construct", "Emit an equality-case instance");
  construct_cmd->add_option("kind", kind_name, "vertex | edge | pendant")->required();
  construct_cmd->add_option("n", n, "Vertices of the regular graph")->required();
  construct_cmd->add_option("delta", delta, "Its degree")->required();
  construct_cmd->add_option("--graph-out", graph_out, "Also write the host edge list here");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  cfg.input_path = input;
  cfg.perturbation = join_tokens(spec_tokens);
  cfg.format = format == "tsv" ? Format::Tsv : Format::Json;

  try {
    if (bound_cmd->parsed()) {
      cfg.command = "bound";
      return cmd_bound(cfg, out);
    }
    if (path_cmd->parsed()) {
      cfg.command = "path";
      if (!path_cmd->count("--format")) cfg.format = Format::Tsv;
      return cmd_path(cfg, steps, out, err);
    }
    if (verify_cmd->parsed()) {
      VerifyConfig vc;
      vc.seed = seed;
      vc.trials = trials;
      vc.n_max = n_max;
      vc.tolerance = tolerance;
      vc.inject_failure = inject_failure;
      if (verify_cmd->count("--steps")) {
        if (steps < 2) {
          err << "error: --steps must be at least 2\n";
          return kUsageError;
        }
        vc.path_steps = steps;
      }
      return cmd_verify(vc, out, err);
    }
    return cmd_construct(kind_name, n, delta,
                         graph_out.empty() ? std::nullopt : std::optional<std::string>(graph_out), out, err);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParseError;
  } catch (const InvalidPerturbation& e) {
    err << "invalid perturbation: " << e.what() << '\n';
    return kUsageError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const StructuralError& e) {
    err << "error: " << e.what() << '\n';
    return kStructuralError;
  } catch (const SolverError& e) {
    err << "solver failure: " << e.what() << '\n';
    return kInvariantFailure;
  }
}

}  // namespace pbound::cli

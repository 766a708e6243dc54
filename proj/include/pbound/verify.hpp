#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pbound/generators.hpp"

namespace pbound {

struct VerifyConfig {
  std::uint64_t seed = 42;
  std::size_t trials = 500;
  std::size_t n_max = 9;
  // Allowed amount by which an exact index may exceed its bound.
  double tolerance = 1e-9;
  std::size_t path_steps = 16;
  // Debug: lower the first random instance's bound by 1 so the harness must
  // report it.
  bool inject_failure = false;
};

struct VerifyFailure {
  std::string check;
  std::string detail;
  std::string reproducer;  // edge list followed by "# perturbation: ..."
};

struct VerifySummary {
  std::size_t vertex_instances = 0;
  std::size_t edge_instances = 0;
  std::size_t pendant_instances = 0;
  std::size_t equality_instances = 0;
  std::size_t equality_confirmed = 0;
  std::size_t strict_confirmed = 0;
  double max_bound_slack = 0.0;
  double min_bound_slack = 0.0;
  double max_bound_violation = 0.0;         // max(lambda_F - bound), must be <= tolerance
  double max_derivative_error = 0.0;        // |<Px,x> - finite difference|, must be <= 1e-6
  double max_differential_violation = 0.0;  // max(<Px,x> - f), must be <= 1e-6
  double max_comparison_violation = 0.0;    // max(lambda - u), must be <= 1e-9
  std::vector<VerifyFailure> failures;

  bool ok() const { return failures.empty(); }
};

// Every constructible equality case with n <= min(n_max, 8), then `trials`
// random instances. Trial i draws from Rng(derive_seed(seed, i)); its kind is
// i mod 3, its edge probability cycles through 0.3, 0.5, 0.8 and its size is
// uniform on [3, n_max].
VerifySummary run_verification(const VerifyConfig& config);

std::string reproducer(const Instance& instance);

}  // namespace pbound

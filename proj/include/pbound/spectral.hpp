#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pbound/matrix.hpp"

namespace pbound {

// Spectral radius with its unit-norm nonnegative eigenvector.
struct PerronPair {
  double lambda = 0.0;
  Vector x;
  std::size_t iterations = 0;
  double residual = 0.0;  // ||A x - lambda x||_2
};

struct PerronOptions {
  double tol = 1e-11;
  // Power iteration runs on A + shift*I so that lambda_1 is strictly dominant
  // even when -lambda_1 is also an eigenvalue (bipartite graphs).
  double shift = 1.0;
  // 0 selects the default cap, see perron_iteration_cap().
  std::size_t max_iterations = 0;
};

// ceil(200 dim ln dim), with dim taken as at least 2.
std::size_t perron_iteration_cap(std::size_t dim);

// Perron pair of a symmetric, nonnegative, connected matrix by shifted power
// iteration. `start`, when given, seeds the iteration (its absolute values are
// blended with the uniform vector so the start stays strictly positive).
//
// Stops once the residual is below max(opts.tol, 16 eps (lambda + shift) sqrt(dim)),
// the second term being the rounding level of A x. If the iteration cap is
// reached first (lambda_2 close to lambda_1), finishes with at most 100 steps of
// inverse iteration shifted by the Collatz-Wielandt upper bound on lambda_1.
//
// Throws StructuralError for a disconnected or negative matrix, SolverError if
// neither phase reaches the tolerance. `iterations` counts both phases.
PerronPair perron(const SymMatrix& a, const PerronOptions& opts = {},
                  std::span<const double> start = {});

// Like perron(), but accepts disconnected matrices: lambda is the maximum of
// the components' Perron values and x is that component's Perron vector
// padded with zeros.
PerronPair perron_by_components(const SymMatrix& a, const PerronOptions& opts = {},
                                std::span<const double> start = {});

struct EigenSystem {
  Vector values;               // nonincreasing
  std::vector<Vector> vectors; // vectors[k] is the unit eigenvector for values[k]
};

// Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below
// 1e-12. Throws SolverError if that takes more than 100 sweeps.
EigenSystem jacobi_eigensystem(const SymMatrix& a);

// All eigenvalues, nonincreasing.
Vector full_spectrum(const SymMatrix& a);

// Largest eigenvalue from the Jacobi solver. For a nonnegative matrix this is
// the spectral radius, connected or not.
double largest_eigenvalue(const SymMatrix& a);

// <Ax, x> / <x, x>. Throws DomainError for x = 0.
double rayleigh_quotient(const SymMatrix& a, std::span<const double> x);

// Derivative of the spectral radius along A + tP: <Px, x> for the unit
// Perron vector x. Throws DomainError if | ||x|| - 1 | > 1e-9.
double lambda_derivative(const SymMatrix& p, std::span<const double> x);

}  // namespace pbound

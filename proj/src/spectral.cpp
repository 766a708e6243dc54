#include "pbound/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "pbound/errors.hpp"

namespace pbound {

std::size_t perron_iteration_cap(std::size_t dim) {
  const double d = static_cast<double>(std::max<std::size_t>(dim, 2));
  return static_cast<std::size_t>(std::ceil(200.0 * d * std::log(d)));
}

namespace {

constexpr std::size_t kInverseSteps = 100;

// Rayleigh quotient of unit x, and whether ||A x - lambda x|| is small enough.
// Rounding in A x alone leaves a residual of order eps * lambda * sqrt(n),
// which exceeds a fixed tolerance on large dense matrices.
struct Progress {
  double lambda = 0.0;
  double residual = 0.0;
  bool converged = false;
};

Progress measure(const SymMatrix& a, const Vector& x, Vector& ax, const PerronOptions& opts) {
  a.multiply(x, ax);
  Progress p;
  p.lambda = dot(x, ax);
  double r2 = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = ax[i] - p.lambda * x[i];
    r2 += d * d;
  }
  p.residual = std::sqrt(r2);
  const double floor = 16.0 * std::numeric_limits<double>::epsilon() * (std::abs(p.lambda) + opts.shift) *
                       std::sqrt(static_cast<double>(x.size()));
  p.converged = p.residual <= std::max(opts.tol, floor);
  return p;
}

// Solves m y = b by Gaussian elimination with partial pivoting. Pivots smaller
// than `pivot_floor` are raised to it, so a matrix that is singular to working
// precision still returns its near-null direction, as inverse iteration needs.
Vector solve(std::vector<double> m, Vector b, double pivot_floor) {
  const std::size_t n = b.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    for (std::size_t i = k + 1; i < n; ++i)
      if (std::abs(m[i * n + k]) > std::abs(m[piv * n + k])) piv = i;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m[k * n + j], m[piv * n + j]);
      std::swap(b[k], b[piv]);
    }
    if (std::abs(m[k * n + k]) < pivot_floor) m[k * n + k] = m[k * n + k] < 0.0 ? -pivot_floor : pivot_floor;
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = m[i * n + k] / m[k * n + k];
      if (f == 0.0) continue;
      for (std::size_t j = k; j < n; ++j) m[i * n + j] -= f * m[k * n + j];
      b[i] -= f * b[k];
    }
  }
  for (std::size_t k = n; k-- > 0;) {
    double v = b[k];
    for (std::size_t j = k + 1; j < n; ++j) v -= m[k * n + j] * b[j];
    b[k] = v / m[k * n + k];
  }
  return b;
}

}  // namespace

PerronPair perron(const SymMatrix& a, const PerronOptions& opts, std::span<const double> start) {
  const std::size_t n = a.dim();
  if (n == 0) throw DomainError("perron: empty matrix");
  if (!(opts.tol > 0.0)) throw DomainError("perron: tolerance must be positive");
  if (!a.is_nonnegative()) throw StructuralError("perron: matrix has negative entries");
  if (!a.is_connected()) throw StructuralError("perron: matrix is not connected");

  Vector x(n, 1.0);
  if (start.size() == n) {
    const double blend = 1e-3 / std::sqrt(static_cast<double>(n));
    for (std::size_t i = 0; i < n; ++i) x[i] = std::abs(start[i]) + blend;
  }
  double nx = norm2(x);
  for (double& v : x) v /= nx;

  const std::size_t cap = opts.max_iterations ? opts.max_iterations : perron_iteration_cap(n);
  Vector ax(n);
  PerronPair out;
  Progress p = measure(a, x, ax, opts);
  std::size_t it = 0;
  for (; !p.converged && it < cap; ++it) {
    for (std::size_t i = 0; i < n; ++i) ax[i] += opts.shift * x[i];
    nx = norm2(ax);
    for (std::size_t i = 0; i < n; ++i) x[i] = ax[i] / nx;
    p = measure(a, x, ax, opts);
  }

  // Power iteration stalls when lambda_2 is close to lambda_1, e.g. along a
  // path leaving a disconnected A(0) whose components share the same index.
  // Inverse iteration shifted by the Collatz-Wielandt bound
  // sigma = max_i (A x)_i / x_i >= lambda_1 keeps (sigma I - A)^-1 positive and
  // converges at rate (sigma - lambda_1) / (sigma - lambda_2).
  double scale = 0.0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) scale = std::max(scale, std::abs(a(i, j)));
  for (std::size_t step = 0; !p.converged && step < kInverseSteps; ++step, ++it) {
    double sigma = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      if (x[i] > 0.0) sigma = std::max(sigma, ax[i] / x[i]);
    std::vector<double> m(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m[i * n + j] = (i == j ? sigma : 0.0) - a(i, j);
    Vector y = solve(std::move(m), x, std::numeric_limits<double>::epsilon() * (sigma + scale * n));
    for (double& v : y) v = std::abs(v);
    nx = norm2(y);
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / nx;
    p = measure(a, x, ax, opts);
  }
  if (!p.converged) {
    throw SolverError("perron: no convergence after " + std::to_string(it) + " iterations (residual " +
                      std::to_string(p.residual) + ")");
  }
  out.lambda = p.lambda;
  out.iterations = it;
  out.residual = p.residual;
  out.x = std::move(x);
  return out;
}

PerronPair perron_by_components(const SymMatrix& a, const PerronOptions& opts,
                                std::span<const double> start) {
  const std::size_t n = a.dim();
  if (n == 0) throw DomainError("perron: empty matrix");
  if (!a.is_nonnegative()) throw StructuralError("perron: matrix has negative entries");
  const auto parts = a.components();
  if (parts.size() == 1) return perron(a, opts, start);

  PerronPair best;
  best.lambda = -1.0;
  std::vector<std::size_t> best_part;
  for (const auto& part : parts) {
    const SymMatrix sub = a.principal_submatrix(part);
    Vector seed;
    if (start.size() == n) {
      for (std::size_t i : part) seed.push_back(start[i]);
    }
    PerronPair p = perron(sub, opts, seed);
    if (p.lambda > best.lambda) {
      best = std::move(p);
      best_part = part;
    }
  }
  Vector x(n, 0.0);
  for (std::size_t k = 0; k < best_part.size(); ++k) x[best_part[k]] = best.x[k];
  best.x = std::move(x);
  return best;
}

EigenSystem jacobi_eigensystem(const SymMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<double> a(n * n);
  std::vector<double> v(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i * n + j] = m(i, j);
    v[i * n + i] = 1.0;
  }
  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += 2.0 * a[i * n + j] * a[i * n + j];
    return std::sqrt(s);
  };

  constexpr int kMaxSweeps = 100;
  int sweep = 0;
  while (off_norm() >= 1e-12) {
    if (++sweep > kMaxSweeps) throw SolverError("jacobi: no convergence after 100 sweeps");
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (apq == 0.0) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        double t;
        if (std::abs(theta) > 1e150) {
          t = 0.5 / theta;
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = a[p * n + k] = c * akp - s * akq;
          a[k * n + q] = a[q * n + k] = s * akp + c * akq;
        }
        a[p * n + p] -= t * apq;
        a[q * n + q] += t * apq;
        a[p * n + q] = a[q * n + p] = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = v[k * n + p];
          const double vkq = v[k * n + q];
          v[k * n + p] = c * vkp - s * vkq;
          v[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });
  EigenSystem out;
  for (std::size_t k : order) {
    out.values.push_back(a[k * n + k]);
    Vector col(n);
    for (std::size_t i = 0; i < n; ++i) col[i] = v[i * n + k];
    out.vectors.push_back(std::move(col));
  }
  return out;
}

Vector full_spectrum(const SymMatrix& a) { return jacobi_eigensystem(a).values; }

double largest_eigenvalue(const SymMatrix& a) {
  if (a.dim() == 0) throw DomainError("largest_eigenvalue: empty matrix");
  return full_spectrum(a).front();
}

double rayleigh_quotient(const SymMatrix& a, std::span<const double> x) {
  const double xx = dot(x, x);
  if (xx == 0.0) throw DomainError("rayleigh_quotient: zero vector");
  return dot(a * x, x) / xx;
}

double lambda_derivative(const SymMatrix& p, std::span<const double> x) {
  if (std::abs(norm2(x) - 1.0) > 1e-9) throw DomainError("lambda_derivative: x is not unit norm");
  return dot(p * x, x);
}

}  // namespace pbound

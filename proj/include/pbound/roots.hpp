#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "pbound/errors.hpp"

namespace pbound {

// Newton's method safeguarded by bisection on a sign-changing bracket [lo, hi].
// `f` returns {value, derivative}. Stops when |f| <= value_tol, when a Newton
// step or the bracket shrinks to a few ulps, or throws SolverError after 200
// steps.
template <typename F>
double bracketed_newton(F&& f, double lo, double hi, double value_tol = 1e-12) {
  auto [flo, dlo] = f(lo);
  auto [fhi, dhi] = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0)) throw SolverError("bracketed_newton: no sign change on bracket");
  const bool rising = fhi > 0.0;
  double x = 0.5 * (lo + hi);
  for (int it = 0; it < 200; ++it) {
    auto [fx, dfx] = f(x);
    if (std::abs(fx) <= value_tol || fx == 0.0) return x;
    if ((fx > 0.0) == rising) {
      hi = x;
    } else {
      lo = x;
    }
    if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(lo), std::abs(hi))) {
      return 0.5 * (lo + hi);
    }
    double next = dfx != 0.0 ? x - fx / dfx : lo - 1.0;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    } else if (std::abs(next - x) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(x)) {
      return next;
    }
    x = next;
  }
  throw SolverError("bracketed_newton: iteration limit reached");
}

}  // namespace pbound

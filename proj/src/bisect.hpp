#pragma once

#include <cmath>

#include "h2tea/errors.hpp"

namespace h2tea::detail {

// Root of a continuous f on [lo, hi] with f(lo) and f(hi) of opposite sign
// (or one of them zero). Stops when |f| <= f_tol or the bracket collapses to
// adjacent doubles.
template <class F>
double bisect(F&& f, double lo, double hi, double f_tol, int max_iter = 2000) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if (std::signbit(flo) == std::signbit(fhi)) {
    throw solver_error("root is not bracketed", lo, hi);
  }
  for (int i = 0; i < max_iter; ++i) {
    double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) return mid;
    double fm = f(mid);
    if (std::fabs(fm) <= f_tol) return mid;
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  throw solver_error("bisection did not converge", lo, hi);
}

}  // namespace h2tea::detail

#pragma once

#include <functional>

namespace wqed::numerics {

/// Sign-changing bracket [lo, hi] with cached endpoint values.
struct Bracket {
  double lo;
  double hi;
  double f_lo;
  double f_hi;

  /// Throws DomainError unless lo < hi and f_lo, f_hi have opposite signs.
  void validate() const;
};

/// Bisection. Returns the midpoint x of the current bracket as soon as
/// |f(x)| <= tol or the bracket width drops to x_tol (defaults to tol).
/// Never evaluates f outside [lo, hi]. Throws MaxIterationsError.
double find_root(const std::function<double(double)>& f, Bracket bracket, double tol,
                 int max_iter, double x_tol = -1.0);

}  // namespace wqed::numerics

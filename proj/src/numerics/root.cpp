#include "wqed/numerics/root.hpp"

#include <cmath>
#include <string>

#include "wqed/errors.hpp"

namespace wqed::numerics {

void Bracket::validate() const {
  if (!(lo < hi)) throw DomainError("Bracket: lo must be < hi");
  if (!std::isfinite(f_lo) || !std::isfinite(f_hi)) {
    throw DomainError("Bracket: endpoint values must be finite");
  }
  if (f_lo == 0.0 || f_hi == 0.0) return;
  if (std::signbit(f_lo) == std::signbit(f_hi)) {
    throw DomainError("Bracket: endpoint values must change sign");
  }
}

double find_root(const std::function<double(double)>& f, Bracket b, double tol, int max_iter,
                 double x_tol) {
  b.validate();
  if (b.f_lo == 0.0) return b.lo;
  if (b.f_hi == 0.0) return b.hi;
  if (x_tol < 0.0) x_tol = tol;
  for (int it = 0; it < max_iter; ++it) {
    const double mid = b.lo + 0.5 * (b.hi - b.lo);
    const double fm = f(mid);
    if (std::abs(fm) <= tol || 0.5 * (b.hi - b.lo) <= x_tol) return mid;
    if (std::signbit(fm) == std::signbit(b.f_lo)) {
      b.lo = mid;
      b.f_lo = fm;
    } else {
      b.hi = mid;
      b.f_hi = fm;
    }
  }
  throw MaxIterationsError("bisection did not converge in " + std::to_string(max_iter) +
                           " iterations; bracket [" + std::to_string(b.lo) + ", " +
                           std::to_string(b.hi) + "]");
}

}  // namespace wqed::numerics

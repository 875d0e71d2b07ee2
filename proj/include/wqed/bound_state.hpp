#pragma once

#include <vector>

#include "wqed/dispersion.hpp"

namespace wqed {

enum class BoundMethod { numeric, approximate };

struct BoundStateResult {
  double energy = 0.0;    // eps_b in gamma0 units
  double residual = 0.0;  // |G0(eps_b)| for numeric results
  GapReport gap;          // gap whose interior bracketed the root
  BoundMethod method = BoundMethod::numeric;
};

/// Relative-motion amplitudes Phi(dx, dy) on [-dmax, dmax]^2, scaled so that
/// max |Phi| = 1. `scale` is the divisor that was applied.
struct RelativeWavefunction {
  int dmax = 0;
  std::vector<double> amplitudes;  // dx-major: index (dx + dmax) * (2 dmax + 1) + (dy + dmax)
  double scale = 1.0;

  int side() const noexcept { return 2 * dmax + 1; }
  double at(int dx, int dy) const;
};

/// Inward shrink applied to the gap edges before bracketing the root.
inline constexpr double kEdgeShrink = 1e-3;
inline constexpr double kDefaultBoundTol = 1e-7;

/// G0(0,0) = integral over the Brillouin zone of dq / (eps - eps_q), to
/// absolute accuracy tol. Throws OutsideGapError unless eps lies strictly
/// inside the gap of (K, phi).
double green_function(double eps, WaveVector2 K, double phi, double tol);
double green_function(double eps, WaveVector2 K, double phi, double tol, const GapReport& gap);

/// In-gap root of G0 by bisection between the shrunken gap edges;
/// |G0(eps_b)| <= tol. Throws NoGapError or NoSignChangeError.
BoundStateResult bound_energy(WaveVector2 K, double phi, double tol = kDefaultBoundTol,
                              int grid_n = kDefaultGridN);

/// Closed-form estimate 2 cot(2 phi) + artanh(cot(phi / 2)) for K = (pi, 0).
/// Throws DomainError outside the open interval (pi/2, pi).
double bound_energy_approx(double phi);

/// Phi(dx, dy) = gamma0 * integral of cos(qx dx + qy dy) / (eps_b - eps_q),
/// max-normalized. Requires a numeric result and dmax >= 1.
RelativeWavefunction relative_wavefunction(const BoundStateResult& result, WaveVector2 K,
                                           double phi, int dmax, double tol);

}  // namespace wqed

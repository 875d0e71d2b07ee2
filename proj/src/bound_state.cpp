#include "wqed/bound_state.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>

#include "dispersion_detail.hpp"
#include "wqed/errors.hpp"
#include "wqed/model.hpp"
#include "wqed/numerics/quadrature.hpp"
#include "wqed/numerics/root.hpp"

namespace wqed {

namespace {

// 1 / (eps - eps_q) with the pole lines mapped to their limit 0.
class ResolventKernel {
 public:
  ResolventKernel(double eps, WaveVector2 K, double phi, double guard)
      : eps_(eps), K_(K), sin_(std::sin(phi)), cos_(std::cos(phi)), guard_(guard) {}

  double operator()(double qx, double qy) const {
    const auto dx = detail::branch_denominators(qx, K_.x, cos_);
    const auto dy = detail::branch_denominators(qy, K_.y, cos_);
    if (std::abs(dx.d1) < guard_ || std::abs(dx.d2) < guard_ || std::abs(dy.d1) < guard_ ||
        std::abs(dy.d2) < guard_) {
      return 0.0;
    }
    const double eq = 0.5 * (detail::axis_energy(dx, sin_) + detail::axis_energy(dy, sin_));
    return 1.0 / (eps_ - eq);
  }

 private:
  double eps_;
  WaveVector2 K_;
  double sin_, cos_, guard_;
};

numerics::QuadratureSpec spec_for(double tol) {
  numerics::QuadratureSpec spec;
  spec.abs_tol = tol;
  spec.max_depth = 16;
  spec.guard_band = 1e-12;
  return spec;
}

double g0_unchecked(double eps, WaveVector2 K, double phi, double tol) {
  const auto spec = spec_for(tol);
  const ResolventKernel kernel(eps, K, phi, spec.guard_band);
  return numerics::integrate_2d(kernel, spec);
}

}  // namespace

double RelativeWavefunction::at(int dx, int dy) const {
  if (std::abs(dx) > dmax || std::abs(dy) > dmax) {
    throw IndexError("RelativeWavefunction: offset outside [-dmax, dmax]");
  }
  return amplitudes[static_cast<std::size_t>((dx + dmax) * side() + (dy + dmax))];
}

double green_function(double eps, WaveVector2 K, double phi, double tol, const GapReport& gap) {
  if (!gap.has_gap() || !(eps > gap.lower_edge && eps < gap.upper_edge)) {
    throw OutsideGapError("energy " + std::to_string(eps) + " is not inside the gap (" +
                          std::to_string(gap.lower_edge) + ", " +
                          std::to_string(gap.upper_edge) + ")");
  }
  return g0_unchecked(eps, K, phi, tol);
}

double green_function(double eps, WaveVector2 K, double phi, double tol) {
  return green_function(eps, K, phi, tol, gap_interval(K, phi));
}

BoundStateResult bound_energy(WaveVector2 K, double phi, double tol, int grid_n) {
  BoundStateResult result;
  result.method = BoundMethod::numeric;
  result.gap = gap_interval(K, phi, grid_n);
  const GapReport& gap = result.gap;
  if (!gap.has_gap()) {
    throw NoGapError("no continuum gap at phi=" + std::to_string(phi) + ", K=(" +
                     std::to_string(K.x) + ", " + std::to_string(K.y) + ")");
  }
  const double lo = gap.lower_edge + kEdgeShrink;
  const double hi = gap.upper_edge - kEdgeShrink;
  if (!(lo < hi)) throw NoGapError("gap narrower than the edge shrink");

  const double quad_tol = 1e-2 * tol;
  auto g0 = [&](double e) { return green_function(e, K, phi, quad_tol, gap); };
  numerics::Bracket bracket{lo, hi, g0(lo), g0(hi)};
  if (std::signbit(bracket.f_lo) == std::signbit(bracket.f_hi)) {
    throw NoSignChangeError("G0 has the same sign at both shrunken gap edges (" +
                            std::to_string(bracket.f_lo) + ", " +
                            std::to_string(bracket.f_hi) + ")");
  }
  result.energy = numerics::find_root(g0, bracket, 0.5 * tol, 200, 1e-15);
  result.residual = std::abs(g0(result.energy));
  if (!(result.residual <= tol)) {
    throw QuadratureFailure("root residual " + std::to_string(result.residual) +
                            " exceeds tolerance " + std::to_string(tol));
  }
  return result;
}

double bound_energy_approx(double phi) {
  if (!(phi > 0.5 * kPi && phi < kPi)) {
    throw DomainError("closed-form bound energy needs pi/2 < phi < pi, got " +
                      std::to_string(phi));
  }
  const double cot2 = std::cos(2.0 * phi) / std::sin(2.0 * phi);
  const double cot_half = std::cos(0.5 * phi) / std::sin(0.5 * phi);
  return ModelParams::gamma0 * (2.0 * cot2 + std::atanh(cot_half));
}

RelativeWavefunction relative_wavefunction(const BoundStateResult& result, WaveVector2 K,
                                           double phi, int dmax, double tol) {
  if (result.method != BoundMethod::numeric) {
    throw DomainError("relative_wavefunction needs a numerically solved bound energy");
  }
  if (dmax < 1) throw DomainError("relative_wavefunction: dmax must be >= 1");

  RelativeWavefunction wf;
  wf.dmax = dmax;
  const int side = wf.side();
  const int count = side * side;
  wf.amplitudes.assign(static_cast<std::size_t>(count), 0.0);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
  const auto spec = spec_for(tol);
  const ResolventKernel kernel(result.energy, K, phi, spec.guard_band);

#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < count; ++k) {
    const int dx = k / side - dmax;
    const int dy = k % side - dmax;
    try {
      auto integrand = [&](double qx, double qy) {
        return std::cos(qx * dx + qy * dy) * kernel(qx, qy);
      };
      wf.amplitudes[static_cast<std::size_t>(k)] =
          ModelParams::gamma0 * numerics::integrate_2d(integrand, spec);
    } catch (...) {
      errors[static_cast<std::size_t>(k)] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }

  double peak = 0.0;
  for (double a : wf.amplitudes) peak = std::max(peak, std::abs(a));
  if (peak > 0.0) {
    for (double& a : wf.amplitudes) a /= peak;
    wf.scale = peak;
  }
  return wf;
}

}  // namespace wqed

#include <algorithm>
#include <cmath>
#include <string>

#include "../dispersion_detail.hpp"
#include "wqed/dispersion.hpp"
#include "wqed/errors.hpp"

namespace wqed::reference {

namespace {

// Energy and per-axis denominators at one grid point, straight from the formula.
struct PointEval {
  bool ok;
  double eps;
  detail::BranchDenominators dx, dy;
};

PointEval evaluate(double qx, double qy, WaveVector2 K, double phi, double guard) {
  const double s = std::sin(phi), c = std::cos(phi);
  PointEval p{};
  p.dx = detail::branch_denominators(qx, K.x, c);
  p.dy = detail::branch_denominators(qy, K.y, c);
  p.ok = std::abs(p.dx.d1) >= guard && std::abs(p.dx.d2) >= guard &&
         std::abs(p.dy.d1) >= guard && std::abs(p.dy.d2) >= guard;
  if (p.ok) p.eps = 0.5 * (detail::axis_energy(p.dx, s) + detail::axis_energy(p.dy, s));
  return p;
}

bool same_sign(const detail::BranchDenominators& a, const detail::BranchDenominators& b) {
  return std::signbit(a.d1) == std::signbit(b.d1) && std::signbit(a.d2) == std::signbit(b.d2);
}

}  // namespace

std::vector<DispersionSample> sample_dispersion_serial(WaveVector2 K, double phi, int grid_n,
                                                       double guard) {
  const auto q = brillouin_grid(grid_n);
  std::vector<DispersionSample> out;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const auto p = evaluate(q[i], q[j], K, phi, guard);
      if (p.ok) out.push_back({q[i], q[j], p.eps});
    }
  }
  return out;
}

GapReport gap_interval_serial(WaveVector2 K, double phi, int grid_n) {
  if (grid_n < kMinGapGridN) {
    throw DomainError("gap_interval: grid_n must be >= " + std::to_string(kMinGapGridN));
  }
  const auto q = brillouin_grid(grid_n);
  std::vector<PointEval> grid(static_cast<std::size_t>(grid_n) * grid_n);
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) grid[i * grid_n + j] = evaluate(q[i], q[j], K, phi, kSamplingGuard);
  }
  std::vector<detail::Interval> covered;
  for (int i = 0; i < grid_n; ++i) {
    for (int j = 0; j < grid_n; ++j) {
      const auto& p = grid[i * grid_n + j];
      if (p.ok) covered.emplace_back(p.eps, p.eps);
      if (i + 1 == grid_n || j + 1 == grid_n) continue;
      const PointEval* c[4] = {&p, &grid[(i + 1) * grid_n + j], &grid[i * grid_n + j + 1],
                               &grid[(i + 1) * grid_n + j + 1]};
      bool ok = true;
      for (const auto* corner : c) ok = ok && corner->ok;
      if (!ok) continue;
      if (!same_sign(c[0]->dx, c[1]->dx) || !same_sign(c[0]->dy, c[2]->dy)) continue;
      double lo = c[0]->eps, hi = c[0]->eps;
      for (const auto* corner : c) {
        lo = std::min(lo, corner->eps);
        hi = std::max(hi, corner->eps);
      }
      covered.emplace_back(lo, hi);
    }
  }
  return detail::select_gap(covered, phi, grid_n);
}

std::vector<GapMapRow> gap_map_serial(std::span<const GapMapPoint> points, int grid_n) {
  std::vector<GapMapRow> out;
  out.reserve(points.size());
  for (const auto& p : points) out.push_back({p, gap_interval_serial(p.K, p.phi, grid_n)});
  return out;
}

}  // namespace wqed::reference

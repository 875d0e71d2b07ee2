#include "wqed/dispersion.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "dispersion_detail.hpp"
#include "wqed/errors.hpp"
#include "wqed/model.hpp"

namespace wqed {

namespace detail {

GapReport select_gap(std::vector<Interval>& covered, double phi, int grid_n) {
  const EnergyWindow window = bound_window(phi);
  GapReport report;
  report.window_lo = window.lo;
  report.window_hi = window.hi;
  report.lower_edge = report.upper_edge = window.lo;
  if (covered.empty() || !(window.lo < window.hi)) return report;

  std::sort(covered.begin(), covered.end());
  const double min_width = 3.0 * (window.hi - window.lo) / grid_n;
  double best = 0.0;
  double reach = covered.front().second;
  for (std::size_t k = 1; k < covered.size(); ++k) {
    const auto& [lo, hi] = covered[k];
    if (lo > reach) {
      const double width = lo - reach;
      const bool meets_window = lo > window.lo && reach < window.hi;
      if (meets_window && width >= min_width && width > best) {
        best = width;
        report.lower_edge = reach;
        report.upper_edge = lo;
      }
    }
    reach = std::max(reach, hi);
  }
  report.delta = best;
  return report;
}

}  // namespace detail

namespace {

struct AxisTable {
  std::vector<double> q;
  std::vector<double> energy;         // branch sum along the axis
  std::vector<detail::BranchDenominators> den;
  std::vector<char> sample_ok;        // both denominators outside the guard
  std::vector<char> cell_ok;          // no denominator sign change across [k, k+1]
};

AxisTable build_axis(double k_com, double phi, int n, double guard) {
  AxisTable t;
  t.q = brillouin_grid(n);
  const double s = std::sin(phi), c = std::cos(phi);
  t.energy.resize(n);
  t.den.resize(n);
  t.sample_ok.resize(n);
  for (int k = 0; k < n; ++k) {
    t.den[k] = detail::branch_denominators(t.q[k], k_com, c);
    t.sample_ok[k] = std::abs(t.den[k].d1) >= guard && std::abs(t.den[k].d2) >= guard;
    t.energy[k] = t.sample_ok[k] ? detail::axis_energy(t.den[k], s) : 0.0;
  }
  t.cell_ok.assign(n > 0 ? n - 1 : 0, 0);
  for (int k = 0; k + 1 < n; ++k) {
    t.cell_ok[k] = t.sample_ok[k] && t.sample_ok[k + 1] &&
                   std::signbit(t.den[k].d1) == std::signbit(t.den[k + 1].d1) &&
                   std::signbit(t.den[k].d2) == std::signbit(t.den[k + 1].d2);
  }
  return t;
}

}  // namespace

double single_branch_energy(double k, double phi) {
  const double den = std::cos(k) - std::cos(phi);
  if (std::abs(den) < kSingularityGuard) {
    throw SingularityError("branch energy evaluated on the polariton resonance (k=" +
                           std::to_string(k) + ", phi=" + std::to_string(phi) + ")");
  }
  return std::sin(phi) / den;
}

double pair_dispersion(WaveVector2 q, WaveVector2 K, double phi) {
  const double x = single_branch_energy(0.5 * (q.x + K.x), phi) +
                   single_branch_energy(0.5 * (q.x - K.x), phi);
  const double y = single_branch_energy(0.5 * (q.y + K.y), phi) +
                   single_branch_energy(0.5 * (q.y - K.y), phi);
  return 0.5 * (x + y);
}

EnergyWindow bound_window(double phi) {
  return {std::cos(phi) / std::sin(phi), -std::sin(phi) / std::cos(phi)};
}

std::vector<double> linspace(double lo, double hi, int n) {
  if (n < 1) throw DomainError("linspace: n must be >= 1");
  std::vector<double> v(n);
  if (n == 1) {
    v[0] = lo;
    return v;
  }
  const double h = (hi - lo) / (n - 1);
  for (int k = 0; k < n; ++k) v[k] = lo + h * k;
  v[n - 1] = hi;
  return v;
}

std::vector<double> brillouin_grid(int n) {
  if (n < 2) throw DomainError("brillouin_grid: need at least 2 points");
  std::vector<double> v(n);
  // Mirror pairs computed from the same expression so the grid is exactly symmetric.
  const double h = 2.0 * kPi / (n - 1);
  for (int k = 0; k < n; ++k) {
    const int from_end = n - 1 - k;
    v[k] = k <= from_end ? -kPi + h * k : kPi - h * from_end;
  }
  if (n % 2 == 1) v[n / 2] = 0.0;
  return v;
}

std::vector<DispersionSample> sample_dispersion(WaveVector2 K, double phi, int grid_n,
                                                double guard) {
  const AxisTable ax = build_axis(K.x, phi, grid_n, guard);
  const AxisTable ay = build_axis(K.y, phi, grid_n, guard);
  std::vector<std::vector<DispersionSample>> rows(grid_n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid_n; ++i) {
    if (!ax.sample_ok[i]) continue;
    auto& row = rows[i];
    row.reserve(grid_n);
    for (int j = 0; j < grid_n; ++j) {
      if (!ay.sample_ok[j]) continue;
      row.push_back({ax.q[i], ay.q[j], 0.5 * (ax.energy[i] + ay.energy[j])});
    }
  }
  std::vector<DispersionSample> out;
  for (auto& row : rows) out.insert(out.end(), row.begin(), row.end());
  return out;
}

GapReport gap_interval(WaveVector2 K, double phi, int grid_n) {
  if (grid_n < kMinGapGridN) {
    throw DomainError("gap_interval: grid_n must be >= " + std::to_string(kMinGapGridN));
  }
  const AxisTable ax = build_axis(K.x, phi, grid_n, kSamplingGuard);
  const AxisTable ay = build_axis(K.y, phi, grid_n, kSamplingGuard);
  auto eps = [&](int i, int j) { return 0.5 * (ax.energy[i] + ay.energy[j]); };
  // A sample is only needed as a point when no valid cell has it as a corner.
  auto touches_cell = [](const std::vector<char>& cells, int k) {
    return (k > 0 && cells[k - 1]) || (k < static_cast<int>(cells.size()) && cells[k]);
  };

  std::vector<std::vector<detail::Interval>> rows(grid_n);
#pragma omp parallel for schedule(static)
  for (int i = 0; i < grid_n; ++i) {
    auto& row = rows[i];
    const bool cell_row = i + 1 < grid_n && ax.cell_ok[i];
    if (cell_row) {
      for (int j = 0; j + 1 < grid_n; ++j) {
        if (!ay.cell_ok[j]) continue;
        const double c[4] = {eps(i, j), eps(i + 1, j), eps(i, j + 1), eps(i + 1, j + 1)};
        row.emplace_back(std::min(std::min(c[0], c[1]), std::min(c[2], c[3])),
                         std::max(std::max(c[0], c[1]), std::max(c[2], c[3])));
      }
    }
    if (!ax.sample_ok[i]) continue;
    const bool x_touch = touches_cell(ax.cell_ok, i);
    for (int j = 0; j < grid_n; ++j) {
      if (!ay.sample_ok[j]) continue;
      if (x_touch && touches_cell(ay.cell_ok, j)) continue;
      row.emplace_back(eps(i, j), eps(i, j));
    }
  }
  std::size_t total = 0;
  for (const auto& r : rows) total += r.size();
  std::vector<detail::Interval> covered;
  covered.reserve(total);
  for (auto& r : rows) {
    covered.insert(covered.end(), r.begin(), r.end());
    std::vector<detail::Interval>().swap(r);
  }
  return detail::select_gap(covered, phi, grid_n);
}

std::vector<GapMapRow> gap_map(std::span<const GapMapPoint> points, int grid_n) {
  std::vector<GapMapRow> out(points.size());
  std::vector<std::exception_ptr> errors(points.size());
  const int n = static_cast<int>(points.size());
#pragma omp parallel for schedule(dynamic, 1)
  for (int k = 0; k < n; ++k) {
    try {
      out[k] = {points[k], gap_interval(points[k].K, points[k].phi, grid_n)};
    } catch (...) {
      errors[k] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

std::vector<GapMapPoint> k_grid_sweep(double phi, std::span<const double> kx_values,
                                      std::span<const double> ky_values) {
  std::vector<GapMapPoint> pts;
  pts.reserve(kx_values.size() * ky_values.size());
  for (double kx : kx_values) {
    for (double ky : ky_values) pts.push_back({phi, {kx, ky}});
  }
  return pts;
}

std::vector<GapMapPoint> phi_sweep(WaveVector2 K, std::span<const double> phi_values) {
  std::vector<GapMapPoint> pts;
  pts.reserve(phi_values.size());
  for (double p : phi_values) pts.push_back({p, K});
  return pts;
}

std::vector<GapMapPoint> phi_ky_sweep(double kx, std::span<const double> phi_values,
                                      std::span<const double> ky_values) {
  std::vector<GapMapPoint> pts;
  pts.reserve(phi_values.size() * ky_values.size());
  for (double p : phi_values) {
    for (double ky : ky_values) pts.push_back({p, {kx, ky}});
  }
  return pts;
}

}  // namespace wqed

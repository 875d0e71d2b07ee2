#include "wqed/numerics/quadrature.hpp"

#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <string>
#include <vector>

#include "quadrature_detail.hpp"
#include "wqed/errors.hpp"
#include "wqed/model.hpp"

namespace wqed::numerics {

void QuadratureSpec::validate() const {
  if (!(abs_tol > 0.0)) throw DomainError("QuadratureSpec: abs_tol must be > 0");
  if (max_depth < 4) throw DomainError("QuadratureSpec: max_depth must be >= 4");
  if (!(guard_band >= 0.0)) throw DomainError("QuadratureSpec: guard_band must be >= 0");
  if (initial_panels < 1) throw DomainError("QuadratureSpec: initial_panels must be >= 1");
}

double pairwise_sum(std::span<const double> values) {
  if (values.empty()) return 0.0;
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

namespace detail {

double panel_estimate(const Integrand2D& f, const Panel& p) {
  const double hx = 0.5 * (p.x1 - p.x0), cx = 0.5 * (p.x1 + p.x0);
  const double hy = 0.5 * (p.y1 - p.y0), cy = 0.5 * (p.y1 + p.y0);
  std::array<double, 8> rows{};
  for (std::size_t a = 0; a < 8; ++a) {
    const double x = cx + hx * kGaussNodes[a];
    double row = 0.0;
    for (std::size_t b = 0; b < 8; ++b) {
      row += kGaussWeights[b] * f(x, cy + hy * kGaussNodes[b]);
    }
    rows[a] = kGaussWeights[a] * row;
  }
  return hx * hy * pairwise_sum(rows);
}

double refine_panel(const Integrand2D& f, const Panel& p, double estimate,
                    double tol, int depth, int max_depth) {
  const double xm = 0.5 * (p.x0 + p.x1), ym = 0.5 * (p.y0 + p.y1);
  const std::array<Panel, 4> kids = {Panel{p.x0, xm, p.y0, ym}, Panel{xm, p.x1, p.y0, ym},
                                     Panel{p.x0, xm, ym, p.y1}, Panel{xm, p.x1, ym, p.y1}};
  std::array<double, 4> est{};
  for (std::size_t k = 0; k < 4; ++k) est[k] = panel_estimate(f, kids[k]);
  const double sum = pairwise_sum(est);
  const double err = std::abs(sum - estimate);
  // Integrands built from cancelling sums carry relative noise well above eps.
  const double roundoff = 4096.0 * std::numeric_limits<double>::epsilon() * std::abs(sum);
  if (!std::isfinite(sum)) {
    throw QuadratureFailure("non-finite integrand value on panel [" + std::to_string(p.x0) +
                            ", " + std::to_string(p.x1) + "] x [" + std::to_string(p.y0) +
                            ", " + std::to_string(p.y1) + "]");
  }
  if (err <= tol || err <= roundoff) return sum;
  if (depth >= max_depth) {
    char msg[256];
    std::snprintf(msg, sizeof msg,
                  "max_depth %d reached on panel [%.6g, %.6g] x [%.6g, %.6g]: local error "
                  "%.3g > %.3g",
                  max_depth, p.x0, p.x1, p.y0, p.y1, err, tol);
    throw QuadratureFailure(msg);
  }
  std::array<double, 4> refined{};
  for (std::size_t k = 0; k < 4; ++k) {
    refined[k] = refine_panel(f, kids[k], est[k], 0.25 * tol, depth + 1, max_depth);
  }
  return pairwise_sum(refined);
}

Panel initial_panel(int index, int panels_per_axis) {
  const int ix = index % panels_per_axis;
  const int iy = index / panels_per_axis;
  const double h = 2.0 * kPi / panels_per_axis;
  // Edges computed from the index so neighbouring panels share bit-identical bounds.
  auto edge = [&](int k) { return k == panels_per_axis ? kPi : -kPi + h * k; };
  return {edge(ix), edge(ix + 1), edge(iy), edge(iy + 1)};
}

}  // namespace detail

double integrate_2d(const Integrand2D& f, const QuadratureSpec& spec) {
  spec.validate();
  const int p = spec.initial_panels;
  const int count = p * p;
  const double panel_tol = spec.abs_tol / count;
  std::vector<double> values(count, 0.0);
  std::vector<std::exception_ptr> errors(count);

#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < count; ++i) {
    try {
      const auto panel = detail::initial_panel(i, p);
      const double est = detail::panel_estimate(f, panel);
      values[i] = detail::refine_panel(f, panel, est, panel_tol, 0, spec.max_depth);
    } catch (...) {
      errors[i] = std::current_exception();
    }
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return pairwise_sum(values);
}

}  // namespace wqed::numerics

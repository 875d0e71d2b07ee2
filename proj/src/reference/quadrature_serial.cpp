#include <vector>

#include "../numerics/quadrature_detail.hpp"
#include "wqed/numerics/quadrature.hpp"

namespace wqed::reference {

double integrate_2d_serial(const numerics::Integrand2D& f,
                           const numerics::QuadratureSpec& spec) {
  using namespace numerics::detail;
  spec.validate();
  const int p = spec.initial_panels;
  const int count = p * p;
  const double panel_tol = spec.abs_tol / count;
  std::vector<double> values(count, 0.0);
  for (int i = 0; i < count; ++i) {
    const auto panel = initial_panel(i, p);
    values[i] = refine_panel(f, panel, panel_estimate(f, panel), panel_tol, 0, spec.max_depth);
  }
  return numerics::pairwise_sum(values);
}

}  // namespace wqed::reference

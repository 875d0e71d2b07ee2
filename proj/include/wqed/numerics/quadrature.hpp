#pragma once

#include <functional>
#include <span>

namespace wqed::numerics {

/// Adaptive quadrature controls.
///   abs_tol     absolute error target for the whole domain
///   max_depth   dyadic refinement levels allowed below the initial panels
///   guard_band  half-width around integrand singular lines that the
///               integrand builder treats as excluded (the quadrature itself
///               only forwards it)
struct QuadratureSpec {
  double abs_tol = 1e-9;
  int max_depth = 14;
  double guard_band = 1e-12;
  int initial_panels = 8;  // per axis

  void validate() const;
};

using Integrand2D = std::function<double(double qx, double qy)>;

/// Integral of f over the Brillouin zone (-pi, pi]^2.
///
/// Tensor-product 8-point Gauss-Legendre on each panel; a panel is split into
/// four children until the children's sum agrees with the parent estimate to
/// the panel's share of abs_tol. The initial panels are integrated in
/// parallel and summed pairwise in fixed order, so the result does not depend
/// on the thread count. Throws QuadratureFailure when max_depth is exhausted.
double integrate_2d(const Integrand2D& f, const QuadratureSpec& spec);

/// Fixed-order pairwise summation.
double pairwise_sum(std::span<const double> values);

}  // namespace wqed::numerics

namespace wqed::reference {

/// Single-threaded twin of numerics::integrate_2d; bit-identical result.
double integrate_2d_serial(const numerics::Integrand2D& f,
                           const numerics::QuadratureSpec& spec);

}  // namespace wqed::reference

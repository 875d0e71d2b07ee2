#pragma once

#include <array>

#include "wqed/numerics/quadrature.hpp"

namespace wqed::numerics::detail {

struct Panel {
  double x0, x1, y0, y1;
};

inline constexpr std::array<double, 8> kGaussNodes = {
    -0.9602898564975362, -0.7966664774136267, -0.525532409916329,
    -0.18343464249564978, 0.18343464249564978, 0.525532409916329,
    0.7966664774136267,  0.9602898564975362};
inline constexpr std::array<double, 8> kGaussWeights = {
    0.10122853629037669, 0.22238103445337434, 0.31370664587788705,
    0.36268378337836177, 0.36268378337836177, 0.31370664587788705,
    0.22238103445337434, 0.10122853629037669};

double panel_estimate(const Integrand2D& f, const Panel& p);

// Recursive refinement of one panel whose Gauss estimate is `estimate`.
double refine_panel(const Integrand2D& f, const Panel& p, double estimate,
                    double tol, int depth, int max_depth);

// Top-level panel i (row-major over the initial grid).
Panel initial_panel(int index, int panels_per_axis);

}  // namespace wqed::numerics::detail

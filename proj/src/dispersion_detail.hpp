#pragma once

#include <cmath>
#include <utility>
#include <vector>

#include "wqed/dispersion.hpp"

namespace wqed::detail {

using Interval = std::pair<double, double>;

// Both branch denominators cos((q +- K)/2) - cos(phi) along one axis.
struct BranchDenominators {
  double d1;
  double d2;
};

inline BranchDenominators branch_denominators(double q, double k_com, double cos_phi) {
  return {std::cos(0.5 * (q + k_com)) - cos_phi, std::cos(0.5 * (q - k_com)) - cos_phi};
}

// Sum of the two branch energies along one axis; same operation order as
// pair_dispersion so sampled values are bit-identical to point evaluations.
inline double axis_energy(const BranchDenominators& d, double sin_phi) {
  return sin_phi / d.d1 + sin_phi / d.d2;
}

// Sorts `covered` in place and returns the gap selected by the window and
// bin-width rules.
GapReport select_gap(std::vector<Interval>& covered, double phi, int grid_n);

}  // namespace wqed::detail

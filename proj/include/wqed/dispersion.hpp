#pragma once

#include <limits>
#include <span>
#include <vector>

namespace wqed {

/// Wavevector in units of inverse lattice constant; used both for the pair's
/// center-of-mass K and the relative wavevector q.
struct WaveVector2 {
  double x = 0.0;
  double y = 0.0;
};

/// Scattering-continuum gap around the bound-state window.
///
/// lower_edge/upper_edge are attained continuum energies bounding the largest
/// uncovered interval whose closure meets (window_lo, window_hi) =
/// (cot phi, -tan phi). With no such interval delta is 0 and both edges sit at
/// window_lo, which stays finite for every phi in (0, pi).
struct GapReport {
  double lower_edge = 0.0;
  double upper_edge = 0.0;
  double delta = 0.0;
  double window_lo = 0.0;
  double window_hi = 0.0;

  bool has_gap() const noexcept { return delta > 0.0; }
};

inline constexpr double kSingularityGuard = 64.0 * std::numeric_limits<double>::epsilon();
inline constexpr double kSamplingGuard = 1e-8;
inline constexpr int kDefaultGridN = 1001;
inline constexpr int kMinGapGridN = 64;

/// Single polariton branch sin(phi) / (cos k - cos phi). Throws
/// SingularityError on the resonance |cos k - cos phi| < kSingularityGuard.
double single_branch_energy(double k, double phi);

/// Pair continuum energy: half the sum of four branch energies at
/// k = (q +- K) / 2 per axis.
double pair_dispersion(WaveVector2 q, WaveVector2 K, double phi);

/// Bound-state window (cot phi, -tan phi); empty (lo >= hi) for phi <= pi/2.
struct EnergyWindow {
  double lo;
  double hi;
};
EnergyWindow bound_window(double phi);

/// Closed symmetric grid of n points on [-pi, pi]; contains 0 for odd n.
std::vector<double> brillouin_grid(int n);

struct DispersionSample {
  double qx;
  double qy;
  double eps;
};

/// pair_dispersion on brillouin_grid(grid_n)^2 in row-major (qx outer) order.
/// Samples with any branch denominator closer than `guard` to zero are omitted.
std::vector<DispersionSample> sample_dispersion(WaveVector2 K, double phi, int grid_n,
                                                double guard = kSamplingGuard);

/// Gap of the continuum at (K, phi). Coverage is the union over grid cells of
/// [min, max] of the corner energies (cells crossing a pole are dropped);
/// uncovered intervals narrower than three energy bins of the window are
/// ignored. Throws DomainError for grid_n < kMinGapGridN.
GapReport gap_interval(WaveVector2 K, double phi, int grid_n = kDefaultGridN);

struct GapMapPoint {
  double phi;
  WaveVector2 K;
};

struct GapMapRow {
  GapMapPoint point;
  GapReport gap;
};

/// One gap_interval per point, rows evaluated in parallel, output order equal
/// to input order.
std::vector<GapMapRow> gap_map(std::span<const GapMapPoint> points,
                               int grid_n = kDefaultGridN);

/// n equally spaced values on [lo, hi] (a single value lo when n == 1).
std::vector<double> linspace(double lo, double hi, int n);

std::vector<GapMapPoint> k_grid_sweep(double phi, std::span<const double> kx_values,
                                      std::span<const double> ky_values);
std::vector<GapMapPoint> phi_sweep(WaveVector2 K, std::span<const double> phi_values);
std::vector<GapMapPoint> phi_ky_sweep(double kx, std::span<const double> phi_values,
                                      std::span<const double> ky_values);

}  // namespace wqed

namespace wqed::reference {

std::vector<DispersionSample> sample_dispersion_serial(WaveVector2 K, double phi, int grid_n,
                                                       double guard = kSamplingGuard);
GapReport gap_interval_serial(WaveVector2 K, double phi, int grid_n = kDefaultGridN);
std::vector<GapMapRow> gap_map_serial(std::span<const GapMapPoint> points,
                                      int grid_n = kDefaultGridN);

}  // namespace wqed::reference

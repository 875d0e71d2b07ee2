#pragma once

#include <optional>
#include <string>
#include <vector>

#include "wqed/finite_lattice.hpp"

namespace wqed::cli {

struct DispersionOptions {
  double phi = 0.0;
  double kx = 0.0;
  double ky = 0.0;
  int grid = 201;
  double guard = 1e-8;
  std::string out = "dispersion.csv";
};

struct GapMapOptions {
  std::optional<double> phi;
  std::optional<int> k_points;
  double k_min = -kPi;
  double k_max = kPi;
  std::optional<int> phi_points;
  double phi_min = 0.1 * kPi;
  double phi_max = 0.95 * kPi;
  std::optional<int> ky_points;
  double ky_min = -kPi;
  double ky_max = kPi;
  std::optional<double> kx;
  std::optional<double> ky;
  int grid = 1001;
  std::string out = "gap_map.csv";
};

struct BoundOptions {
  double phi = 0.0;
  double kx = kPi;
  double ky = 0.0;
  double tol = 1e-7;
  int grid = 1001;
  bool approx_only = false;
  std::optional<int> wavefunction_dmax;
  std::string wavefunction_out;
  double wf_tol = 1e-8;
  std::string out = "bound.json";
};

struct FiniteOptions {
  int n = 0;
  double phi = 0.0;
  bool force = false;
  std::vector<std::string> state_dump;
  std::optional<std::vector<int>> fixed_site;
  OffsetFold fold = OffsetFold::distinct;
  ClassifyThresholds thresholds;
  std::string out = "finite.csv";
};

struct ValidateOptions {
  std::vector<std::string> only;
  std::string out = "validate.json";
};

inline constexpr int kFiniteGuardN = 12;

// Each returns the exit status; usage problems throw UsageError and
// computation failures propagate as wqed::Error unless handled locally.
int cmd_dispersion(const DispersionOptions& o);
int cmd_gap_map(const GapMapOptions& o);
int cmd_bound(const BoundOptions& o);
int cmd_finite(const FiniteOptions& o);
int cmd_validate(const ValidateOptions& o);

}  // namespace wqed::cli

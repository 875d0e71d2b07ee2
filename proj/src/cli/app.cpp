#include "wqed/cli/app.hpp"

#include <algorithm>
#include <iostream>

#include <CLI11.hpp>
#include <omp.h>

#include "commands.hpp"
#include "wqed/cli/output.hpp"
#include "wqed/errors.hpp"

namespace wqed::cli {

namespace {

struct Common {
  bool pi_units = false;
  int threads = 0;
  std::string config;
};

void add_common(CLI::App* sub, Common& c) {
  sub->add_flag("--pi-units", c.pi_units, "Read angles and wavevectors as multiples of pi");
  sub->add_option("--threads", c.threads, "Worker threads (default: available parallelism)")
      ->check(CLI::PositiveNumber);
  sub->add_option("--config", c.config, "key=value file; command-line flags take precedence");
}

template <class T>
void add_optional(CLI::App* sub, const std::string& name, std::optional<T>& target,
                  const std::string& help) {
  sub->add_option_function<T>(name, [&target](const T& v) { target = v; }, help);
}

void scale_angle(double& v, bool pi_units) {
  if (pi_units) v *= kPi;
}

void scale_angle(std::optional<double>& v, bool pi_units) {
  if (pi_units && v) *v *= kPi;
}

}  // namespace

int run(std::vector<std::string> args) {
  CLI::App app{"Two-excitation bound states in a 2D waveguide-QED qubit lattice", "wqed"};
  app.require_subcommand(1);
  app.set_version_flag("--version", artifact_version());

  Common common;

  DispersionOptions disp;
  auto* s_disp = app.add_subcommand("dispersion", "Pair continuum eps_q over the Brillouin zone");
  s_disp->add_option("--phi", disp.phi, "Phase phi = q0 d")->required();
  s_disp->add_option("--Kx", disp.kx, "Center-of-mass wavevector, x");
  s_disp->add_option("--Ky", disp.ky, "Center-of-mass wavevector, y");
  s_disp->add_option("--grid", disp.grid, "Points per axis")->capture_default_str();
  s_disp->add_option("--guard", disp.guard, "Omit samples this close to a pole")
      ->capture_default_str();
  s_disp->add_option("--out", disp.out, "Output CSV")->capture_default_str();
  add_common(s_disp, common);

  GapMapOptions gap;
  auto* s_gap = app.add_subcommand("gap-map", "Continuum gap over a parameter sweep");
  add_optional(s_gap, "--phi", gap.phi, "Fixed phi for a K-grid sweep");
  add_optional(s_gap, "--K-points", gap.k_points, "K-grid points per axis");
  s_gap->add_option("--K-min", gap.k_min, "K-grid lower bound");
  s_gap->add_option("--K-max", gap.k_max, "K-grid upper bound");
  add_optional(s_gap, "--phi-points", gap.phi_points, "phi sweep points");
  s_gap->add_option("--phi-min", gap.phi_min, "phi sweep lower bound");
  s_gap->add_option("--phi-max", gap.phi_max, "phi sweep upper bound");
  add_optional(s_gap, "--Ky-points", gap.ky_points, "Ky sweep points");
  s_gap->add_option("--Ky-min", gap.ky_min, "Ky sweep lower bound");
  s_gap->add_option("--Ky-max", gap.ky_max, "Ky sweep upper bound");
  add_optional(s_gap, "--Kx", gap.kx, "Fixed Kx for phi sweeps");
  add_optional(s_gap, "--Ky", gap.ky, "Fixed Ky for a phi sweep");
  s_gap->add_option("--grid", gap.grid, "Brillouin-zone points per axis")->capture_default_str();
  s_gap->add_option("--out", gap.out, "Output CSV")->capture_default_str();
  add_common(s_gap, common);

  BoundOptions bound;
  auto* s_bound = app.add_subcommand("bound", "In-gap two-excitation bound state");
  s_bound->add_option("--phi", bound.phi, "Phase phi = q0 d")->required();
  s_bound->add_option("--Kx", bound.kx, "Center-of-mass wavevector, x (default pi)");
  s_bound->add_option("--Ky", bound.ky, "Center-of-mass wavevector, y");
  s_bound->add_option("--tol", bound.tol, "Root tolerance on |G0|")->capture_default_str();
  s_bound->add_option("--grid", bound.grid, "Gap-detection points per axis")
      ->capture_default_str();
  s_bound->add_flag("--approx", bound.approx_only, "Closed-form estimate only");
  add_optional(s_bound, "--wavefunction", bound.wavefunction_dmax,
               "Write Phi(dx, dy) for |dx|, |dy| <= dmax");
  s_bound->add_option("--wavefunction-out", bound.wavefunction_out, "Wavefunction CSV path");
  s_bound->add_option("--wf-tol", bound.wf_tol, "Quadrature tolerance for Phi")
      ->capture_default_str();
  s_bound->add_option("--out", bound.out, "Output JSON")->capture_default_str();
  add_common(s_bound, common);

  FiniteOptions fin;
  std::string fold = "distinct";
  std::vector<int> fixed_site;
  auto* s_fin = app.add_subcommand("finite", "Two-excitation spectrum of an N x N lattice");
  s_fin->add_option("--N", fin.n, "Lattice side")->required();
  s_fin->add_option("--phi", fin.phi, "Phase phi = q0 d")->required();
  s_fin->add_flag("--force", fin.force, "Allow N above the desk-scale guard");
  s_fin->add_option("--state-dump", fin.state_dump, "State index or 'max-s' (repeatable)");
  s_fin->add_option("--fixed-site", fixed_site, "Fixed site x y (zero-based)")->expected(2);
  s_fin->add_option("--fold", fold, "Offset fold for S")
      ->check(CLI::IsMember({"distinct", "four_term"}))
      ->capture_default_str();
  s_fin->add_option("--superradiant-fraction", fin.thresholds.superradiant_fraction,
                    "Superradiant when gamma >= fraction * N")
      ->capture_default_str();
  s_fin->add_option("--subradiant-max", fin.thresholds.subradiant_max,
                    "Subradiant when gamma <= this")
      ->capture_default_str();
  s_fin->add_option("--bound-min-s", fin.thresholds.bound_min_s,
                    "Bound candidate when S >= this")
      ->capture_default_str();
  s_fin->add_option("--out", fin.out, "Eigenvalue CSV")->capture_default_str();
  add_common(s_fin, common);

  ValidateOptions val;
  auto* s_val = app.add_subcommand("validate", "Run the oracle and self-test suite");
  s_val->add_option("--only", val.only, "Comma-separated check names")->delimiter(',');
  s_val->add_option("--out", val.out, "Report JSON")->capture_default_str();
  add_common(s_val, common);

  try {
    auto merged = merge_config(std::move(args));
    std::reverse(merged.begin(), merged.end());
    app.parse(merged);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (common.threads > 0) omp_set_num_threads(common.threads);

  try {
    if (s_disp->parsed()) {
      scale_angle(disp.phi, common.pi_units);
      scale_angle(disp.kx, common.pi_units);
      scale_angle(disp.ky, common.pi_units);
      return cmd_dispersion(disp);
    }
    if (s_gap->parsed()) {
      for (auto* v : {&gap.k_min, &gap.k_max, &gap.phi_min, &gap.phi_max, &gap.ky_min, &gap.ky_max}) {
        scale_angle(*v, common.pi_units);
      }
      scale_angle(gap.phi, common.pi_units);
      scale_angle(gap.kx, common.pi_units);
      scale_angle(gap.ky, common.pi_units);
      // defaults are already in radians
      if (common.pi_units) {
        if (s_gap->get_option("--K-min")->count() == 0) gap.k_min = -kPi;
        if (s_gap->get_option("--K-max")->count() == 0) gap.k_max = kPi;
        if (s_gap->get_option("--phi-min")->count() == 0) gap.phi_min = 0.1 * kPi;
        if (s_gap->get_option("--phi-max")->count() == 0) gap.phi_max = 0.95 * kPi;
        if (s_gap->get_option("--Ky-min")->count() == 0) gap.ky_min = -kPi;
        if (s_gap->get_option("--Ky-max")->count() == 0) gap.ky_max = kPi;
      }
      return cmd_gap_map(gap);
    }
    if (s_bound->parsed()) {
      scale_angle(bound.phi, common.pi_units);
      if (s_bound->get_option("--Kx")->count() > 0) scale_angle(bound.kx, common.pi_units);
      scale_angle(bound.ky, common.pi_units);
      return cmd_bound(bound);
    }
    if (s_fin->parsed()) {
      scale_angle(fin.phi, common.pi_units);
      fin.fold = fold == "distinct" ? OffsetFold::distinct : OffsetFold::four_term;
      if (!fixed_site.empty()) fin.fixed_site = fixed_site;
      return cmd_finite(fin);
    }
    return cmd_validate(val);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitComputation;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitComputation;
  }
}

}  // namespace wqed::cli

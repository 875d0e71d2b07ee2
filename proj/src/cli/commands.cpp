#include "commands.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <iostream>

#include <json.hpp>

#include "wqed/bound_state.hpp"
#include "wqed/cli/app.hpp"
#include "wqed/cli/output.hpp"
#include "wqed/cli/validate.hpp"
#include "wqed/dispersion.hpp"
#include "wqed/errors.hpp"

namespace wqed::cli {

namespace {

using nlohmann::ordered_json;

void require_phi(double phi, const char* name = "phi") {
  if (!(phi > 0.0 && phi < kPi)) {
    throw UsageError(std::string(name) + " must lie in (0, pi) radians, got " + fmt_exact(phi));
  }
}

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) throw UsageError(std::string(name) + " must be finite");
}

void require_points(int n, const char* name) {
  if (n < 1) throw UsageError(std::string(name) + " must be at least 1");
}

ordered_json echo_json(const ConfigEcho& echo) {
  ordered_json j = ordered_json::object();
  for (const auto& [k, v] : echo) j[k] = v;
  return j;
}

ordered_json error_json(const std::string& command, const ConfigEcho& echo, const Error& e) {
  ordered_json j;
  j["version"] = artifact_version();
  j["command"] = command;
  j["config"] = echo_json(echo);
  j["error"] = {{"kind", e.kind()}, {"message", e.what()}};
  return j;
}

std::string fold_name(OffsetFold fold) {
  return fold == OffsetFold::distinct ? "distinct" : "four_term";
}

}  // namespace

int cmd_dispersion(const DispersionOptions& o) {
  require_phi(o.phi);
  require_finite(o.kx, "Kx");
  require_finite(o.ky, "Ky");
  if (o.grid < 2) throw UsageError("--grid must be at least 2");
  if (!(o.guard >= 0.0)) throw UsageError("--guard must be non-negative");

  const ConfigEcho echo{{"phi", fmt_exact(o.phi)},
                        {"Kx", fmt_exact(o.kx)},
                        {"Ky", fmt_exact(o.ky)},
                        {"grid", std::to_string(o.grid)},
                        {"guard", fmt_exact(o.guard)}};
  const auto samples = sample_dispersion({o.kx, o.ky}, o.phi, o.grid, o.guard);

  std::string csv = comment_header("dispersion", echo);
  csv += "qx,qy,eps\n";
  for (const auto& s : samples) {
    csv += fmt_num(s.qx) + "," + fmt_num(s.qy) + "," + fmt_num(s.eps) + "\n";
  }
  write_atomic(o.out, csv);
  std::cout << "wrote " << o.out << " (" << samples.size() << " rows)\n";
  return kExitOk;
}

int cmd_gap_map(const GapMapOptions& o) {
  enum class Mode { k_grid, phi, phi_ky };
  Mode mode;
  if (o.k_points && o.phi && !o.phi_points && !o.ky_points && !o.kx && !o.ky) {
    mode = Mode::k_grid;
  } else if (o.phi_points && !o.ky_points && !o.phi && !o.k_points) {
    mode = Mode::phi;
  } else if (o.phi_points && o.ky_points && !o.phi && !o.k_points && !o.ky) {
    mode = Mode::phi_ky;
  } else {
    throw UsageError(
        "gap-map needs exactly one sweep: --phi with --K-points, --phi-points with "
        "optional --Kx/--Ky, or --phi-points with --Ky-points and optional --Kx");
  }
  if (o.grid < kMinGapGridN) {
    throw UsageError("--grid must be at least " + std::to_string(kMinGapGridN));
  }
  for (double v : {o.k_min, o.k_max, o.ky_min, o.ky_max, o.kx.value_or(0.0), o.ky.value_or(0.0)}) {
    require_finite(v, "wavevector");
  }

  ConfigEcho echo;
  std::vector<GapMapPoint> points;
  std::string columns;
  if (mode == Mode::k_grid) {
    require_phi(*o.phi);
    require_points(*o.k_points, "--K-points");
    const auto ks = linspace(o.k_min, o.k_max, *o.k_points);
    points = k_grid_sweep(*o.phi, ks, ks);
    echo = {{"sweep", "k_grid"},
            {"phi", fmt_exact(*o.phi)},
            {"K_points", std::to_string(*o.k_points)},
            {"K_min", fmt_exact(o.k_min)},
            {"K_max", fmt_exact(o.k_max)}};
    columns = "Kx,Ky";
  } else {
    require_points(*o.phi_points, "--phi-points");
    require_phi(o.phi_min, "--phi-min");
    require_phi(o.phi_max, "--phi-max");
    const auto phis = linspace(o.phi_min, o.phi_max, *o.phi_points);
    echo = {{"phi_points", std::to_string(*o.phi_points)},
            {"phi_min", fmt_exact(o.phi_min)},
            {"phi_max", fmt_exact(o.phi_max)}};
    const double kx = o.kx.value_or(0.0);
    if (mode == Mode::phi) {
      const double ky = o.ky.value_or(0.0);
      points = phi_sweep({kx, ky}, phis);
      echo.insert(echo.begin(), {"sweep", "phi"});
      echo.push_back({"Kx", fmt_exact(kx)});
      echo.push_back({"Ky", fmt_exact(ky)});
      columns = "phi";
    } else {
      require_points(*o.ky_points, "--Ky-points");
      const auto kys = linspace(o.ky_min, o.ky_max, *o.ky_points);
      points = phi_ky_sweep(kx, phis, kys);
      echo.insert(echo.begin(), {"sweep", "phi_ky"});
      echo.push_back({"Kx", fmt_exact(kx)});
      echo.push_back({"Ky_points", std::to_string(*o.ky_points)});
      echo.push_back({"Ky_min", fmt_exact(o.ky_min)});
      echo.push_back({"Ky_max", fmt_exact(o.ky_max)});
      columns = "phi,Ky";
    }
  }
  echo.push_back({"grid", std::to_string(o.grid)});

  const auto rows = gap_map(points, o.grid);
  std::string csv = comment_header("gap-map", echo);
  csv += columns + ",delta,lower_edge,upper_edge\n";
  for (const auto& r : rows) {
    switch (mode) {
      case Mode::k_grid:
        csv += fmt_num(r.point.K.x) + "," + fmt_num(r.point.K.y);
        break;
      case Mode::phi:
        csv += fmt_num(r.point.phi);
        break;
      case Mode::phi_ky:
        csv += fmt_num(r.point.phi) + "," + fmt_num(r.point.K.y);
        break;
    }
    csv += "," + fmt_num(r.gap.delta) + "," + fmt_num(r.gap.lower_edge) + "," +
           fmt_num(r.gap.upper_edge) + "\n";
  }
  write_atomic(o.out, csv);
  std::cout << "wrote " << o.out << " (" << rows.size() << " rows)\n";
  return kExitOk;
}

int cmd_bound(const BoundOptions& o) {
  require_phi(o.phi);
  require_finite(o.kx, "Kx");
  require_finite(o.ky, "Ky");
  if (!(o.tol > 0.0)) throw UsageError("--tol must be positive");
  if (!(o.wf_tol > 0.0)) throw UsageError("--wf-tol must be positive");
  if (o.grid < kMinGapGridN) {
    throw UsageError("--grid must be at least " + std::to_string(kMinGapGridN));
  }
  if (o.wavefunction_dmax) {
    if (*o.wavefunction_dmax < 1) throw UsageError("--wavefunction must be at least 1");
    if (o.approx_only) throw UsageError("--wavefunction needs the numeric solution, drop --approx");
  }

  ConfigEcho echo{{"phi", fmt_exact(o.phi)},
                  {"Kx", fmt_exact(o.kx)},
                  {"Ky", fmt_exact(o.ky)},
                  {"tol", fmt_exact(o.tol)},
                  {"grid", std::to_string(o.grid)},
                  {"approx", o.approx_only ? "true" : "false"}};
  if (o.wavefunction_dmax) {
    echo.push_back({"wavefunction", std::to_string(*o.wavefunction_dmax)});
    echo.push_back({"wf_tol", fmt_exact(o.wf_tol)});
  }

  ordered_json j;
  j["version"] = artifact_version();
  j["command"] = "bound";
  j["config"] = echo_json(echo);
  j["phi"] = o.phi;
  j["Kx"] = o.kx;
  j["Ky"] = o.ky;

  const bool approx_defined = o.phi > kPi / 2 && o.phi < kPi;
  j["eps_b_numeric"] = nullptr;
  j["eps_b_approx"] = approx_defined ? ordered_json(bound_energy_approx(o.phi)) : ordered_json(nullptr);
  j["gap"] = nullptr;
  j["residual"] = nullptr;

  if (o.approx_only) {
    if (!approx_defined) {
      const DomainError e("closed-form estimate needs pi/2 < phi < pi");
      write_atomic(o.out, error_json("bound", echo, e).dump(2) + "\n");
      std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
      return kExitComputation;
    }
    write_atomic(o.out, j.dump(2) + "\n");
    std::cout << "wrote " << o.out << "\n";
    return kExitOk;
  }

  BoundStateResult result;
  try {
    result = bound_energy({o.kx, o.ky}, o.phi, o.tol, o.grid);
  } catch (const Error& e) {
    write_atomic(o.out, error_json("bound", echo, e).dump(2) + "\n");
    std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
    return kExitComputation;
  }
  j["eps_b_numeric"] = result.energy;
  j["gap"] = {{"lo", result.gap.lower_edge}, {"hi", result.gap.upper_edge}};
  j["residual"] = result.residual;

  if (o.wavefunction_dmax) {
    const std::string wf_path =
        o.wavefunction_out.empty() ? sibling_path(o.out, "_wavefunction.csv") : o.wavefunction_out;
    RelativeWavefunction wf;
    try {
      wf = relative_wavefunction(result, {o.kx, o.ky}, o.phi, *o.wavefunction_dmax, o.wf_tol);
    } catch (const Error& e) {
      write_atomic(o.out, error_json("bound", echo, e).dump(2) + "\n");
      std::cerr << "error: " << e.kind() << ": " << e.what() << "\n";
      return kExitComputation;
    }
    ConfigEcho wf_echo = echo;
    wf_echo.push_back({"eps_b", fmt_exact(result.energy)});
    wf_echo.push_back({"scale", fmt_exact(wf.scale)});
    std::string csv = comment_header("bound", wf_echo);
    csv += "dx,dy,phi_amp\n";
    for (int dx = -wf.dmax; dx <= wf.dmax; ++dx) {
      for (int dy = -wf.dmax; dy <= wf.dmax; ++dy) {
        csv += std::to_string(dx) + "," + std::to_string(dy) + "," + fmt_num(wf.at(dx, dy)) + "\n";
      }
    }
    write_atomic(wf_path, csv);
    std::cout << "wrote " << wf_path << "\n";
  }

  write_atomic(o.out, j.dump(2) + "\n");
  std::cout << "wrote " << o.out << "\n";
  return kExitOk;
}

int cmd_finite(const FiniteOptions& o) {
  require_phi(o.phi);
  if (o.n > kFiniteGuardN && !o.force) {
    throw UsageError("N=" + std::to_string(o.n) + " exceeds the desk-scale guard N<=" +
                     std::to_string(kFiniteGuardN) + "; pass --force to run anyway");
  }
  const int n = o.n;
  if (n < 2) throw DimensionError("finite lattice needs N >= 2, got " + std::to_string(n));
  Site fixed{(n - 1) / 2, (n - 1) / 2};
  if (o.fixed_site) {
    if (o.fixed_site->size() != 2) throw UsageError("--fixed-site takes two integers x y");
    fixed = {(*o.fixed_site)[0], (*o.fixed_site)[1]};
    if (fixed.x < 0 || fixed.x >= n || fixed.y < 0 || fixed.y >= n) {
      throw UsageError("--fixed-site must lie in [0, N) on both axes");
    }
  }
  const std::size_t dim = static_cast<std::size_t>(n) * n * (n * n - 1) / 2;
  std::vector<std::string> dumps = o.state_dump;
  for (const auto& d : dumps) {
    if (d == "max-s") continue;
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(d.data(), d.data() + d.size(), k);
    if (ec != std::errc() || ptr != d.data() + d.size() || k >= dim) {
      throw UsageError("--state-dump expects 'max-s' or a state index below " +
                       std::to_string(dim) + ", got '" + d + "'");
    }
  }

  const ModelParams params(o.phi, n);
  ConfigEcho echo{{"N", std::to_string(n)},
                  {"phi", fmt_exact(o.phi)},
                  {"fold", fold_name(o.fold)},
                  {"superradiant_fraction", fmt_exact(o.thresholds.superradiant_fraction)},
                  {"subradiant_max", fmt_exact(o.thresholds.subradiant_max)},
                  {"bound_min_s", fmt_exact(o.thresholds.bound_min_s)}};

  const auto spectrum = solve_two_excitation(params);
  const auto reports = build_reports(spectrum, o.fold, o.thresholds);

  std::string csv = comment_header("finite", echo);
  csv += "# max_relative_residual=" +
         fmt_num(spectrum.pairs.max_residual() / spectrum.pairs.matrix_norm) + "\n";
  csv += "re_eps,im_eps,gamma,s_degree,label\n";
  for (const auto& r : reports) {
    csv += fmt_num(r.energy.re) + "," + fmt_num(r.energy.im) + "," + fmt_num(r.decay) + "," +
           fmt_num(r.s_degree) + "," + std::string(to_string(r.label)) + "\n";
  }

  std::vector<std::size_t> selected;
  for (const auto& d : dumps) {
    std::size_t k = 0;
    if (d == "max-s") {
      // first index attaining the maximum, so ties resolve deterministically
      for (std::size_t i = 1; i < reports.size(); ++i) {
        if (reports[i].s_degree > reports[k].s_degree) k = i;
      }
    } else {
      std::from_chars(d.data(), d.data() + d.size(), k);
    }
    if (std::find(selected.begin(), selected.end(), k) == selected.end()) selected.push_back(k);
  }
  for (std::size_t k : selected) {
    const auto grid = spatial_distribution(spectrum.state(k), fixed);
    ConfigEcho state_echo = echo;
    state_echo.push_back({"state", std::to_string(k)});
    state_echo.push_back({"re_eps", fmt_exact(reports[k].energy.re)});
    state_echo.push_back({"im_eps", fmt_exact(reports[k].energy.im)});
    state_echo.push_back({"s_degree", fmt_exact(reports[k].s_degree)});
    state_echo.push_back({"fixed_site", std::to_string(fixed.x) + " " + std::to_string(fixed.y)});
    std::string grid_csv = comment_header("finite", state_echo);
    grid_csv += "x,y,weight\n";
    for (int y = 0; y < n; ++y) {
      for (int x = 0; x < n; ++x) {
        grid_csv += std::to_string(x) + "," + std::to_string(y) + "," + fmt_num(grid(y, x)) + "\n";
      }
    }
    const std::string path = sibling_path(o.out, "_state" + std::to_string(k) + ".csv");
    write_atomic(path, grid_csv);
    std::cout << "wrote " << path << "\n";
  }

  write_atomic(o.out, csv);
  std::cout << "wrote " << o.out << " (" << reports.size() << " rows)\n";
  return kExitOk;
}

int cmd_validate(const ValidateOptions& o) {
  const auto& names = validation::check_names();
  for (const auto& name : o.only) {
    if (std::find(names.begin(), names.end(), name) == names.end()) {
      throw UsageError("unknown check '" + name + "'");
    }
  }
  const auto results = validation::run_checks(o.only);

  ordered_json j;
  j["version"] = artifact_version();
  j["command"] = "validate";
  j["config"] = ordered_json::object();
  j["config"]["only"] = o.only;
  j["checks"] = ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    j["checks"].push_back({{"name", r.name},
                           {"passed", r.passed},
                           {"metric", r.metric},
                           {"threshold", r.threshold},
                           {"detail", r.detail}});
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << "  metric=" << fmt_num(r.metric)
              << " threshold=" << fmt_num(r.threshold) << "  " << r.detail << "\n";
  }
  j["passed"] = all;
  write_atomic(o.out, j.dump(2) + "\n");
  std::cout << "wrote " << o.out << "\n";
  return all ? kExitOk : kExitComputation;
}

}  // namespace wqed::cli

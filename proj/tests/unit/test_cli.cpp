#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

#include <json.hpp>

#include "wqed/cli/app.hpp"
#include "wqed/cli/output.hpp"

namespace fs = std::filesystem;
using wqed::cli::run;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    static int counter = 0;
    path = fs::temp_directory_path() /
           ("wqed_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> data_lines(const std::string& path) {
  std::ifstream in(path);
  std::vector<std::string> out;
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line[0] != '#') out.push_back(line);
  }
  return out;
}

}  // namespace

TEST_CASE("dispersion output and usage errors") {
  TempDir tmp;
  const auto out = tmp / "d.csv";
  REQUIRE(run({"dispersion", "--phi", "2.3562", "--Kx", "3.1416", "--Ky", "0", "--grid", "21",
               "--out", out}) == 0);
  const auto text = slurp(out);
  CHECK(text.rfind("# wqed ", 0) == 0);
  CHECK(text.find("# phi=2.3562") != std::string::npos);
  const auto rows = data_lines(out);
  CHECK(rows.front() == "qx,qy,eps");
  CHECK(rows.size() - 1 <= 21 * 21);
  bool found = false;
  for (const auto& r : rows) {
    if (r.rfind("0,0,", 0) == 0) {
      found = true;
      CHECK(std::stod(r.substr(4)) == doctest::Approx(1.4142136).epsilon(1e-4));
    }
  }
  CHECK(found);

  CHECK(run({"dispersion", "--phi", "2.3562", "--grid", "1", "--out", out}) == 2);
  CHECK(run({"dispersion", "--phi", "4.0", "--out", out}) == 2);
  CHECK(run({"dispersion", "--bogus"}) == 2);
  CHECK(run({}) == 2);
  CHECK(run({"--help"}) == 0);
}

TEST_CASE("pi units scale angles") {
  TempDir tmp;
  REQUIRE(run({"dispersion", "--pi-units", "--phi", "0.75", "--Kx", "1", "--grid", "5", "--out",
               tmp / "a.csv"}) == 0);
  CHECK(slurp(tmp / "a.csv").find("# phi=2.356194490192345") != std::string::npos);
}

TEST_CASE("gap-map sweeps") {
  TempDir tmp;
  const auto out = tmp / "g.csv";
  REQUIRE(run({"gap-map", "--pi-units", "--phi-points", "8", "--phi-min", "0.1", "--phi-max",
               "0.45", "--Kx", "1", "--grid", "128", "--out", out}) == 0);
  auto rows = data_lines(out);
  CHECK(rows.front() == "phi,delta,lower_edge,upper_edge");
  REQUIRE(rows.size() == 9);
  for (std::size_t k = 1; k < rows.size(); ++k) {
    std::stringstream ss(rows[k]);
    std::string phi, delta;
    std::getline(ss, phi, ',');
    std::getline(ss, delta, ',');
    CHECK(std::stod(delta) == 0.0);
  }

  REQUIRE(run({"gap-map", "--pi-units", "--phi", "0.75", "--K-points", "1", "--K-min", "1",
               "--grid", "128", "--out", out}) == 0);
  rows = data_lines(out);
  CHECK(rows.front() == "Kx,Ky,delta,lower_edge,upper_edge");
  CHECK(rows.size() == 2);

  REQUIRE(run({"gap-map", "--pi-units", "--phi-points", "2", "--phi-min", "0.7", "--phi-max",
               "0.8", "--Ky-points", "3", "--Kx", "1", "--grid", "96", "--out", out}) == 0);
  rows = data_lines(out);
  CHECK(rows.front() == "phi,Ky,delta,lower_edge,upper_edge");
  CHECK(rows.size() == 7);

  CHECK(run({"gap-map", "--phi", "2", "--phi-points", "3", "--out", out}) == 2);
  CHECK(run({"gap-map", "--phi", "2", "--out", out}) == 2);
  CHECK(run({"gap-map", "--phi", "2", "--K-points", "3", "--Kx", "1", "--out", out}) == 2);
  CHECK(run({"gap-map", "--phi", "2", "--K-points", "3", "--grid", "10", "--out", out}) == 2);
}

TEST_CASE("bound JSON, wavefunction and structured errors") {
  TempDir tmp;
  const auto out = tmp / "b.json";
  REQUIRE(run({"bound", "--pi-units", "--phi", "0.75", "--wavefunction", "3", "--out", out}) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  for (const char* key : {"phi", "Kx", "Ky", "eps_b_numeric", "eps_b_approx", "gap", "residual"}) {
    CHECK(j.contains(key));
  }
  CHECK(j["eps_b_approx"].get<double>() == doctest::Approx(0.4406868).epsilon(1e-7));
  CHECK(j["gap"]["lo"].get<double>() < j["eps_b_numeric"].get<double>());
  CHECK(j["gap"]["hi"].get<double>() > j["eps_b_numeric"].get<double>());
  const auto wf = data_lines(tmp / "b_wavefunction.csv");
  CHECK(wf.front() == "dx,dy,phi_amp");
  CHECK(wf.size() == 1 + 49);
  for (const auto& r : wf) {
    if (r.rfind("0,0,", 0) == 0) CHECK(std::abs(std::stod(r.substr(4))) <= 1e-4);
  }

  CHECK(run({"bound", "--pi-units", "--phi", "0.4", "--out", out}) == 1);
  const auto e = nlohmann::json::parse(slurp(out));
  CHECK(e["error"]["kind"] == "NoGapError");

  REQUIRE(run({"bound", "--pi-units", "--phi", "0.4", "--approx", "--out", out}) == 1);
  REQUIRE(run({"bound", "--pi-units", "--phi", "0.8", "--approx", "--out", out}) == 0);
  const auto a = nlohmann::json::parse(slurp(out));
  CHECK(a["eps_b_numeric"].is_null());
  CHECK(a["eps_b_approx"].get<double>() == doctest::Approx(-0.3127).epsilon(1e-3));
  CHECK(run({"bound", "--phi", "2.3", "--approx", "--wavefunction", "2", "--out", out}) == 2);
}

TEST_CASE("finite spectrum files") {
  TempDir tmp;
  const auto out = tmp / "f.csv";
  REQUIRE(run({"finite", "--N", "3", "--pi-units", "--phi", "0.75", "--state-dump", "max-s",
               "--state-dump", "2", "--fixed-site", "0", "2", "--out", out}) == 0);
  const auto rows = data_lines(out);
  CHECK(rows.front() == "re_eps,im_eps,gamma,s_degree,label");
  CHECK(rows.size() == 1 + 36);
  CHECK(fs::exists(tmp / "f_state2.csv"));
  int grids = 0;
  for (const auto& entry : fs::directory_iterator(tmp.path)) {
    grids += entry.path().filename().string().rfind("f_state", 0) == 0 ? 1 : 0;
  }
  CHECK(grids >= 1);
  const auto g = data_lines(tmp / "f_state2.csv");
  CHECK(g.front() == "x,y,weight");
  CHECK(g.size() == 1 + 9);
  CHECK(g[1 + 2 * 3 + 0] == "0,2,0");

  REQUIRE(run({"finite", "--N", "2", "--phi", "2.3", "--out", out}) == 0);
  CHECK(data_lines(out).size() == 7);
  CHECK(run({"finite", "--N", "1", "--phi", "2.3", "--out", out}) == 1);
  CHECK(run({"finite", "--N", "13", "--phi", "2.3", "--out", out}) == 2);
  CHECK(run({"finite", "--N", "3", "--phi", "2.3", "--fixed-site", "3", "0", "--out", out}) == 2);
  CHECK(run({"finite", "--N", "3", "--phi", "2.3", "--state-dump", "99", "--out", out}) == 2);
  CHECK(run({"finite", "--N", "3", "--phi", "2.3", "--fold", "other", "--out", out}) == 2);
}

TEST_CASE("validate command") {
  TempDir tmp;
  const auto out = tmp / "v.json";
  REQUIRE(run({"validate", "--only", "softcore", "--out", out}) == 0);
  const auto j = nlohmann::json::parse(slurp(out));
  REQUIRE(j["checks"].size() == 1);
  CHECK(j["checks"][0]["name"] == "softcore");
  CHECK(j["checks"][0]["passed"] == true);
  CHECK(run({"validate", "--only", "nonsense", "--out", out}) == 2);
  REQUIRE(run({"validate", "--only", "quadrature,kronecker", "--out", out}) == 0);
  CHECK(nlohmann::json::parse(slurp(out))["checks"].size() == 2);
}

TEST_CASE("config file with flag precedence") {
  TempDir tmp;
  const auto cfg = tmp / "run.cfg";
  {
    std::ofstream os(cfg);
    os << "# dispersion settings\nphi = 0.75\nKx=1\npi-units=true\ngrid=7\nout=" << (tmp / "c.csv")
       << "\n";
  }
  REQUIRE(run({"dispersion", "--config", cfg, "--grid", "5"}) == 0);
  const auto text = slurp(tmp / "c.csv");
  CHECK(text.find("# grid=5") != std::string::npos);
  CHECK(text.find("# Kx=3.141592653589793") != std::string::npos);

  {
    std::ofstream os(cfg);
    os << "phi=2\nwhatever=3\n";
  }
  CHECK(run({"dispersion", "--config", cfg, "--out", tmp / "x.csv"}) == 2);
  {
    std::ofstream os(cfg);
    os << "not a pair\n";
  }
  CHECK(run({"dispersion", "--config", cfg}) == 2);
  CHECK(run({"dispersion", "--config", tmp / "missing.cfg"}) == 2);
}

TEST_CASE("outputs are byte-identical across repeats and thread counts") {
  TempDir tmp;
  const std::vector<std::vector<std::string>> cmds = {
      {"gap-map", "--pi-units", "--phi", "0.75", "--K-points", "3", "--grid", "200"},
      {"bound", "--pi-units", "--phi", "0.75", "--wavefunction", "2"},
      {"finite", "--N", "3", "--phi", "2.3", "--state-dump", "max-s"},
      {"dispersion", "--phi", "2.0", "--grid", "31"},
  };
  const std::vector<std::string> ext = {".csv", ".json", ".csv", ".csv"};
  for (std::size_t c = 0; c < cmds.size(); ++c) {
    std::vector<std::string> texts;
    for (const char* threads : {"1", "2", "1"}) {
      const auto out = tmp / ("o" + std::to_string(c) + "_t" + threads + "_" +
                              std::to_string(texts.size()) + ext[c]);
      auto args = cmds[c];
      args.insert(args.end(), {"--threads", threads, "--out", out});
      REQUIRE(run(args) == 0);
      texts.push_back(slurp(out));
    }
    CHECK(texts[0] == texts[1]);
    CHECK(texts[0] == texts[2]);
  }
}

TEST_CASE("output helpers") {
  using namespace wqed::cli;
  CHECK(fmt_num(1.0 / 3.0) == "0.3333333333");
  CHECK(fmt_exact(0.1) == "0.1");
  CHECK(sibling_path("dir/run.csv", "_state3.csv") == "dir/run_state3.csv");
  CHECK(comment_header("x", {{"a", "1"}}).find("# a=1\n") != std::string::npos);
}

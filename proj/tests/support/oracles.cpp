#include "oracles.hpp"

#include <cmath>
#include <numbers>

namespace oracle {

namespace {
constexpr double pi = std::numbers::pi;

double branch(double k, double phi) { return std::sin(phi) / (std::cos(k) - std::cos(phi)); }
}  // namespace

double pair_energy(double qx, double qy, double kx, double ky, double phi) {
  const double sx = branch(0.5 * (qx + kx), phi) + branch(0.5 * (qx - kx), phi);
  const double sy = branch(0.5 * (qy + ky), phi) + branch(0.5 * (qy - ky), phi);
  return 0.5 * (sx + sy);
}

Edges gap_edges_kx_pi(double phi) {
  const double cot = 1.0 / std::tan(phi);
  const double neg_tan = -std::tan(phi);
  const double cot_half = 1.0 / std::tan(0.5 * phi);
  return {cot + neg_tan, neg_tan + cot_half};
}

double riemann_g0(double eps, double kx, double ky, double phi, int m, int dx, int dy) {
  const double h = 2.0 * pi / m;
  double total = 0.0;
  for (int a = 0; a < m; ++a) {
    const double qx = -pi + h * (a + 0.5);
    double row = 0.0;
    for (int b = 0; b < m; ++b) {
      const double qy = -pi + h * (b + 0.5);
      const double e = pair_energy(qx, qy, kx, ky, phi);
      if (!std::isfinite(e)) continue;
      row += std::cos(qx * dx + qy * dy) / (eps - e);
    }
    total += row;
  }
  return total * h * h;
}

double riemann_root(double kx, double ky, double phi, double lo, double hi, int m) {
  double flo = riemann_g0(lo, kx, ky, phi, m);
  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = riemann_g0(mid, kx, ky, phi, m);
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

double closed_form_bound(double phi) {
  const double c = std::cos(0.5 * phi) / std::sin(0.5 * phi);
  return 2.0 * std::cos(2.0 * phi) / std::sin(2.0 * phi) + 0.5 * std::log((1.0 + c) / (1.0 - c));
}

Eigen::VectorXcd tensor_pair_apply(const Eigen::MatrixXcd& h2, const Eigen::VectorXcd& amp) {
  const int s = static_cast<int>(h2.rows());
  Eigen::MatrixXcd psi = Eigen::MatrixXcd::Zero(s, s);
  int k = 0;
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b, ++k) {
      psi(a, b) = psi(b, a) = amp(k) / std::sqrt(2.0);
    }
  }
  // (H (x) I + I (x) H) psi  ==  H psi + psi H^T
  const Eigen::MatrixXcd out = h2 * psi + psi * h2.transpose();
  Eigen::VectorXcd proj(amp.size());
  k = 0;
  for (int a = 0; a < s; ++a) {
    for (int b = a + 1; b < s; ++b, ++k) proj(k) = (out(a, b) + out(b, a)) / std::sqrt(2.0);
  }
  return proj;
}

Eigen::MatrixXcd chain_kernel(int n, double phi) {
  Eigen::MatrixXcd h(n, n);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) {
      h(a, b) = cplx(0, -1) * std::exp(cplx(0, phi * std::abs(a - b)));
    }
  }
  return h;
}

}  // namespace oracle

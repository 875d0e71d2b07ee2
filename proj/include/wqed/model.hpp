#pragma once

#include <complex>
#include <numbers>

#include <Eigen/Dense>

namespace wqed {

using cplx = std::complex<double>;
using CMatrix = Eigen::MatrixXcd;
using CVector = Eigen::VectorXcd;

inline constexpr double kPi = std::numbers::pi;

/// Physics configuration of the qubit lattice.
///
/// The waveguide velocity v, the qubit spacing d and the resonant wavevector
/// q0 only enter through the phase phi = q0 * d, so phi is the single physics
/// input. Energies are measured in units of the single-qubit decay rate
/// (gamma0 = 1) and the qubit frequency is subtracted (omega0 = 0); both are
/// fixed constants rather than runtime inputs.
class ModelParams {
 public:
  static constexpr double gamma0 = 1.0;
  static constexpr double omega0 = 0.0;

  /// Throws DomainError unless 0 < phi < pi and n_sites >= 1.
  ModelParams(double phi, int n_sites);

  double phi() const noexcept { return phi_; }
  int n_sites() const noexcept { return n_sites_; }

 private:
  double phi_;
  int n_sites_;
};

/// Complex eigen-energy in gamma0 units. Physical decay is -im.
struct ComplexEnergy {
  double re = 0.0;
  double im = 0.0;

  ComplexEnergy() = default;
  ComplexEnergy(double r, double i) : re(r), im(i) {}
  explicit ComplexEnergy(cplx z) : re(z.real()), im(z.imag()) {}

  double decay() const noexcept { return -im; }
  cplx value() const noexcept { return {re, im}; }
};

/// Kernel of the 1D effective Hamiltonian, -i e^{i phi |m-n|} (omega0 dropped).
cplx h1d_element(int m, int n, const ModelParams& params);

/// Dense N x N single-waveguide Hamiltonian. Complex symmetric Toeplitz.
CMatrix build_h1d(const ModelParams& params);

/// Single-excitation 2D lattice Hamiltonian H (x) I + I (x) H on N^2 sites.
/// Site (i, j) (x index i, y index j, zero-based) maps to row j * N + i.
CMatrix build_h2d_single(const ModelParams& params);

/// Row index of lattice site (x, y) in build_h2d_single.
inline int site_index(int x, int y, int n_sites) { return y * n_sites + x; }

}  // namespace wqed

#include "wqed/model.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "wqed/errors.hpp"

namespace wqed {

ModelParams::ModelParams(double phi, int n_sites) : phi_(phi), n_sites_(n_sites) {
  if (!(phi > 0.0 && phi < kPi)) {
    throw DomainError("phi must lie in (0, pi), got " + std::to_string(phi));
  }
  if (n_sites < 1) {
    throw DomainError("n_sites must be >= 1, got " + std::to_string(n_sites));
  }
}

cplx h1d_element(int m, int n, const ModelParams& params) {
  const double arg = params.phi() * std::abs(m - n);
  // -i * gamma0 * e^{i arg}
  return ModelParams::gamma0 * cplx(std::sin(arg), -std::cos(arg));
}

CMatrix build_h1d(const ModelParams& params) {
  const int n = params.n_sites();
  CMatrix h(n, n);
  for (int c = 0; c < n; ++c) {
    for (int r = 0; r < n; ++r) h(r, c) = h1d_element(r, c, params);
  }
  return h;
}

CMatrix build_h2d_single(const ModelParams& params) {
  const int n = params.n_sites();
  const CMatrix h = build_h1d(params);
  const int dim = n * n;
  CMatrix out = CMatrix::Zero(dim, dim);
  for (int y = 0; y < n; ++y) {
    for (int x = 0; x < n; ++x) {
      const int row = site_index(x, y, n);
      for (int l = 0; l < n; ++l) {
        out(row, site_index(l, y, n)) += h(x, l);
        out(row, site_index(x, l, n)) += h(y, l);
      }
    }
  }
  return out;
}

}  // namespace wqed

#include "wqed/numerics/eigensolver.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <lapacke.h>

#include "wqed/errors.hpp"

extern "C" {
void openblas_set_num_threads(int num_threads);
int openblas_get_num_threads(void);
}

namespace wqed::numerics {

namespace {

// zgeev's Schur reduction is not bit-stable across BLAS thread counts.
class BlasThreadPin {
 public:
  BlasThreadPin() : saved_(openblas_get_num_threads()) { openblas_set_num_threads(1); }
  ~BlasThreadPin() { openblas_set_num_threads(saved_); }
  BlasThreadPin(const BlasThreadPin&) = delete;
  BlasThreadPin& operator=(const BlasThreadPin&) = delete;

 private:
  int saved_;
};

std::vector<double> column_residuals(const CMatrix& a, const CMatrix& v,
                                     const std::vector<cplx>& w) {
  const Eigen::Index n = a.rows();
  std::vector<double> res(static_cast<std::size_t>(n));
  constexpr Eigen::Index kBlock = 256;
  for (Eigen::Index c0 = 0; c0 < n; c0 += kBlock) {
    const Eigen::Index nc = std::min(kBlock, n - c0);
    CMatrix r = a * v.middleCols(c0, nc);
    for (Eigen::Index k = 0; k < nc; ++k) {
      r.col(k) -= w[static_cast<std::size_t>(c0 + k)] * v.col(c0 + k);
      res[static_cast<std::size_t>(c0 + k)] = r.col(k).norm();
    }
  }
  return res;
}

}  // namespace

double EigenPairs::max_residual() const {
  return residuals.empty() ? 0.0 : *std::max_element(residuals.begin(), residuals.end());
}

EigenPairs eig_complex_general(CMatrix a) {
  if (a.rows() != a.cols()) throw DimensionError("eig_complex_general: matrix must be square");
  const lapack_int n = static_cast<lapack_int>(a.rows());
  if (n == 0) throw DimensionError("eig_complex_general: empty matrix");
  if (!a.allFinite()) throw DomainError("eig_complex_general: non-finite entries");

  EigenPairs out;
  out.matrix_norm = a.norm();
  const cplx trace = a.trace();

  std::vector<cplx> w(static_cast<std::size_t>(n));
  CMatrix vr(n, n);
  {
    CMatrix work = a;
    BlasThreadPin pin;
    const lapack_int info = LAPACKE_zgeev(
        LAPACK_COL_MAJOR, 'N', 'V', n, reinterpret_cast<lapack_complex_double*>(work.data()), n,
        reinterpret_cast<lapack_complex_double*>(w.data()), nullptr, 1,
        reinterpret_cast<lapack_complex_double*>(vr.data()), n);
    if (info < 0) throw DomainError("zgeev: illegal argument " + std::to_string(-info));
    if (info > 0) {
      std::vector<int> failed(static_cast<std::size_t>(info));
      std::iota(failed.begin(), failed.end(), 0);
      throw ConvergenceFailure("zgeev: QR iteration failed for " + std::to_string(info) +
                                   " eigenvalues",
                               std::move(failed));
    }
  }

  std::vector<int> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int l, int r) {
    const cplx& x = w[static_cast<std::size_t>(l)];
    const cplx& y = w[static_cast<std::size_t>(r)];
    if (x.real() != y.real()) return x.real() < y.real();
    return x.imag() < y.imag();
  });

  out.values.resize(static_cast<std::size_t>(n));
  out.vectors.resize(n, n);
  for (lapack_int k = 0; k < n; ++k) {
    const int src = order[static_cast<std::size_t>(k)];
    out.values[static_cast<std::size_t>(k)] = w[static_cast<std::size_t>(src)];
    out.vectors.col(k) = vr.col(src);
    out.vectors.col(k) /= out.vectors.col(k).norm();
  }
  vr.resize(0, 0);

  out.residuals = column_residuals(a, out.vectors, out.values);

  cplx sum = 0.0;
  for (const auto& v : out.values) sum += v;
  out.trace_error = std::abs(sum - trace);

  const double limit = kResidualTolerance * std::max(out.matrix_norm, 1e-300);
  std::vector<int> bad;
  for (std::size_t k = 0; k < out.residuals.size(); ++k) {
    if (!(out.residuals[k] <= limit)) bad.push_back(static_cast<int>(k));
  }
  if (!bad.empty()) {
    throw ConvergenceFailure(std::to_string(bad.size()) + " eigenpairs exceed residual bound",
                             std::move(bad));
  }
  if (!(out.trace_error <= kTraceTolerance * std::max(out.matrix_norm, 1e-300))) {
    throw ConvergenceFailure("eigenvalue sum differs from trace by " +
                                 std::to_string(out.trace_error),
                             {});
  }
  return out;
}

}  // namespace wqed::numerics

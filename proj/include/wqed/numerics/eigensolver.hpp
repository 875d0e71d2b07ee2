#pragma once

#include <vector>

#include "wqed/model.hpp"

namespace wqed::numerics {

/// Full eigen-decomposition of a general complex matrix.
///
/// values are sorted by (Re, Im) ascending; column k of `vectors` is the
/// unit-norm right eigenvector of values[k].
struct EigenPairs {
  std::vector<cplx> values;
  CMatrix vectors;
  std::vector<double> residuals;  // ||A v - lambda v||_2 per pair
  double matrix_norm = 0.0;       // Frobenius norm of A
  double trace_error = 0.0;       // |sum(lambda) - tr(A)|

  double max_residual() const;
};

inline constexpr double kResidualTolerance = 1e-8;  // relative to ||A||
inline constexpr double kTraceTolerance = 1e-6;     // relative to ||A||

/// Dense complex eigensolver (LAPACK zgeev). Residuals and trace consistency
/// are checked before returning; pairs whose residual exceeds
/// kResidualTolerance * ||A|| are reported through ConvergenceFailure, as are
/// eigenvalues the QR iteration failed to converge.
EigenPairs eig_complex_general(CMatrix a);

}  // namespace wqed::numerics

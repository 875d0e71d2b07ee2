#include "wqed/finite_lattice.hpp"

namespace wqed::reference {

CMatrix assemble_pair_hamiltonian_serial(const ModelParams& params) {
  const PairBasis basis(params.n_sites());
  const CMatrix h2 = build_h2d_single(params);
  const int sites = basis.n_linear_sites();
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  CMatrix a = CMatrix::Zero(dim, dim);
  const auto& pairs = basis.pairs();
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto [p, r] = pairs[static_cast<std::size_t>(col)];
    for (int t = 0; t < sites; ++t) {
      if (t != r) a(static_cast<Eigen::Index>(basis.index_of(t, r)), col) += h2(t, p);
    }
    for (int t = 0; t < sites; ++t) {
      if (t != p) a(static_cast<Eigen::Index>(basis.index_of(t, p)), col) += h2(t, r);
    }
  }
  return a;
}

std::vector<EigenReport> build_reports_serial(const TwoExcitationSpectrum& spectrum,
                                              OffsetFold fold,
                                              const ClassifyThresholds& thresholds) {
  std::vector<EigenReport> out;
  out.reserve(spectrum.energies.size());
  for (std::size_t k = 0; k < spectrum.energies.size(); ++k) {
    EigenReport r;
    r.energy = spectrum.energies[k];
    r.decay = r.energy.decay();
    r.s_degree = localization_degree(spectrum.state(k), fold);
    r.label = classify_one(r.decay, r.s_degree, spectrum.basis.n_sites(), thresholds);
    out.push_back(r);
  }
  return out;
}

}  // namespace wqed::reference

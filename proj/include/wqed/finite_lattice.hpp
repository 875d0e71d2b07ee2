#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "wqed/model.hpp"
#include "wqed/numerics/eigensolver.hpp"

namespace wqed {

/// Lattice site, zero-based: x in [0, N), y in [0, N).
struct Site {
  int x;
  int y;
};

/// Unordered pairs of distinct sites in canonical order.
///
/// Sites are linearized as s = y * N + x; each pair is stored with s1 < s2
/// and pairs are sorted lexicographically by (s1, s2). Dimension
/// N^2 (N^2 - 1) / 2.
class PairBasis {
 public:
  struct Pair {
    int s1;
    int s2;
  };

  explicit PairBasis(int n_sites);

  int n_sites() const noexcept { return n_sites_; }
  int n_linear_sites() const noexcept { return n_sites_ * n_sites_; }
  std::size_t dimension() const noexcept { return pairs_.size(); }
  const std::vector<Pair>& pairs() const noexcept { return pairs_; }

  /// Basis index of the unordered pair {s1, s2}; throws IndexError when
  /// s1 == s2 or either is out of range.
  std::size_t index_of(int s1, int s2) const;
  Site site(int s) const noexcept { return {s % n_sites_, s / n_sites_}; }
  int linear(Site site) const noexcept { return site.y * n_sites_ + site.x; }

 private:
  int n_sites_;
  std::vector<Pair> pairs_;
};

/// Non-owning view of pair amplitudes psi over a PairBasis. The ordered-pair
/// amplitude is psi_{s1,s2} = psi_{s2,s1} = amp / sqrt(2), so a unit-norm
/// `amp` is a normalized two-excitation state.
struct PairAmplitudeView {
  const PairBasis& basis;
  std::span<const cplx> amp;
};

/// Owning amplitude field.
struct PairAmplitudeField {
  PairBasis basis;
  CVector amp;

  PairAmplitudeView view() const {
    return {basis, std::span<const cplx>(amp.data(), static_cast<std::size_t>(amp.size()))};
  }
};

enum class StateLabel { superradiant, bright, subradiant, bound_candidate };
std::string_view to_string(StateLabel label);

struct EigenReport {
  ComplexEnergy energy;
  double decay = 0.0;     // -Im(eps)
  double s_degree = 0.0;  // localization degree in (0, 1]
  StateLabel label = StateLabel::bright;
};

/// How the reflected offsets (+-n, +-m) are folded into Psi(m, n).
/// `distinct` counts each distinct partner offset once; `four_term` sums the
/// four sign combinations literally, so offsets on an axis count twice.
enum class OffsetFold { distinct, four_term };

struct ClassifyThresholds {
  double superradiant_fraction = 0.5;  // Gamma >= fraction * N
  double subradiant_max = 0.1;         // Gamma <= this
  double bound_min_s = 0.5;            // S >= this
};

/// Operator returning 2 eps psi for the hard-core two-excitation problem: the
/// symmetric two-particle Kronecker sum projected onto distinct pairs.
/// Throws DimensionError for N < 2.
CMatrix assemble_pair_hamiltonian(const ModelParams& params);

/// Finite-chi two-excitation operator on all pairs s1 <= s2 (doubly occupied
/// included), in the orthonormal symmetric basis. Returns 2 eps.
CMatrix assemble_soft_core(const ModelParams& params, double chi);

/// Ordering of the soft-core basis (s1 <= s2, lexicographic).
std::vector<PairBasis::Pair> soft_core_pairs(int n_sites);

/// Weight of a soft-core state on doubly occupied configurations.
double doubly_occupied_weight(std::span<const cplx> soft_core_state, int n_sites);

/// Full diagonalization with the residual contract of eig_complex_general.
numerics::EigenPairs eigensolve(const CMatrix& a);

/// S = sum Psi^2 / (sum Psi)^2 over the offset grid (m, n) in [0, N)^2.
double localization_degree(PairAmplitudeView state, OffsetFold fold = OffsetFold::distinct);

/// The folded offset distribution Psi(m, n) (rows: y-offset m, cols: x-offset n).
Eigen::MatrixXd offset_distribution(PairAmplitudeView state,
                                    OffsetFold fold = OffsetFold::distinct);

/// |psi_{fixed,(x,y)}|^2 as an N x N grid indexed (y, x); zero at `fixed`.
Eigen::MatrixXd spatial_distribution(PairAmplitudeView state, Site fixed);

/// Applies the classification thresholds in order: superradiant, subradiant,
/// bound-candidate, bright.
StateLabel classify_one(double decay, double s_degree, int n_sites,
                        const ClassifyThresholds& thresholds = {});
void classify(std::span<EigenReport> reports, int n_sites,
              const ClassifyThresholds& thresholds = {});

/// Eigen-energies eps (half the operator eigenvalues) with eigenvectors.
struct TwoExcitationSpectrum {
  PairBasis basis;
  numerics::EigenPairs pairs;  // raw eigenpairs of the 2 eps operator
  std::vector<ComplexEnergy> energies;

  PairAmplitudeView state(std::size_t k) const;
};

TwoExcitationSpectrum solve_two_excitation(const ModelParams& params);

/// Per-state reports (energy, decay, S, label), parallel over states.
std::vector<EigenReport> build_reports(const TwoExcitationSpectrum& spectrum,
                                       OffsetFold fold = OffsetFold::distinct,
                                       const ClassifyThresholds& thresholds = {});

}  // namespace wqed

namespace wqed::reference {

CMatrix assemble_pair_hamiltonian_serial(const ModelParams& params);
std::vector<EigenReport> build_reports_serial(const TwoExcitationSpectrum& spectrum,
                                              OffsetFold fold = OffsetFold::distinct,
                                              const ClassifyThresholds& thresholds = {});

}  // namespace wqed::reference

#include "wqed/finite_lattice.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "wqed/errors.hpp"

namespace wqed {

namespace {

// Index of {s1 < s2} in the canonical distinct-pair order over `sites` sites.
inline std::size_t distinct_index(int s1, int s2, int sites) {
  const auto a = static_cast<std::size_t>(s1);
  return a * sites - a * (a + 1) / 2 + static_cast<std::size_t>(s2 - s1 - 1);
}

inline std::size_t distinct_index_unordered(int s, int t, int sites) {
  return s < t ? distinct_index(s, t, sites) : distinct_index(t, s, sites);
}

// Index of {s1 <= s2} in the soft-core order.
inline std::size_t soft_index(int s1, int s2, int sites) {
  if (s1 > s2) std::swap(s1, s2);
  const auto a = static_cast<std::size_t>(s1);
  return a * sites - a * (a - 1) / 2 + static_cast<std::size_t>(s2 - s1);
}

}  // namespace

std::string_view to_string(StateLabel label) {
  switch (label) {
    case StateLabel::superradiant: return "superradiant";
    case StateLabel::bright: return "bright";
    case StateLabel::subradiant: return "subradiant";
    case StateLabel::bound_candidate: return "bound-candidate";
  }
  return "bright";
}

PairBasis::PairBasis(int n_sites) : n_sites_(n_sites) {
  if (n_sites < 2) {
    throw DimensionError("two-excitation basis needs N >= 2, got " + std::to_string(n_sites));
  }
  const int sites = n_linear_sites();
  pairs_.reserve(static_cast<std::size_t>(sites) * (sites - 1) / 2);
  for (int s1 = 0; s1 < sites; ++s1) {
    for (int s2 = s1 + 1; s2 < sites; ++s2) pairs_.push_back({s1, s2});
  }
}

std::size_t PairBasis::index_of(int s1, int s2) const {
  const int sites = n_linear_sites();
  if (s1 < 0 || s2 < 0 || s1 >= sites || s2 >= sites) {
    throw IndexError("site index outside the lattice");
  }
  if (s1 == s2) throw IndexError("hard-core basis has no doubly occupied pair");
  return distinct_index_unordered(s1, s2, sites);
}

CMatrix assemble_pair_hamiltonian(const ModelParams& params) {
  const PairBasis basis(params.n_sites());
  const CMatrix h2 = build_h2d_single(params);
  const int sites = basis.n_linear_sites();
  const auto dim = static_cast<Eigen::Index>(basis.dimension());
  CMatrix a = CMatrix::Zero(dim, dim);
  const auto& pairs = basis.pairs();

  // Column {p, r}: the first excitation hops p -> t (row {t, r}) and the
  // second r -> t (row {t, p}); hops onto the occupied site leave the subspace.
#pragma omp parallel for schedule(static)
  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto [p, r] = pairs[static_cast<std::size_t>(col)];
    for (int t = 0; t < sites; ++t) {
      if (t != r) a(static_cast<Eigen::Index>(distinct_index_unordered(t, r, sites)), col) += h2(t, p);
    }
    for (int t = 0; t < sites; ++t) {
      if (t != p) a(static_cast<Eigen::Index>(distinct_index_unordered(t, p, sites)), col) += h2(t, r);
    }
  }
  return a;
}

std::vector<PairBasis::Pair> soft_core_pairs(int n_sites) {
  const int sites = n_sites * n_sites;
  std::vector<PairBasis::Pair> pairs;
  pairs.reserve(static_cast<std::size_t>(sites) * (sites + 1) / 2);
  for (int s1 = 0; s1 < sites; ++s1) {
    for (int s2 = s1; s2 < sites; ++s2) pairs.push_back({s1, s2});
  }
  return pairs;
}

CMatrix assemble_soft_core(const ModelParams& params, double chi) {
  if (!(chi >= 0.0)) throw DomainError("assemble_soft_core: chi must be >= 0");
  const CMatrix h2 = build_h2d_single(params);
  const int sites = params.n_sites() * params.n_sites();
  const auto pairs = soft_core_pairs(params.n_sites());
  const auto dim = static_cast<Eigen::Index>(pairs.size());
  const double root2 = std::numbers::sqrt2;
  CMatrix a = CMatrix::Zero(dim, dim);

  for (Eigen::Index col = 0; col < dim; ++col) {
    const auto [p, r] = pairs[static_cast<std::size_t>(col)];
    auto row = [&](int s, int t) { return static_cast<Eigen::Index>(soft_index(s, t, sites)); };
    if (p == r) {
      for (int t = 0; t < sites; ++t) {
        if (t == p) {
          a(row(p, p), col) += 2.0 * h2(p, p) + chi;
        } else {
          a(row(t, p), col) += root2 * h2(t, p);
        }
      }
      continue;
    }
    for (int t = 0; t < sites; ++t) {
      a(row(t, r), col) += (t == r ? root2 : 1.0) * h2(t, p);
    }
    for (int t = 0; t < sites; ++t) {
      a(row(t, p), col) += (t == p ? root2 : 1.0) * h2(t, r);
    }
  }
  return a;
}

double doubly_occupied_weight(std::span<const cplx> state, int n_sites) {
  const int sites = n_sites * n_sites;
  if (state.size() != static_cast<std::size_t>(sites) * (sites + 1) / 2) {
    throw DimensionError("doubly_occupied_weight: state does not match the soft-core basis");
  }
  double w = 0.0, total = 0.0;
  for (int s = 0; s < sites; ++s) w += std::norm(state[soft_index(s, s, sites)]);
  for (const auto& c : state) total += std::norm(c);
  return total > 0.0 ? w / total : 0.0;
}

numerics::EigenPairs eigensolve(const CMatrix& a) { return numerics::eig_complex_general(a); }

Eigen::MatrixXd offset_distribution(PairAmplitudeView state, OffsetFold fold) {
  const auto& basis = state.basis;
  if (state.amp.size() != basis.dimension()) {
    throw DimensionError("amplitude field does not match its basis");
  }
  const int n = basis.n_sites();
  Eigen::MatrixXd psi = Eigen::MatrixXd::Zero(n, n);
  const double inv_cells = 1.0 / (static_cast<double>(n) * n);
  const auto& pairs = basis.pairs();
  for (std::size_t k = 0; k < pairs.size(); ++k) {
    const Site a = basis.site(pairs[k].s1);
    const Site b = basis.site(pairs[k].s2);
    const int dx = std::abs(a.x - b.x);
    const int dy = std::abs(a.y - b.y);
    // Both orderings of the pair land on the same |offset| cell: 2 * |amp|^2 / 2.
    double mult = 1.0;
    if (fold == OffsetFold::four_term) mult = (dx == 0 ? 2.0 : 1.0) * (dy == 0 ? 2.0 : 1.0);
    psi(dy, dx) += mult * std::norm(state.amp[k]) * inv_cells;
  }
  return psi;
}

double localization_degree(PairAmplitudeView state, OffsetFold fold) {
  const Eigen::MatrixXd psi = offset_distribution(state, fold);
  const double total = psi.sum();
  if (!(total > 0.0)) throw DomainError("localization_degree of a zero state");
  return psi.squaredNorm() / (total * total);
}

Eigen::MatrixXd spatial_distribution(PairAmplitudeView state, Site fixed) {
  const auto& basis = state.basis;
  const int n = basis.n_sites();
  if (fixed.x < 0 || fixed.y < 0 || fixed.x >= n || fixed.y >= n) {
    throw IndexError("fixed site (" + std::to_string(fixed.x) + ", " + std::to_string(fixed.y) +
                     ") outside the " + std::to_string(n) + "x" + std::to_string(n) + " lattice");
  }
  if (state.amp.size() != basis.dimension()) {
    throw DimensionError("amplitude field does not match its basis");
  }
  const int s0 = basis.linear(fixed);
  Eigen::MatrixXd grid = Eigen::MatrixXd::Zero(n, n);
  for (int s = 0; s < basis.n_linear_sites(); ++s) {
    if (s == s0) continue;
    const Site other = basis.site(s);
    grid(other.y, other.x) = 0.5 * std::norm(state.amp[basis.index_of(s0, s)]);
  }
  return grid;
}

StateLabel classify_one(double decay, double s_degree, int n_sites,
                        const ClassifyThresholds& t) {
  if (decay >= t.superradiant_fraction * n_sites * ModelParams::gamma0) {
    return StateLabel::superradiant;
  }
  if (decay <= t.subradiant_max * ModelParams::gamma0) return StateLabel::subradiant;
  if (s_degree >= t.bound_min_s) return StateLabel::bound_candidate;
  return StateLabel::bright;
}

void classify(std::span<EigenReport> reports, int n_sites, const ClassifyThresholds& t) {
  for (auto& r : reports) r.label = classify_one(r.decay, r.s_degree, n_sites, t);
}

PairAmplitudeView TwoExcitationSpectrum::state(std::size_t k) const {
  if (k >= energies.size()) throw IndexError("state index out of range");
  const auto col = static_cast<Eigen::Index>(k);
  return {basis, std::span<const cplx>(pairs.vectors.col(col).data(),
                                       static_cast<std::size_t>(pairs.vectors.rows()))};
}

TwoExcitationSpectrum solve_two_excitation(const ModelParams& params) {
  PairBasis basis(params.n_sites());
  numerics::EigenPairs pairs = eigensolve(assemble_pair_hamiltonian(params));
  std::vector<ComplexEnergy> energies;
  energies.reserve(pairs.values.size());
  for (const auto& v : pairs.values) energies.emplace_back(0.5 * v);
  return {std::move(basis), std::move(pairs), std::move(energies)};
}

std::vector<EigenReport> build_reports(const TwoExcitationSpectrum& spectrum, OffsetFold fold,
                                       const ClassifyThresholds& thresholds) {
  const int count = static_cast<int>(spectrum.energies.size());
  std::vector<EigenReport> out(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static)
  for (int k = 0; k < count; ++k) {
    auto& r = out[static_cast<std::size_t>(k)];
    r.energy = spectrum.energies[static_cast<std::size_t>(k)];
    r.decay = r.energy.decay();
    r.s_degree = localization_degree(spectrum.state(static_cast<std::size_t>(k)), fold);
  }
  classify(out, spectrum.basis.n_sites(), thresholds);
  return out;
}

}  // namespace wqed

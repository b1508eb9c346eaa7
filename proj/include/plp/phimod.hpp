#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "plp/polygon.hpp"
#include "plp/qmatrix.hpp"

namespace plp {

// Filtered phi-module over Q_p with rational data. Coordinates are arbitrary;
// the columns of `basis` form an adapted basis: column i spans the weight
// weights[i] step of the filtration, so Fil^j = span{basis_i : weights[i] >= j}.
class FilteredPhiModule {
 public:
  // Throws std::invalid_argument on singular phi or basis, unsorted weights or
  // mismatched sizes.
  FilteredPhiModule(Prime p, QMatrix phi, std::vector<long> weights, QMatrix basis);
  FilteredPhiModule(Prime p, QMatrix phi, std::vector<long> weights);  // basis = identity

  const Prime& prime() const { return p_; }
  std::size_t dim() const { return weights_.size(); }
  const QMatrix& phi() const { return phi_; }
  const std::vector<long>& weights() const { return weights_; }
  const QMatrix& basis() const { return basis_; }
  long bottom_weight() const { return weights_.front(); }
  long top_weight() const { return weights_.back(); }
  bool distinct_weights() const;

  // Matrix of phi in the adapted basis.
  QMatrix phi_in_basis() const;
  // Indices i of basis vectors with weights[i] >= j.
  std::set<std::size_t> filtration_indices(long j) const;
  // dim D / Fil^j D
  std::size_t codim_fil(long j) const;
  // Columns spanning Fil^j D.
  QMatrix fil(long j) const;

  friend bool operator==(const FilteredPhiModule&, const FilteredPhiModule&);

 private:
  Prime p_;
  QMatrix phi_;
  std::vector<long> weights_;
  QMatrix basis_;
};

// Sorted valuations of the eigenvalues of phi.
std::vector<Rational> newton_slopes(const FilteredPhiModule& d);

// Smallest integer t >= t_{HT,d} with t - t_{HT,1} > t_{N,d} - t_{N,1}.
long enlarged_top_weight(const FilteredPhiModule& d);

// phi * p^{-weights} in the adapted basis is p-integral with unit determinant.
bool strongly_divisible_check(const FilteredPhiModule& d);

// Matrix of phi in the adapted basis is U * diag(p^{s_i}) with U in GL_d(Z_p),
// s_i the sorted Smith valuations; required for the Smith slope bracket.
bool adapted_to_phi(const FilteredPhiModule& d);

struct StableSubspaceReport {
  std::vector<std::size_t> eigen_indices;  // empty when the whole module is meant
  Polygon hodge;
  Polygon newton;
  bool below = false;
};

struct WeakAdmissibilityReport {
  Polygon hodge;
  Polygon newton;
  bool endpoints_equal = false;
  // false when phi has irreducible characteristic polynomial over Q_p
  bool split = false;
  // eigen_indices refer to the sorted Newton slopes when the eigenvalues lie in
  // Q_p but not in Q (dimension 2 only)
  std::vector<StableSubspaceReport> subspaces;
  bool ok = false;
};
// Throws std::domain_error naming the failed precondition when phi is neither
// split with distinct rational eigenvalues nor of dimension 2.
WeakAdmissibilityReport weakly_admissible_check(const FilteredPhiModule& d);

// Complete phi-stable flag F_i = span(e_1..e_i) given by eigenvectors, and the
// unipotent upper triangular matrix P of the adapted basis in (e_i).
struct Refinement {
  QMatrix eigenbasis;            // columns e_i
  std::vector<Rational> alphas;  // phi e_i = alpha_i e_i
  QMatrix P;
};

struct RefinementReport {
  bool eigen_ok = false;       // phi e_i = alpha_i e_i
  bool unipotent_ok = false;   // P unipotent upper triangular
  bool basis_ok = false;       // eigenbasis * P == adapted basis
  bool stable_ok = false;      // each F_i is phi-stable
  bool position_ok = false;    // F_i meets Fil^{t_i} and misses Fil^{t_i + 1}
  bool ok() const { return eigen_ok && unipotent_ok && basis_ok && stable_ok && position_ok; }
};
// Requires distinct weights.
RefinementReport refinement_check(const FilteredPhiModule& d, const Refinement& r);

// Module with phi = diag(alphas) in coordinates e_i and adapted basis given by P.
FilteredPhiModule refined_module(const Prime& p, const std::vector<Rational>& alphas, const QMatrix& P,
                                 std::vector<long> weights);
Refinement standard_refinement(const std::vector<Rational>& alphas, const QMatrix& P);

// P phi_0 P^{-1} phi_0^{-1} with phi_0 = diag(alphas).
QMatrix refinement_commutator(const Refinement& r);
// The commutator is p-integral with unit determinant.
bool refinement_basis_adapted(const Refinement& r, const Prime& p);

// D[i]: weights shifted by i, phi multiplied by p^i.
FilteredPhiModule tate_twist(const FilteredPhiModule& d, long i);

// Rational roots with multiplicity, sorted.
std::vector<Rational> rational_roots(const Poly& f);

}  // namespace plp

#include "plp/phimod.hpp"

#include <algorithm>
#include <stdexcept>

namespace plp {

namespace {

void require_square_invertible(const QMatrix& m, std::size_t d, const char* what) {
  if (m.rows() != d || m.cols() != d) throw std::invalid_argument(std::string(what) + " has the wrong shape");
  if (m.determinant() == 0) throw std::invalid_argument(std::string(what) + " is singular");
}

QMatrix p_power_diagonal(const Prime& p, const std::vector<long>& exps, long sign) {
  std::vector<Rational> diag;
  for (long e : exps) diag.push_back(pow(Rational(p.value()), sign * e));
  return QMatrix::diagonal(diag);
}

std::size_t intersection_dim(const QMatrix& a, const QMatrix& b) {
  if (a.cols() == 0 || b.cols() == 0) return 0;
  return a.cols() + b.cols() - hstack(a, b).rank();
}

std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  std::vector<std::pair<Integer, unsigned>> f;
  Integer d = 2;
  unsigned long steps = 0;
  while (d * d <= n) {
    if (++steps > 5'000'000) throw std::domain_error("coefficients too large for a rational root search");
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) n /= d, ++e;
      f.emplace_back(d, e);
    }
    d += 1;
  }
  if (n > 1) f.emplace_back(n, 1);
  std::vector<Integer> out{1};
  for (const auto& [q, e] : f) {
    std::size_t base = out.size();
    Integer qq = 1;
    for (unsigned k = 1; k <= e; ++k) {
      qq *= q;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * qq);
    }
  }
  return out;
}

}  // namespace

FilteredPhiModule::FilteredPhiModule(Prime p, QMatrix phi, std::vector<long> weights, QMatrix basis)
    : p_(p), phi_(std::move(phi)), weights_(std::move(weights)), basis_(std::move(basis)) {
  if (weights_.empty()) throw std::invalid_argument("dimension must be positive");
  if (!std::is_sorted(weights_.begin(), weights_.end()))
    throw std::invalid_argument("Hodge-Tate weights must be nondecreasing");
  require_square_invertible(phi_, weights_.size(), "phi");
  require_square_invertible(basis_, weights_.size(), "basis");
}

FilteredPhiModule::FilteredPhiModule(Prime p, QMatrix phi, std::vector<long> weights)
    : FilteredPhiModule(p, std::move(phi), weights, QMatrix::identity(weights.size())) {}

bool FilteredPhiModule::distinct_weights() const {
  return std::adjacent_find(weights_.begin(), weights_.end()) == weights_.end();
}

QMatrix FilteredPhiModule::phi_in_basis() const { return basis_.inverse() * phi_ * basis_; }

std::set<std::size_t> FilteredPhiModule::filtration_indices(long j) const {
  std::set<std::size_t> s;
  for (std::size_t i = 0; i < weights_.size(); ++i)
    if (weights_[i] >= j) s.insert(i);
  return s;
}

std::size_t FilteredPhiModule::codim_fil(long j) const { return dim() - filtration_indices(j).size(); }

QMatrix FilteredPhiModule::fil(long j) const {
  auto idx = filtration_indices(j);
  return basis_.columns(std::vector<std::size_t>(idx.begin(), idx.end()));
}

bool operator==(const FilteredPhiModule& a, const FilteredPhiModule& b) {
  return a.p_.value() == b.p_.value() && a.phi_ == b.phi_ && a.weights_ == b.weights_ && a.basis_ == b.basis_;
}

std::vector<Rational> newton_slopes(const FilteredPhiModule& d) {
  return newton_polygon(d.phi(), d.prime()).slopes();
}

long enlarged_top_weight(const FilteredPhiModule& d) {
  auto s = newton_slopes(d);
  Rational spread = s.back() - s.front();
  // t - t_1 > spread
  long t = floor(spread + d.bottom_weight()).get_si() + 1;
  return std::max(t, d.top_weight());
}

bool strongly_divisible_check(const FilteredPhiModule& d) {
  QMatrix m = d.phi_in_basis() * p_power_diagonal(d.prime(), d.weights(), -1);
  return m.min_valuation(d.prime()) >= Valuation(0) && valuation(m.determinant(), d.prime()) == Valuation(0);
}

bool adapted_to_phi(const FilteredPhiModule& d) {
  QMatrix phi_b = d.phi_in_basis();
  auto s = smith_valuations(phi_b, d.prime());
  std::vector<Rational> inv;
  for (const auto& v : s) {
    if (v.get_den() != 1) return false;
    inv.push_back(pow(Rational(d.prime().value()), -v.get_num().get_si()));
  }
  QMatrix u = phi_b * QMatrix::diagonal(inv);
  return u.min_valuation(d.prime()) >= Valuation(0) && valuation(u.determinant(), d.prime()) == Valuation(0);
}

std::vector<Rational> rational_roots(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no finite root set");
  Integer den = 1;
  for (const auto& c : f.coefficients()) {
    Integer g;
    mpz_lcm(g.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    den = g;
  }
  Poly g = f * Rational(den);
  std::vector<Rational> roots;
  while (g.degree() > 0 && g.coeff(0) == 0) {
    roots.emplace_back(0);
    g = exact_div(g, Poly::x());
  }
  if (g.degree() <= 0) return roots;
  auto nums = divisors(g.coeff(0).get_num());
  auto dens = divisors(g.leading().get_num());
  std::vector<Rational> candidates;
  for (const auto& a : nums)
    for (const auto& b : dens)
      for (int sgn : {1, -1}) {
        Rational c(Integer(a * sgn), b);
        c.canonicalize();
        candidates.push_back(c);
      }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& c : candidates) {
    Poly lin(std::vector<Rational>{-c, Rational(1)});
    while (g.degree() > 0 && g(c) == 0) {
      roots.push_back(c);
      g = exact_div(g, lin);
    }
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

WeakAdmissibilityReport weakly_admissible_check(const FilteredPhiModule& d) {
  const Prime& p = d.prime();
  WeakAdmissibilityReport r;
  r.hodge = hodge_polygon(d.weights());
  r.newton = newton_polygon(d.phi(), p);
  r.endpoints_equal = r.hodge.same_endpoints(r.newton);

  const Poly chi = d.phi().characteristic_polynomial();
  auto roots = rational_roots(chi);
  if (static_cast<std::size_t>(roots.size()) == d.dim()) {
    if (std::adjacent_find(roots.begin(), roots.end()) != roots.end())
      throw std::domain_error("repeated eigenvalues of phi are not supported");
    r.split = true;
  } else if (d.dim() == 2 && roots.empty()) {
    // x^2 + b x + c irreducible over Q_p iff the discriminant is not a square there
    Rational disc = chi.coeff(1) * chi.coeff(1) - 4 * chi.coeff(0);
    r.split = is_square_in_qp(disc, p);
  } else {
    throw std::domain_error("phi must split with distinct rational eigenvalues, or have dimension 2 "
                            "with no rational eigenvalue");
  }

  r.ok = r.endpoints_equal;
  if (roots.empty() && r.split) {
    // Eigenlines defined over Q_p only. A rational line of Fil that were
    // phi-stable would carry a rational eigenvalue, so each eigenline meets the
    // filtration only at the bottom weight.
    const auto& slopes = r.newton.slopes();
    for (std::size_t i = 0; i < 2; ++i) {
      StableSubspaceReport line{{i}, Polygon({Rational(d.bottom_weight())}), Polygon({slopes[i]}), false};
      line.below = line.hodge.lies_below(line.newton);
      r.ok = r.ok && line.below;
      r.subspaces.push_back(std::move(line));
    }
    return r;
  }
  if (!r.split) {
    // only 0 and D are stable
    StableSubspaceReport whole{{}, r.hodge, r.newton, r.hodge.lies_below(r.newton)};
    r.ok = r.ok && whole.below;
    r.subspaces.push_back(std::move(whole));
    return r;
  }

  const std::size_t n = d.dim();
  std::vector<QMatrix> eigvecs;
  for (const auto& a : roots) eigvecs.push_back(d.phi() - a * QMatrix::identity(n));
  for (auto& m : eigvecs) m = m.kernel();

  std::vector<long> levels = d.weights();
  levels.erase(std::unique(levels.begin(), levels.end()), levels.end());
  for (unsigned long mask = 1; mask < (1UL << n); ++mask) {
    StableSubspaceReport s;
    QMatrix span;
    std::vector<Rational> slopes;
    for (std::size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) {
        s.eigen_indices.push_back(i);
        span = span.cols() == 0 ? eigvecs[i] : hstack(span, eigvecs[i]);
        slopes.push_back(valuation(roots[i], p).value());
      }
    std::vector<Rational> induced;
    for (long w : levels) {
      std::size_t here = intersection_dim(span, d.fil(w));
      std::size_t above = intersection_dim(span, d.fil(w + 1));
      for (std::size_t k = above; k < here; ++k) induced.emplace_back(w);
    }
    s.hodge = Polygon(induced);
    s.newton = Polygon(slopes);
    s.below = s.hodge.lies_below(s.newton);
    r.ok = r.ok && s.below;
    r.subspaces.push_back(std::move(s));
  }
  return r;
}

RefinementReport refinement_check(const FilteredPhiModule& d, const Refinement& r) {
  if (!d.distinct_weights()) throw std::invalid_argument("refinements require distinct Hodge-Tate weights");
  const std::size_t n = d.dim();
  RefinementReport rep;
  rep.eigen_ok = r.alphas.size() == n && r.eigenbasis.rows() == n && r.eigenbasis.cols() == n;
  if (rep.eigen_ok)
    for (std::size_t i = 0; i < n; ++i) {
      auto e = r.eigenbasis.column(i);
      auto img = d.phi() * e;
      for (std::size_t k = 0; k < n; ++k)
        if (img[k] != r.alphas[i] * e[k]) rep.eigen_ok = false;
    }
  rep.unipotent_ok = r.P.rows() == n && r.P.cols() == n && r.P.is_upper_triangular();
  if (rep.unipotent_ok)
    for (std::size_t i = 0; i < n; ++i)
      if (r.P(i, i) != 1) rep.unipotent_ok = false;
  rep.basis_ok = rep.unipotent_ok && r.eigenbasis.rows() == n && r.eigenbasis * r.P == d.basis();

  rep.stable_ok = true;
  rep.position_ok = true;
  for (std::size_t i = 1; i <= n; ++i) {
    std::vector<std::size_t> idx(i);
    for (std::size_t k = 0; k < i; ++k) idx[k] = k;
    QMatrix flag = r.eigenbasis.columns(idx);
    if (hstack(flag, d.phi() * flag).rank() != i) rep.stable_ok = false;
    const long t = d.weights()[i - 1];
    if (intersection_dim(flag, d.fil(t)) == 0) rep.position_ok = false;
    if (intersection_dim(flag, d.fil(t + 1)) != 0) rep.position_ok = false;
  }
  return rep;
}

FilteredPhiModule refined_module(const Prime& p, const std::vector<Rational>& alphas, const QMatrix& P,
                                 std::vector<long> weights) {
  return FilteredPhiModule(p, QMatrix::diagonal(alphas), std::move(weights), P);
}

Refinement standard_refinement(const std::vector<Rational>& alphas, const QMatrix& P) {
  return Refinement{QMatrix::identity(alphas.size()), alphas, P};
}

QMatrix refinement_commutator(const Refinement& r) {
  QMatrix phi0 = QMatrix::diagonal(r.alphas);
  return r.P * phi0 * r.P.inverse() * phi0.inverse();
}

bool refinement_basis_adapted(const Refinement& r, const Prime& p) {
  QMatrix c = refinement_commutator(r);
  return c.min_valuation(p) >= Valuation(0) && valuation(c.determinant(), p) == Valuation(0);
}

FilteredPhiModule tate_twist(const FilteredPhiModule& d, long i) {
  std::vector<long> w = d.weights();
  for (auto& x : w) x += i;
  return FilteredPhiModule(d.prime(), pow(Rational(d.prime().value()), i) * d.phi(), std::move(w), d.basis());
}

}  // namespace plp

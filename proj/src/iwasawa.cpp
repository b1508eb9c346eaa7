#include "plp/iwasawa.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace plp {

std::string to_string(ZMode mode) { return mode == ZMode::standard ? "standard" : "negative_n"; }

namespace {

// Matrix of phi in the coordinates Z is written in.
QMatrix state_phi(const ZState& s) {
  return s.refinement ? QMatrix::diagonal(s.refinement->alphas) : s.module.phi_in_basis();
}

// State coordinates -> adapted basis coordinates.
QMatrix state_to_basis(const ZState& s) {
  return s.refinement ? s.refinement->P.inverse() : QMatrix::identity(s.module.dim());
}

// prod_{k} theta[k][i]
Poly theta_product(const ZState& s, std::size_t i) {
  Poly r(1);
  for (const auto& level : s.theta) r = r * level[i];
  return r;
}

Poly base_factor(const ZState& s) {
  if (s.mode == ZMode::standard) return Poly(1);
  return omega_J(s.tower, static_cast<unsigned>(s.N - 1), s.J);
}

std::vector<CycloVector> evaluate_columns(const PolyMatrix& z, long j, unsigned m, const Tower& t) {
  std::vector<CycloVector> cols(z.cols());
  for (std::size_t c = 0; c < z.cols(); ++c)
    for (std::size_t r = 0; r < z.rows(); ++r) cols[c].push_back(eval_at_special_point(z(r, c), j, m, t.u, t.p));
  return cols;
}

// Whether Z evaluated at u^j zeta_{p^m} - 1 equals `diag` (a constant) times the identity.
bool evaluates_to_scalar(const PolyMatrix& z, long j, unsigned m, const Tower& t, const Rational& diag) {
  for (std::size_t r = 0; r < z.rows(); ++r)
    for (std::size_t c = 0; c < z.cols(); ++c) {
      CyclotomicElement v = eval_at_special_point(z(r, c), j, m, t.u, t.p);
      if (!(v == CyclotomicElement(t.p, m, r == c ? diag : Rational(0)))) return false;
    }
  return true;
}

Rational p_rational(const Prime& p) { return Rational(p.value()); }

}  // namespace

Interval default_interval(const FilteredPhiModule& d) {
  return Interval::left_open(d.bottom_weight(), enlarged_top_weight(d));
}

Interval weight_interval(const FilteredPhiModule& d, long w) { return Interval::left_open(w, d.top_weight()); }

std::vector<Poly> theta_entries(const Tower& t, const FilteredPhiModule& d, unsigned n, const Interval& J) {
  std::map<long, Poly> cache;
  std::vector<Poly> out;
  for (long w : d.weights()) {
    auto it = cache.find(w);
    if (it == cache.end())
      it = cache.emplace(w, build_xitilde(t, n, IntervalPair(J, weight_interval(d, w))).poly).first;
    out.push_back(it->second);
  }
  return out;
}

PolyMatrix theta_operator(const Tower& t, const FilteredPhiModule& d, unsigned n, const Interval& J) {
  return PolyMatrix::diagonal(theta_entries(t, d, n, J));
}

ZState start_recursion(const Tower& t, const FilteredPhiModule& d, const Interval& J, long N, ZMode mode,
                       std::optional<Refinement> refinement) {
  if (t.p.value() != d.prime().value()) throw std::invalid_argument("tower and module use different primes");
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (mode == ZMode::negative_n && N < 1) throw std::invalid_argument("negative_n mode needs N >= 1");
  const Interval hodge = Interval::left_open(d.bottom_weight(), d.top_weight());
  if (!J.contains(hodge))
    throw std::invalid_argument("J = " + J.to_string() + " does not contain ]t_HT,1, t_HT,d] = " + hodge.to_string());
  if (refinement) {
    if (!refinement_check(d, *refinement).ok()) throw std::invalid_argument("refinement does not match the module");
    Rational spread = 0;
    const auto& a = refinement->alphas;
    for (std::size_t i = 0; i < a.size(); ++i)
      for (std::size_t j = i; j < a.size(); ++j) spread = std::max(spread, valuation(a[j] / a[i], t.p).value());
    if (Rational(J.size()) <= spread)
      throw std::invalid_argument("J too small (violates |J| > max_{j>=i} v(alpha_j/alpha_i) = " + to_string(spread) +
                                  ")");
  } else {
    auto slopes = newton_slopes(d);
    Rational spread = slopes.back() - slopes.front();
    if (Rational(J.size()) <= spread)
      throw std::invalid_argument("J too small (violates |J| > t_{N,d} - t_{N,1} = " + to_string(spread) + ")");
  }
  ZState s{t, d, J, N, N - 1, mode, std::move(refinement), PolyMatrix::identity(d.dim()), {}};
  if (mode == ZMode::negative_n) s.Z = base_factor(s) * s.Z;
  return s;
}

ZState advance(const ZState& s) {
  const long n = s.level + 1;
  const std::size_t dim = s.module.dim();
  std::vector<Poly> th = theta_entries(s.tower, s.module, static_cast<unsigned>(n), s.J);
  const QMatrix phi = state_phi(s);
  const QMatrix C = state_to_basis(s);
  const QMatrix A = phi.power(n + 1) * C.inverse();
  const QMatrix B = C * phi.power(-(n + 1));
  PolyMatrix T(dim, dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      Poly e;
      for (std::size_t k = 0; k < dim; ++k) {
        Rational c = A(i, k) * B(k, j);
        if (c != 0) e = e + th[k] * c;
      }
      T(i, j) = std::move(e);
    }
  ZState next = s;
  next.level = n;
  next.Z = T * s.Z;
  next.theta.push_back(std::move(th));
  if (n >= 1 && !(next.Z - s.Z).mod(omega_J(s.tower, static_cast<unsigned>(n - 1), s.J)).is_zero())
    throw std::logic_error("Z_" + std::to_string(n) + " - Z_" + std::to_string(n - 1) +
                           " is not divisible by omega_" + std::to_string(n - 1) + "^J");
  return next;
}

std::vector<ZState> run_recursion(const ZState& start, long n_max) {
  if (n_max < start.level + 1) throw std::invalid_argument("n_max is below the first level of the recursion");
  std::vector<ZState> out;
  ZState cur = start;
  while (cur.level < n_max) {
    cur = advance(cur);
    out.push_back(cur);
  }
  return out;
}

bool determinant_identity(const ZState& s) {
  Poly expected(1);
  for (std::size_t i = 0; i < s.module.dim(); ++i) expected = expected * theta_product(s, i) * base_factor(s);
  return s.Z.determinant() == expected;
}

MembershipReport membership_check(const ZState& s, long j, unsigned m) {
  const FilteredPhiModule& d = s.module;
  if (j <= d.bottom_weight() || j > d.top_weight()) throw std::invalid_argument("j outside ]t_HT,1, t_HT,d]");
  if (static_cast<long>(m) < s.N || static_cast<long>(m) > s.level)
    throw std::invalid_argument("level m outside [N, n]");
  const QMatrix M = state_to_basis(s) * state_phi(s).power(-(static_cast<long>(m) + 1));
  const PolyMatrix V = PolyMatrix(M) * s.Z;
  const auto keep = d.filtration_indices(j);
  for (const auto& col : evaluate_columns(V, j, m, s.tower))
    if (!membership_in_filtration(col, keep)) return {j, m, false};
  return {j, m, true};
}

bool membership_all(const ZState& s) {
  for (long j = s.module.bottom_weight() + 1; j <= s.module.top_weight(); ++j)
    for (long m = s.N; m <= s.level; ++m)
      if (!membership_check(s, j, static_cast<unsigned>(m)).ok) return false;
  return true;
}

bool surjectivity_identity(const ZState& s) {
  if (s.mode != ZMode::standard || s.N < 1) throw std::invalid_argument("needs standard mode with N >= 1");
  for (long j : s.J.elements())
    if (!evaluates_to_scalar(s.Z, j, static_cast<unsigned>(s.N - 1), s.tower, Rational(1))) return false;
  return true;
}

bool negative_start_vanishes(const ZState& s) {
  if (s.mode != ZMode::negative_n) throw std::invalid_argument("needs negative_n mode");
  for (long j : s.J.elements())
    for (long m = 0; m <= s.N - 1; ++m)
      if (!evaluates_to_scalar(s.Z, j, static_cast<unsigned>(m), s.tower, Rational(0))) return false;
  return true;
}

SlopeBrackets slope_brackets(const FilteredPhiModule& d, const Interval& J,
                             const std::optional<Refinement>& refinement) {
  const Prime& p = d.prime();
  const long bt = beta_tilde(J.size(), p);
  const auto slopes = newton_slopes(d);
  const QMatrix phiB = d.phi_in_basis();
  SlopeBrackets b;
  b.general_lower = slopes.front() - d.top_weight();
  b.general_upper = -phiB.inverse().min_valuation(p).value() - d.bottom_weight() + bt;
  if (adapted_to_phi(d)) {
    auto s = smith_valuations(phiB, p);
    Rational lo = s[0] - d.weights()[0], hi = lo;
    for (std::size_t i = 0; i < s.size(); ++i) {
      const Rational diff = s[i] - d.weights()[i];
      lo = std::min(lo, diff);
      hi = std::max(hi, diff);
    }
    b.smith_lower = lo;
    b.smith_upper = hi + bt;
  }
  if (refinement) {
    const auto& a = refinement->alphas;
    std::optional<Rational> best;
    for (std::size_t k = 0; k < a.size(); ++k)
      for (std::size_t i = 0; i <= k; ++i) {
        Rational v = valuation(a[k], p).value() - d.weights()[i];
        if (!best || v > *best) best = v;
      }
    b.refinement_upper = *best + bt;
  }
  return b;
}

bool trace_dominated(const std::vector<SlopeLevel>& levels, const Rational& t, long top_weight) {
  if (levels.size() < 3) throw std::invalid_argument("slope trace needs at least three levels");
  const Rational rate = t + top_weight;
  auto shifted = [&](const SlopeLevel& l) -> Rational { return l.log_norm.value() - rate * l.n; };
  const Rational cap = std::max(shifted(levels[0]), shifted(levels[1]));
  return std::all_of(levels.begin() + 2, levels.end(), [&](const SlopeLevel& l) { return shifted(l) <= cap; });
}

SlopeTrace slope_trace(const std::vector<ZState>& run, const Rational& candidate) {
  if (run.size() < 3) throw std::invalid_argument("slope trace needs at least three levels");
  const ZState& first = run.front();
  const Prime& p = first.tower.p;
  SlopeTrace tr;
  tr.candidate = candidate;
  const QMatrix phi = state_phi(first);
  for (const auto& s : run) {
    const PolyMatrix V = PolyMatrix(phi.power(-(s.level + 1))) * s.Z;
    const LogRadius rho = LogRadius::rho_n(p, static_cast<unsigned>(s.level));
    LogNorm best = LogNorm::neg_infinity();
    for (std::size_t i = 0; i < V.rows(); ++i)
      for (std::size_t j = 0; j < V.cols(); ++j) best = max(best, gauss_log_norm(V(i, j), p, rho));
    tr.levels.push_back({s.level, best});
  }
  const long td = first.module.top_weight();
  const auto& L0 = tr.levels.front();
  const auto& L1 = tr.levels.back();
  if (L0.log_norm.is_neg_infinite() || L1.log_norm.is_neg_infinite())
    throw std::logic_error("phi^{-(n+1)} Z_n vanished");
  tr.slope_estimate = (L1.log_norm.value() - L0.log_norm.value()) / Rational(L1.n - L0.n) - td;

  tr.candidate_dominates = trace_dominated(tr.levels, candidate, td);

  tr.brackets = slope_brackets(first.module, first.J, first.refinement);
  const auto& b = tr.brackets;
  tr.general_ok = trace_dominated(tr.levels, b.general_upper, td);
  tr.estimate_above_general_lower = tr.slope_estimate >= b.general_lower;
  if (b.smith_upper) {
    tr.smith_ok = trace_dominated(tr.levels, *b.smith_upper, td);
    tr.estimate_above_smith_lower = tr.slope_estimate >= *b.smith_lower;
  }
  if (b.refinement_upper) tr.refinement_ok = trace_dominated(tr.levels, *b.refinement_upper, td);
  return tr;
}

bool same_zeros_in_open_disc(const Poly& a, const Poly& b, const Prime& p) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  const Poly g = gcd(a, b);
  return mu_lambda(exact_div(a, g), p).lambda == 0 && mu_lambda(exact_div(b, g), p).lambda == 0;
}

bool DivisorReport::ok() const {
  if (!det_divisible) return false;
  if (!exact_claim) return true;
  return std::all_of(matches.begin(), matches.end(), [](bool b) { return b; });
}

DivisorReport divisor_check(const ZState& s) {
  const FilteredPhiModule& d = s.module;
  const Tower& t = s.tower;
  DivisorReport r;
  Poly target(1);
  for (long j = d.bottom_weight() + 1; j <= d.top_weight(); ++j) {
    Poly level_product(1);
    for (long m = s.N; m <= s.level; ++m) level_product = level_product * mlog(t, Interval(j, j), static_cast<unsigned>(m));
    target = target * pow(level_product, d.codim_fil(j));
  }
  r.det_divisible = divides(target, s.Z.determinant());
  r.invariants = elementary_divisors(s.Z);
  const Poly base = base_factor(s);
  for (std::size_t i = 0; i < d.dim(); ++i) r.expected.push_back(theta_product(s, i) * base);
  for (std::size_t i = 0; i < d.dim(); ++i)
    r.matches.push_back(same_zeros_in_open_disc(r.invariants.divisors[i], r.expected[i], t.p));
  r.exact_claim = beta_tilde(s.J.size(), t.p) == 0;
  return r;
}

bool column_divisibility(const ZState& s) {
  if (!s.refinement) throw std::invalid_argument("column divisibility needs a refinement");
  const FilteredPhiModule& d = s.module;
  for (std::size_t c = 0; c < d.dim(); ++c)
    for (long m = s.N; m <= s.level; ++m) {
      const Poly f = mlog(s.tower, weight_interval(d, d.weights()[c]), static_cast<unsigned>(m));
      for (std::size_t r = 0; r < d.dim(); ++r)
        if (!divides(f, s.Z(r, c))) return false;
    }
  return true;
}

FilteredPhiModule dim2_module(const Prime& p, long r, const Rational& a_p, const Rational& iota) {
  if (r <= 0) throw std::invalid_argument("r must be positive");
  if (a_p != 0 && valuation(a_p, p) < Valuation(0)) throw std::invalid_argument("a_p must be p-integral");
  if (iota == 0 || valuation(iota, p) != Valuation(0)) throw std::invalid_argument("iota must be a p-adic unit");
  const Rational pr = pow(p_rational(p), r);
  QMatrix phi{{a_p / pr, Rational(1)}, {-iota / pr, Rational(0)}};
  return FilteredPhiModule(p, phi, {-r, 0});
}

PollackReport pollack_check(const std::vector<ZState>& run) {
  PollackReport rep;
  if (run.empty()) return rep;
  const ZState& first = run.front();
  const QMatrix phi = first.module.phi_in_basis();
  if (first.module.dim() != 2 || first.refinement || first.mode != ZMode::standard || phi(0, 0) != 0)
    throw std::invalid_argument("pollack check needs the standard two-dimensional recursion with a_p = 0");
  const Rational c = -phi(1, 0);  // iota / p^r
  const PolyMatrix phi_inv(phi.inverse());
  for (const auto& s : run) {
    Poly odd(1), even(1);
    for (std::size_t k = 0; k < s.theta.size(); ++k) {
      Poly& side = (s.N + static_cast<long>(k)) % 2 ? odd : even;
      side = side * s.theta[k][0];
    }
    if (!(s.Z == PolyMatrix::diagonal({odd, even}))) rep.diagonal_ok = false;
  }
  const ZState& last = run.back();
  for (std::size_t k = 0; k + 1 < last.theta.size(); ++k) {
    const Poly& lo = last.theta[k][0];
    const Poly& hi = last.theta[k + 1][0];
    const PolyMatrix Bm = PolyMatrix::diagonal({lo, Poly(1)}) * phi_inv;
    const PolyMatrix Bm1 = PolyMatrix::diagonal({hi, Poly(1)}) * phi_inv;
    const PolyMatrix D = PolyMatrix::diagonal({hi, lo});
    if (!(Bm1 * Bm == Poly(-1 / c) * D) || !(Bm1 * Bm == PolyMatrix(phi.power(-2)) * D)) rep.pair_product_ok = false;
  }
  return rep;
}

PolyMatrix euler_operator(const Tower& t, const FilteredPhiModule& d, const Interval& J) {
  const std::size_t dim = d.dim();
  const QMatrix phi = d.phi_in_basis();
  const QMatrix phi_inv = phi.inverse();
  const QMatrix I = QMatrix::identity(dim);
  const Rational p = p_rational(t.p);
  std::vector<Rational> xs;
  std::vector<QMatrix> values;
  for (long j : J.elements()) {
    QMatrix den = I - pow(p, j - 1) * phi_inv;
    if (den.determinant() == 0)
      throw std::domain_error("1 - p^{j-1} phi^{-1} is singular at j = " + std::to_string(j));
    xs.push_back(pow(t.u, j) - 1);
    values.push_back((I - pow(p, -j) * phi) * den.inverse());
  }
  PolyMatrix E(dim, dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      std::vector<Rational> ys;
      for (const auto& v : values) ys.push_back(v(r, c));
      E(r, c) = interpolate(xs, ys);
    }
  return E;
}

QMatrix dim2_euler_value(const FilteredPhiModule& d, long j) {
  if (d.dim() != 2) throw std::invalid_argument("needs a two-dimensional module");
  const QMatrix phi = d.phi_in_basis();
  const QMatrix I = QMatrix::identity(2);
  const Rational p = p_rational(d.prime());
  QMatrix left = I - pow(p, -j) * phi;
  if (left.determinant() == 0) throw std::domain_error("1 - p^{-j} phi is singular at j = " + std::to_string(j));
  return left.inverse() * (I - pow(p, j - 1) * phi.inverse());
}

QMatrix dim2_euler_closed_form(const Prime& pr, long r, const Rational& a, const Rational& iota, long j) {
  const Rational p = p_rational(pr);
  return QMatrix{{iota - iota / p, pow(p, r + j - 1) + iota * pow(p, -j) - a / p},
                 {iota * a * pow(p, -(r + 1)) - iota * iota * pow(p, -(j + r)) - iota * pow(p, j - 1),
                  a * a * pow(p, -(r + 1)) - a * iota * pow(p, -(j + r)) - a * pow(p, j - 1) + iota - iota / p}};
}

Rational dim2_euler_prefactor(const Prime& pr, long r, const Rational& a, const Rational& iota, long j) {
  const Rational p = p_rational(pr);
  const Rational q = pow(p, j + r);
  return q / (iota * (q + iota * pow(p, -j) - a));
}

std::optional<Rational> dim2_euler_scale(const Prime& p, long r, const Rational& a_p, const Rational& iota, long j) {
  const QMatrix v = dim2_euler_value(dim2_module(p, r, a_p, iota), j);
  const QMatrix c = dim2_euler_closed_form(p, r, a_p, iota, j);
  std::optional<Rational> s;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t k = 0; k < 2; ++k)
      if (c(i, k) != 0 && !s) s = v(i, k) / c(i, k);
  if (!s) return std::nullopt;
  if (!(v == *s * c)) return std::nullopt;
  return s;
}

Rational dim2_euler_residual(const Prime& pr, long r, const Rational& a_p, const Rational& iota, long j,
                             const Rational& f, const Rational& g) {
  const QMatrix c = dim2_euler_closed_form(pr, r, a_p, iota, j);
  return c(0, 0) * f + c(0, 1) * g;
}

std::vector<Poly> f_recursion(const std::vector<Poly>& xis, long N, const Rational& nu) {
  std::vector<Poly> out;
  Poly F;
  for (std::size_t k = 0; k < xis.size(); ++k) {
    const long n = N + static_cast<long>(k);
    F = xis[k] * F + (xis[k] - Poly(1)) * pow(nu, n + 1);
    out.push_back(F);
  }
  return out;
}

Poly f_closed_form(const std::vector<Poly>& xis, long N, const Rational& nu) {
  Poly sum;
  for (std::size_t k = 0; k < xis.size(); ++k) {
    Poly term = (xis[k] - Poly(1)) * pow(nu, N + static_cast<long>(k) + 1);
    for (std::size_t i = k + 1; i < xis.size(); ++i) term = term * xis[i];
    sum = sum + term;
  }
  return sum;
}

Dim3Entries dim3_recursions(const std::vector<std::vector<Poly>>& theta, long N, const std::vector<Rational>& al) {
  if (al.size() != 3) throw std::invalid_argument("needs three eigenvalues");
  Dim3Entries e;
  Poly F12, F23, F13, G13, Bp(1);
  for (std::size_t k = 0; k < theta.size(); ++k) {
    const long n = N + static_cast<long>(k);
    const Poly& a = theta[k][0];
    const Poly& b = theta[k][1];
    const Rational n12 = pow(al[0] / al[1], n + 1);
    const Rational n23 = pow(al[1] / al[2], n + 1);
    const Rational n13 = pow(al[0] / al[2], n + 1);
    const Poly one(1);
    Poly G = a * G13 + (a - b) * F23 * n12 + (a - b) * n13;
    F12 = a * F12 + (a - b) * Bp * n12;
    F23 = b * F23 + (b - one) * n23;
    F13 = a * F13 + (a - one) * n13;
    G13 = std::move(G);
    Bp = Bp * b;
    e.F12.push_back(F12);
    e.F23.push_back(F23);
    e.F13.push_back(F13);
    e.G13.push_back(G13);
  }
  return e;
}

RefinementRunReport refinement_recursion(const Tower& t, const FilteredPhiModule& d, const Refinement& r,
                                         const Interval& J, long N, long n_max) {
  RefinementRunReport rep;
  rep.run = run_recursion(start_recursion(t, d, J, N, ZMode::standard, r), n_max);
  const std::size_t dim = d.dim();
  for (const auto& s : rep.run) {
    if (!s.Z.is_upper_triangular()) rep.upper_triangular = false;
    for (std::size_t i = 0; i < dim; ++i)
      if (!(s.Z(i, i) == theta_product(s, i))) rep.diagonal_ok = false;
  }
  const ZState& last = rep.run.back();
  if (dim == 2) {
    const Rational lambda = -r.P(0, 1);
    const Rational nu = r.alphas[0] / r.alphas[1];
    std::vector<Poly> xis;
    for (const auto& level : last.theta) xis.push_back(level[0]);
    const auto Fs = f_recursion(xis, N, nu);
    rep.f_closed_form_ok = Fs.back() == f_closed_form(xis, N, nu);
    for (std::size_t k = 0; k < rep.run.size(); ++k)
      if (!(rep.run[k].Z(0, 1) == Fs[k] * lambda)) rep.f_entry_ok = false;
    for (long j = d.bottom_weight() + 1; j <= d.top_weight(); ++j)
      for (long m = N; m <= n_max; ++m) {
        auto v = eval_at_special_point(Fs.back(), j, static_cast<unsigned>(m), t.u, t.p);
        if (!(v == CyclotomicElement(t.p, static_cast<unsigned>(m), -pow(nu, m + 1)))) rep.f_values_ok = false;
      }
  } else if (dim == 3) {
    const Rational l12 = -r.P(0, 1), l13 = -r.P(0, 2), l23 = -r.P(1, 2);
    const Dim3Entries e = dim3_recursions(last.theta, N, r.alphas);
    for (std::size_t k = 0; k < rep.run.size(); ++k) {
      const PolyMatrix& Z = rep.run[k].Z;
      if (!(Z(0, 1) == e.F12[k] * l12) || !(Z(1, 2) == e.F23[k] * l23) ||
          !(Z(0, 2) == e.F13[k] * l13 + e.G13[k] * (l12 * l23)))
        rep.f_entry_ok = false;
    }
  }
  return rep;
}

LambdaDegreeReport lambda_degree_check(const Tower& t, const FilteredPhiModule& d, const Refinement& r,
                                       const Interval& J, long N, long n) {
  const std::size_t dim = d.dim();
  const QMatrix I = QMatrix::identity(dim);
  std::vector<PolyMatrix> samples;
  for (std::size_t c = 0; c <= dim; ++c) {
    const QMatrix Pc = I + Rational(static_cast<long>(c)) * (r.P - I);
    const FilteredPhiModule dc = refined_module(d.prime(), r.alphas, Pc, d.weights());
    samples.push_back(run_recursion(start_recursion(t, dc, J, N, ZMode::standard, standard_refinement(r.alphas, Pc)), n)
                          .back()
                          .Z);
  }
  LambdaDegreeReport rep;
  rep.degree.assign(dim, std::vector<long>(dim, -1));
  rep.ok = true;
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      for (std::size_t k = 0; k <= dim; ++k) {
        Poly diff;
        for (std::size_t q = 0; q <= k; ++q) {
          Rational sign = (k - q) % 2 ? -1 : 1;
          diff = diff + samples[q](i, j) * (sign * Rational(binomial(k, q)));
        }
        if (!diff.is_zero()) rep.degree[i][j] = static_cast<long>(k);
      }
      const long allowed = i < j ? static_cast<long>(j - i) : (i == j ? 0 : -1);
      if (rep.degree[i][j] > allowed) rep.ok = false;
    }
  return rep;
}

}  // namespace plp

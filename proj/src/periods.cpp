#include "plp/periods.hpp"

#include <stdexcept>

namespace plp {

IntervalPair::IntervalPair(Interval J_, Interval Jp_) : J(J_), Jp(Jp_) {
  if (J.empty()) throw std::invalid_argument("J must be nonempty");
  if (!J.contains(Jp))
    throw std::invalid_argument("J' = " + Jp.to_string() + " is not a subinterval of J = " + J.to_string());
}

namespace {

unsigned long p_power(const Prime& p, unsigned e) { return pow(Integer(p.value()), e).get_ui(); }

// R((1+x)^Q - 1)
Poly compose_with_omega_power(const Poly& R, unsigned long Q) {
  if (Q == 1) return R;
  Poly s = R.shift(-1);
  const auto& c = s.coefficients();
  std::vector<Rational> spread(c.empty() ? 0 : (c.size() - 1) * Q + 1);
  for (std::size_t k = 0; k < c.size(); ++k) spread[k * Q] = c[k];
  return Poly(std::move(spread)).shift(1);
}

}  // namespace

Poly xitilde_by_crt(const Tower& t, unsigned n, const IntervalPair& pair) {
  if (n == 0) throw std::invalid_argument("the CRT construction needs n >= 1");
  const unsigned long Q = p_power(t.p, n - 1);
  const Rational v = pow(t.u, static_cast<long>(Q));
  const Poly om1 = omega(t.p, 1), om0 = omega(t.p, 0);
  const Poly xi1 = xi(t.p, 1) * Rational(1, t.p.value());
  std::vector<Poly> residues, moduli;
  for (long j : pair.J.elements()) {
    if (pair.Jp.contains(j)) {
      moduli.push_back(twist(om1, j, v));
      residues.push_back(twist(xi1, j, v));
    } else {
      moduli.push_back(twist(om0, j, v));
      residues.emplace_back(1);
    }
  }
  return compose_with_omega_power(crt(residues, moduli), Q);
}

Poly xitilde_by_closed_form(const Tower& t, unsigned n, const IntervalPair& pair) {
  if (n == 0) throw std::invalid_argument("the closed form needs n >= 1");
  Poly m = mlog(t, pair.Jp, n);
  Poly modulus = omega_J(t, n - 1, pair.J);
  return inverse_mod(m, modulus) * m;
}

XiTilde build_xitilde(const Tower& t, unsigned n, const IntervalPair& pair) {
  if (n == 0) return XiTilde{t, 0, pair, mlog(t, pair.Jp, 0)};
  Poly a = xitilde_by_crt(t, n, pair);
  Poly b = xitilde_by_closed_form(t, n, pair);
  if (!(a == b))
    throw std::logic_error("CRT and closed-form constructions disagree for n = " + std::to_string(n) +
                           ", J = " + pair.J.to_string() + ", J' = " + pair.Jp.to_string());
  return XiTilde{t, n, pair, std::move(a)};
}

bool satisfies_defining_congruences(const XiTilde& x) {
  const Tower& t = x.tower;
  if (x.n == 0) return x.poly == mlog(t, x.pair.Jp, 0);
  const long bound = ((t.p.value() - 1) * x.pair.Jp.size() + x.pair.J.size()) *
                     static_cast<long>(p_power(t.p, x.n - 1));
  if (x.poly.degree() >= bound) return false;
  const Poly scaled_xi = xi(t.p, x.n) * Rational(1, t.p.value());
  const Poly om_n = omega(t.p, x.n), om_prev = omega(t.p, x.n - 1);
  for (long j : x.pair.J.elements()) {
    if (x.pair.Jp.contains(j)) {
      if (!((x.poly - twist(scaled_xi, j, t.u)) % twist(om_n, j, t.u)).is_zero()) return false;
    } else {
      if (!((x.poly - Poly(1)) % twist(om_prev, j, t.u)).is_zero()) return false;
    }
  }
  return true;
}

long norm_threshold(const Tower& t, const Interval& J) {
  long vu = valuation(t.u - 1, t.p).value().get_num().get_si();
  return beta(J.size(), t.p) - (vu - 1);
}

NormBoundReport check_norm_bounds(const XiTilde& x) {
  const Tower& t = x.tower;
  const long sJ = x.pair.J.size(), sJp = x.pair.Jp.size();
  const long pm1 = t.p.value() - 1;
  NormBoundReport r;
  r.attained = gauss_log_norm(x.poly, t.p, LogRadius(0));
  r.lower = sJp;
  if (x.n == 0) {
    r.upper = sJp;
  } else {
    Rational vq = valuation(pow(t.u, static_cast<long>(p_power(t.p, x.n - 1))) - 1, t.p).value();
    Rational slack = Rational(1, pm1) + beta(sJ, t.p) - vq;
    if (slack < 0) slack = 0;
    r.upper = sJp + Rational(floor(Rational(sJ - 1, pm1) + slack));
  }
  if (x.pair.Jp == x.pair.J) r.existence_upper = Rational(sJ + beta(sJ, t.p));
  if (x.n >= 1 && static_cast<long>(x.n) > norm_threshold(t, x.pair.J))
    r.threshold_upper = Rational(sJp + beta_tilde(sJ, t.p));
  r.ok = !r.attained.is_neg_infinite() && r.attained.value() >= r.lower && r.attained.value() <= r.upper;
  if (r.existence_upper)
    r.ok = r.ok && r.attained.value() >= Rational(sJ) && r.attained.value() <= *r.existence_upper;
  if (r.threshold_upper) r.ok = r.ok && r.attained.value() <= *r.threshold_upper;
  return r;
}

MuLambdaReport mu_lambda(const Poly& f, const Prime& p) {
  MuLambdaReport r;
  r.degree = f.degree();
  r.mu = min_coefficient_valuation(f, p);
  if (r.mu.is_infinite()) return r;
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0 && valuation(c[i], p) == r.mu) {
      r.lambda = static_cast<long>(i);
      break;
    }
  return r;
}

UnitQuotient unit_quotient(const XiTilde& x) {
  const Tower& t = x.tower;
  DivMod d = divmod(x.poly, mlog(t, x.pair.Jp, x.n));
  if (!d.remainder.is_zero())
    throw std::logic_error("xi~ is not divisible by mlog(J', n) for J = " + x.pair.J.to_string() +
                           ", J' = " + x.pair.Jp.to_string() + ", n = " + std::to_string(x.n));
  UnitQuotient u;
  u.quotient = std::move(d.quotient);
  u.report = mu_lambda(u.quotient, t.p);
  const long sJ = x.pair.J.size();
  const long bt = beta_tilde(sJ, t.p);
  const long deg_bound = x.n == 0 ? 0 : static_cast<long>(p_power(t.p, x.n - 1)) * (sJ - 1);
  u.proven_bounds_ok = u.report.degree <= deg_bound && u.report.mu >= Valuation(-bt);
  if (bt == 0)
    u.is_unit = u.report.mu >= Valuation(0) && valuation(u.quotient.coeff(0), t.p) == Valuation(0);
  return u;
}

ExperimentalInvariants compare_experimental_invariants(const Prime& p, unsigned n, long size,
                                                       const MuLambdaReport& observed) {
  if (size < 2 || n < 1) throw std::invalid_argument("experimental invariants need |J| >= 2 and n >= 1");
  ExperimentalInvariants e;
  const long q = static_cast<long>(p_power(p, n - 1));
  e.expected_degree = q * (size - 1);
  e.expected_mu = -beta_tilde(size, p);
  e.expected_lambda = (p.value() - 1) * q * ((size - 2) / (p.value() - 1));
  e.degree_agrees = observed.degree == e.expected_degree;
  e.mu_agrees = !observed.mu.is_infinite() && observed.mu.value() == e.expected_mu;
  e.lambda_agrees = observed.lambda == e.expected_lambda;
  return e;
}

TruncatedProduct truncate_Xi(const Tower& t, long N, const IntervalPair& pair, unsigned n_max) {
  if (N < 0) throw std::invalid_argument("N must be >= 0");
  if (static_cast<long>(n_max) < N) throw std::invalid_argument("n_max must be >= N");
  if (static_cast<long>(n_max) < norm_threshold(t, pair.J))
    throw std::invalid_argument("n_max must be >= " + std::to_string(norm_threshold(t, pair.J)) +
                                " so the tail factors satisfy the sharp norm bound");
  TruncatedProduct tp{t, N, n_max, pair, {}, Poly(1)};
  for (long m = N; m <= static_cast<long>(n_max); ++m) {
    tp.factors.push_back(build_xitilde(t, static_cast<unsigned>(m), pair));
    tp.product = tp.product * tp.factors.back().poly;
  }
  return tp;
}

LogNorm TruncatedProduct::tail_log_norm_bound(const LogRadius& r) const {
  const long sJ = pair.J.size(), sJp = pair.Jp.size();
  const long n0 = n_zero(r, tower.p);
  const Rational base = beta_tilde(sJ, tower.p) + sJp;
  const Rational C = Rational(tower.p.value() - 2, tower.p.value() - 1) * sJ + base;
  auto e = [&](long n) {
    if (n < n0) return base;
    Rational decay = C - Rational((n - n0) * sJ);
    return decay < base ? decay : base;
  };
  // prod (1 + a_n) - 1 is bounded by the product of the factors exceeding 1,
  // or by the largest |a_n| when none does.
  Rational total = 0;
  bool any_positive = false;
  for (long n = static_cast<long>(n_max) + 1;; ++n) {
    Rational en = e(n);
    if (en > 0) {
      total += en;
      any_positive = true;
    } else if (n >= n0) {
      break;
    }
  }
  return any_positive ? LogNorm(total) : LogNorm(e(static_cast<long>(n_max) + 1));
}

SpecialValueReport check_special_values(const TruncatedProduct& tp) {
  SpecialValueReport r;
  const Tower& t = tp.tower;
  for (long m = tp.N; m <= static_cast<long>(tp.n_max); ++m)
    for (long j : tp.pair.Jp.elements())
      if (!eval_at_special_point(tp.product, j, static_cast<unsigned>(m), t.u, t.p).is_zero()) r.zeros_ok = false;
  for (long m = 0; m < tp.N; ++m)
    for (long j : tp.pair.J.elements()) {
      auto v = eval_at_special_point(tp.product, j, static_cast<unsigned>(m), t.u, t.p);
      if (!(v == CyclotomicElement(t.p, static_cast<unsigned>(m), Rational(1)))) r.ones_ok = false;
    }
  Poly logs(1);
  for (long m = tp.N; m <= static_cast<long>(tp.n_max); ++m) logs = logs * mlog(t, tp.pair.Jp, static_cast<unsigned>(m));
  r.divisible = divides(logs, tp.product);
  return r;
}

HigherLevelValuation valuation_at_higher_level(const XiTilde& x, long k, unsigned m) {
  if (m <= x.n) throw std::invalid_argument("the higher level m must exceed n");
  const Tower& t = x.tower;
  const long sJp = x.pair.Jp.size();
  const long bt = beta_tilde(x.pair.J.size(), t.p);
  HigherLevelValuation h{Valuation::infinity(), Rational(0), bt == 0, false};
  h.value = Valuation(sJp) + cyclo_valuation(eval_at_special_point(x.poly, k, m, t.u, t.p));
  h.bound = Rational(sJp) / Rational(Integer(p_power(t.p, m - x.n))) - bt;
  h.ok = h.value >= Valuation(h.bound) && (!h.equality_expected || h.value == Valuation(h.bound));
  return h;
}

TypeCheck type_check(const std::vector<Poly>& factors, long first_index, const Prime& p,
                     const Rational& lambda, const Rational& mu, const std::vector<LogRadius>& grid) {
  TypeCheck tc;
  tc.norm_ok = true;
  for (const auto& g : factors) {
    LogNorm n1 = gauss_log_norm(g, p, LogRadius(0));
    if (n1 > LogNorm(mu)) tc.norm_ok = false;
  }
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const long n = first_index + static_cast<long>(i);
    const Poly diff = factors[i] - Poly(1);
    if (diff.is_zero()) continue;
    for (const auto& r : grid) {
      const long n0 = n_zero(r, p);
      if (n < n0) continue;
      Rational needed = gauss_log_norm(diff, p, r).value() + lambda * (n - n0);
      if (!tc.nu || needed > *tc.nu) tc.nu = needed;
    }
  }
  tc.holds = tc.norm_ok;
  return tc;
}

ConvergenceCheck convergence_bound_check(const Tower& t, const Poly& H, unsigned n,
                                         const std::vector<unsigned>& alphas, const LogRadius& r) {
  if (n < 1) throw std::invalid_argument("convergence bound needs n >= 1");
  Poly divisor(1);
  long lambda = 0;
  const Poly om = omega(t.p, n - 1);
  for (std::size_t j = 0; j < alphas.size(); ++j) {
    divisor = divisor * pow(twist(om, static_cast<long>(j), t.u), alphas[j]);
    lambda += alphas[j];
  }
  if (!divides(divisor, H)) throw std::invalid_argument("H is not divisible by the stated omega product");
  ConvergenceCheck c{gauss_log_norm(H, t.p, r), LogNorm::neg_infinity(), false};
  LogNorm h1 = gauss_log_norm(H, t.p, LogRadius(0));
  const long n0 = n_zero(r, t.p);
  const long pm1 = t.p.value() - 1;
  Rational shift;
  if (static_cast<long>(n) >= n0)
    shift = Rational(lambda) * Rational(pm1 - 1, pm1) - Rational((static_cast<long>(n) - n0) * lambda);
  else
    // each omega_{n-1}^{(j)} has norm at most rho^{p^{n-1}} here
    shift = Rational(lambda) * Rational(Integer(p_power(t.p, n - 1))) * r.value();
  c.bound = h1 + LogNorm(shift);
  c.ok = c.attained <= c.bound;
  return c;
}

AmiceVeluReport amice_velu_bound_check(const Tower& t, const std::vector<Poly>& Q, unsigned n) {
  if (Q.empty()) throw std::invalid_argument("need at least one polynomial");
  const long limit = static_cast<long>(p_power(t.p, n));
  for (const auto& q : Q)
    if (q.degree() >= limit) throw std::invalid_argument("each Q_j must have degree < p^n");
  const long r = static_cast<long>(Q.size());
  const long pm1 = t.p.value() - 1;
  AmiceVeluReport rep;
  std::vector<Poly> moduli;
  for (long j = 0; j < r; ++j) moduli.push_back(omega_twisted(t, n, j));
  rep.P = crt(Q, moduli);
  rep.attained = gauss_log_norm(rep.P, t.p, LogRadius(0));
  const Rational w = valuation(pow(t.u, limit) - 1, t.p).value();
  LogNorm refined = LogNorm::neg_infinity(), coarse = LogNorm::neg_infinity();
  for (long i = 0; i < r; ++i) {
    Poly d;
    for (long j = 0; j <= i; ++j) {
      Rational c(binomial(static_cast<unsigned long>(i), static_cast<unsigned long>(j)));
      if ((i - j) % 2 != 0) c = -c;
      d += Q[static_cast<std::size_t>(j)] * c;
    }
    LogNorm dn = gauss_log_norm(d, t.p, LogRadius(0));
    rep.deltas.push_back(d);
    if (dn.is_neg_infinite()) continue;
    Rational iw = w * i;
    Rational fact = ord_p(factorial(static_cast<unsigned long>(i)), t.p);
    refined = max(refined, dn + LogNorm(iw - Rational(i, pm1) + fact));
    coarse = max(coarse, dn + LogNorm(iw));
  }
  const LogNorm lead(Rational(r - 1, pm1));
  rep.refined_bound = refined + lead;
  rep.coarse_bound = coarse + lead;
  rep.ok = rep.attained <= rep.refined_bound && rep.refined_bound <= rep.coarse_bound;
  return rep;
}

}  // namespace plp

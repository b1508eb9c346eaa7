#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "plp/cyclotomic.hpp"
#include "plp/interval.hpp"
#include "plp/tower.hpp"

namespace plp {

// J nonempty, Jp a (possibly empty) subinterval of J.
struct IntervalPair {
  Interval J;
  Interval Jp;
  IntervalPair(Interval J_, Interval Jp_);
};

struct XiTilde {
  Tower tower;
  unsigned n;
  IntervalPair pair;
  Poly poly;
};

// CRT solution at level 1 for the generator u^{p^{n-1}}, composed with omega_{n-1}.
Poly xitilde_by_crt(const Tower& t, unsigned n, const IntervalPair& pair);
// (mlog_{J'} mod omega_{n-1}^J)^{-1} * mlog_{J'}
Poly xitilde_by_closed_form(const Tower& t, unsigned n, const IntervalPair& pair);

// For n = 0 returns mlog(J', 0). For n >= 1 builds both routes and throws
// std::logic_error if they differ.
XiTilde build_xitilde(const Tower& t, unsigned n, const IntervalPair& pair);

// Degree bound and the defining congruences, by exact remainders.
bool satisfies_defining_congruences(const XiTilde& x);

struct NormBoundReport {
  LogNorm attained = LogNorm::neg_infinity();
  Rational lower;
  Rational upper;
  // [|J|, |J| + beta(|J|)] when J' = J
  std::optional<Rational> existence_upper;
  // |J'| + beta_tilde(|J|) once n is past the threshold
  std::optional<Rational> threshold_upper;
  bool ok = false;
};
NormBoundReport check_norm_bounds(const XiTilde& x);

// beta(|J|) - (v_p(u-1) - 1): the norm bound with beta_tilde holds for n above this.
long norm_threshold(const Tower& t, const Interval& J);

struct MuLambdaReport {
  long degree = -1;
  Valuation mu = Valuation::infinity();
  long lambda = -1;
};
MuLambdaReport mu_lambda(const Poly& f, const Prime& p);

struct UnitQuotient {
  Poly quotient;
  MuLambdaReport report;
  // deg <= p^{n-1}(|J|-1) and mu >= -beta_tilde(|J|)
  bool proven_bounds_ok = false;
  // Only meaningful when beta_tilde(|J|) = 0: integral with unit constant term.
  std::optional<bool> is_unit;
};
// Throws std::logic_error on a nonzero remainder.
UnitQuotient unit_quotient(const XiTilde& x);

struct ExperimentalInvariants {
  long expected_degree;
  Rational expected_mu;
  long expected_lambda;
  bool degree_agrees;
  bool mu_agrees;
  bool lambda_agrees;
  bool all_agree() const { return degree_agrees && mu_agrees && lambda_agrees; }
};
// Conjectural (deg, mu, lambda) of xi~_n^J / mlog_{J,n}; requires |J| >= 2 and n >= 1.
ExperimentalInvariants compare_experimental_invariants(const Prime& p, unsigned n, long size,
                                                       const MuLambdaReport& observed);

struct TruncatedProduct {
  Tower tower;
  long N;
  unsigned n_max;
  IntervalPair pair;
  std::vector<XiTilde> factors;  // levels N..n_max
  Poly product;
  // Bound on log_p || prod_{n > n_max} xi~_n - 1 ||_rho.
  LogNorm tail_log_norm_bound(const LogRadius& r) const;
};
TruncatedProduct truncate_Xi(const Tower& t, long N, const IntervalPair& pair, unsigned n_max);

struct SpecialValueReport {
  bool zeros_ok = true;     // value 0 at levels N..n_max, j in J'
  bool ones_ok = true;      // value 1 at levels < N, j in J
  bool divisible = false;   // by prod_m mlog(J', m)
  bool ok() const { return zeros_ok && ones_ok && divisible; }
};
SpecialValueReport check_special_values(const TruncatedProduct& t);

struct HigherLevelValuation {
  Valuation value;
  Rational bound;
  bool equality_expected;
  bool ok;
};
// v_p(p^{|J'|} xi~_n(u^k zeta_{p^m} - 1)) against |J'|/p^{m-n} - beta_tilde(|J|).
HigherLevelValuation valuation_at_higher_level(const XiTilde& x, long k, unsigned m);

struct TypeCheck {
  bool norm_ok = false;
  // least nu on the grid; nullopt when every G_n - 1 vanishes (nu = -inf)
  std::optional<Rational> nu;
  bool holds = false;
};
// factors[i] is G_{first_index + i}.
TypeCheck type_check(const std::vector<Poly>& factors, long first_index, const Prime& p,
                     const Rational& lambda, const Rational& mu, const std::vector<LogRadius>& grid);

struct ConvergenceCheck {
  LogNorm attained;
  LogNorm bound;
  bool ok;
};
// H must be divisible by prod_{j<r} (omega_{n-1}^{(j)})^{alpha_j}; n >= 1.
ConvergenceCheck convergence_bound_check(const Tower& t, const Poly& H, unsigned n,
                                         const std::vector<unsigned>& alphas, const LogRadius& r);

struct AmiceVeluReport {
  Poly P;
  std::vector<Poly> deltas;
  LogNorm attained = LogNorm::neg_infinity();
  LogNorm refined_bound = LogNorm::neg_infinity();
  LogNorm coarse_bound = LogNorm::neg_infinity();
  bool ok = false;
};
// Requires deg Q_j < p^n.
AmiceVeluReport amice_velu_bound_check(const Tower& t, const std::vector<Poly>& Q, unsigned n);

}  // namespace plp

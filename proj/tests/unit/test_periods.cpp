#include <gtest/gtest.h>

#include <random>

#include "plp/periods.hpp"
#include "test_util.hpp"

using namespace plp;
using plp::testing::q;

namespace {

// Values at the special points: 1 below level n on all of J, 0 at level n on J'.
bool special_point_oracle(const XiTilde& x) {
  const Tower& t = x.tower;
  for (long j : x.pair.J.elements())
    for (unsigned m = 0; m < x.n; ++m)
      if (!(eval_at_special_point(x.poly, j, m, t.u, t.p) == CyclotomicElement(t.p, m, Rational(1)))) return false;
  for (long j : x.pair.Jp.elements())
    if (!eval_at_special_point(x.poly, j, x.n, t.u, t.p).is_zero()) return false;
  return true;
}

Rational naive_log_norm(const Poly& f, const Prime& p) {
  Rational best;
  bool first = true;
  for (const Rational& c : f.coefficients()) {
    if (c == 0) continue;
    Rational v = -valuation(c, p).value();
    if (first || v > best) best = v;
    first = false;
  }
  return best;
}

}  // namespace

TEST(XiTilde, RoutesAgreeAndMatchSpecialValues) {
  for (long pv : {3L, 5L})
    for (const Rational& u : {Rational(pv + 1), Rational(1 + pv * pv), Rational(1 - pv)}) {
      Tower t(pv, u);
      for (unsigned n = 1; n <= 2; ++n)
        for (const Interval& J : {Interval(0, 0), Interval(0, 2), Interval(-1, 1)})
          for (const Interval& Jp : J.subintervals()) {
            IntervalPair pair(J, Jp);
            XiTilde x = build_xitilde(t, n, pair);
            EXPECT_EQ(x.poly, xitilde_by_crt(t, n, pair));
            EXPECT_TRUE(satisfies_defining_congruences(x));
            EXPECT_TRUE(special_point_oracle(x)) << "p=" << pv << " n=" << n << " J=" << J.to_string()
                                                 << " J'=" << Jp.to_string();
          }
    }
}

TEST(XiTilde, LevelZeroAndValidation) {
  Tower t(3);
  IntervalPair pair(Interval(0, 1), Interval(0, 0));
  EXPECT_EQ(build_xitilde(t, 0, pair).poly, mlog(t, Interval(0, 0), 0));
  EXPECT_THROW(IntervalPair(Interval(0, 1), Interval(1, 3)), std::invalid_argument);
  EXPECT_THROW(IntervalPair(Interval::empty_interval(), Interval::empty_interval()), std::invalid_argument);
}

TEST(XiTilde, NormBoundsAndDirectNorm) {
  for (long pv : {3L, 5L}) {
    Tower t(pv);
    for (unsigned n = 1; n <= 3; ++n)
      for (long s = 1; s <= 4; ++s) {
        Interval J(0, s - 1);
        for (const Interval& Jp : {Interval::empty_interval(), Interval(0, 0), J}) {
          XiTilde x = build_xitilde(t, n, IntervalPair(J, Jp));
          NormBoundReport r = check_norm_bounds(x);
          EXPECT_TRUE(r.ok) << "p=" << pv << " n=" << n << " |J|=" << s << " |J'|=" << Jp.size();
          EXPECT_EQ(r.attained.value(), naive_log_norm(x.poly, t.p));
          EXPECT_EQ(r.existence_upper.has_value(), Jp == J);
        }
      }
  }
}

TEST(XiTilde, UnitQuotientBounds) {
  for (long pv : {3L, 5L}) {
    Tower t(pv);
    for (unsigned n = 1; n <= 2; ++n)
      for (long s = 1; s <= 4; ++s) {
        Interval J(1, s);
        XiTilde x = build_xitilde(t, n, IntervalPair(J, J));
        UnitQuotient u = unit_quotient(x);
        EXPECT_EQ(u.quotient * mlog(t, J, n), x.poly);
        EXPECT_TRUE(u.proven_bounds_ok);
        EXPECT_EQ(u.is_unit.has_value(), beta_tilde(s, t.p) == 0);
        if (u.is_unit) EXPECT_TRUE(*u.is_unit);
      }
  }
}

TEST(MuLambda, SmallestIndexOfMinimalValuation) {
  Prime p(3);
  Poly f(std::vector<Rational>{Rational(9), q(1, 3), Rational(6), q(2, 3)});
  MuLambdaReport r = mu_lambda(f, p);
  EXPECT_EQ(r.degree, 3);
  EXPECT_EQ(r.mu, Valuation(-1));
  EXPECT_EQ(r.lambda, 1);
  EXPECT_TRUE(mu_lambda(Poly(), p).mu.is_infinite());
}

TEST(ExperimentalInvariants, ObservedValuesAtThree) {
  // The predicted degree and lambda hold on this grid; mu at |J| = 3 is observed
  // to be 0 where the prediction is -1.
  Tower t(3);
  for (unsigned n = 1; n <= 2; ++n) {
    for (long s : {2L, 3L, 4L}) {
      Interval J(0, s - 1);
      UnitQuotient u = unit_quotient(build_xitilde(t, n, IntervalPair(J, J)));
      ExperimentalInvariants e = compare_experimental_invariants(t.p, n, s, u.report);
      EXPECT_TRUE(e.degree_agrees);
      EXPECT_TRUE(e.lambda_agrees);
      if (s == 3) {
        EXPECT_EQ(u.report.mu, Valuation(0));
        EXPECT_FALSE(e.mu_agrees);
      }
      if (s == 2) EXPECT_TRUE(e.mu_agrees);
    }
  }
  EXPECT_THROW(compare_experimental_invariants(Prime(3), 1, 1, MuLambdaReport{}), std::invalid_argument);
}

TEST(TruncatedProduct, SpecialValuesAndTail) {
  Tower t(3);
  for (long N : {0L, 1L}) {
    IntervalPair pair(Interval(0, 1), Interval(0, 0));
    TruncatedProduct tp = truncate_Xi(t, N, pair, 3);
    EXPECT_EQ(tp.factors.size(), static_cast<std::size_t>(4 - N));
    EXPECT_TRUE(check_special_values(tp).ok());
    // the bound is finite and shrinks as the radius shrinks
    LogNorm near = tp.tail_log_norm_bound(LogRadius::rho_n(t.p, 1));
    LogNorm far = tp.tail_log_norm_bound(LogRadius::rho_n(t.p, 6));
    EXPECT_FALSE(near.is_neg_infinite());
    EXPECT_LE(near, far);
  }
  EXPECT_THROW(truncate_Xi(t, 3, IntervalPair(Interval(0, 1), Interval(0, 0)), 2), std::invalid_argument);
}

TEST(XiTilde, ValuationAtHigherLevels) {
  Tower t(5);
  XiTilde x = build_xitilde(t, 1, IntervalPair(Interval(0, 2), Interval(0, 1)));
  for (long k : {0L, 1L, 7L})
    for (unsigned m = 2; m <= 3; ++m) EXPECT_TRUE(valuation_at_higher_level(x, k, m).ok);
  EXPECT_THROW(valuation_at_higher_level(x, 0, 1), std::invalid_argument);
}

TEST(Bounds, AmiceVeluOnRandomData) {
  std::mt19937 rng(61);
  std::uniform_int_distribution<long> c(-5, 5);
  Tower t(3);
  for (int trial = 0; trial < 12; ++trial) {
    const unsigned n = 1 + trial % 2;
    std::vector<Poly> Q;
    for (int j = 0; j < 1 + trial % 3; ++j) {
      std::vector<Rational> coeffs;
      for (int i = 0; i < (n == 1 ? 3 : 9); ++i) coeffs.push_back(q(c(rng), trial % 2 ? 3 : 1));
      Q.emplace_back(coeffs);
    }
    AmiceVeluReport r = amice_velu_bound_check(t, Q, n);
    for (std::size_t j = 0; j < Q.size(); ++j)
      EXPECT_TRUE(((r.P - Q[j]) % omega_twisted(t, n, static_cast<long>(j))).is_zero());
    EXPECT_TRUE(r.ok);
  }
  EXPECT_THROW(amice_velu_bound_check(t, {Poly::monomial(Rational(1), 3)}, 1), std::invalid_argument);
}

TEST(Bounds, ConvergenceOnOmegaMultiples) {
  std::mt19937 rng(67);
  std::uniform_int_distribution<long> c(-4, 4);
  Tower t(3);
  for (int trial = 0; trial < 10; ++trial) {
    const unsigned n = 1 + trial % 3;
    std::vector<unsigned> alphas{1, static_cast<unsigned>(trial % 2)};
    Poly H(std::vector<Rational>{q(c(rng)), q(c(rng)), Rational(1)});
    for (std::size_t j = 0; j < alphas.size(); ++j)
      H = H * pow(omega_twisted(t, n - 1, static_cast<long>(j)), alphas[j]);
    for (unsigned level : {0u, 2u, 5u}) EXPECT_TRUE(convergence_bound_check(t, H, n, alphas, LogRadius::rho_n(t.p, level)).ok);
  }
  EXPECT_THROW(convergence_bound_check(t, Poly(1), 1, {1}, LogRadius(0)), std::invalid_argument);
}

TEST(Bounds, TypeCheckOfXiTildeFactors) {
  Tower t(3);
  IntervalPair pair(Interval(0, 1), Interval(0, 1));
  std::vector<Poly> factors;
  for (unsigned n = 1; n <= 3; ++n) factors.push_back(build_xitilde(t, n, pair).poly);
  std::vector<LogRadius> grid{LogRadius::rho_n(t.p, 0), LogRadius::rho_n(t.p, 2), LogRadius::rho_n(t.p, 4)};
  TypeCheck tc = type_check(factors, 1, t.p, Rational(2), Rational(2), grid);
  EXPECT_TRUE(tc.norm_ok);
  EXPECT_TRUE(tc.nu.has_value());
  EXPECT_FALSE(type_check(factors, 1, t.p, Rational(2), Rational(0), grid).holds);
}

TEST(Bounds, ConvergenceTightBelowThreshold) {
  // H = x, n = 1 < n_0(rho_2): ||x||_rho = rho, so the exponent below n_0 is p^{n-1}
  Tower t(3);
  LogRadius r = LogRadius::rho_n(t.p, 2);
  ConvergenceCheck c = convergence_bound_check(t, Poly::x(), 1, {1}, r);
  EXPECT_EQ(c.attained, LogNorm(r.value()));
  EXPECT_EQ(c.bound, c.attained);
}

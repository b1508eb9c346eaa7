#include <gtest/gtest.h>

#include <random>

#include "plp/cyclotomic.hpp"
#include "plp/tower.hpp"
#include "test_util.hpp"

using namespace plp;
using plp::testing::q;

TEST(Cyclotomic, PolynomialDegreeAndRootsOfUnity) {
  for (long pv : {3L, 5L}) {
    Prime p(pv);
    for (unsigned m = 0; m <= 3; ++m) {
      Poly phi = cyclotomic_polynomial(p, m);
      EXPECT_EQ(phi.degree(), euler_phi(p, m));
      CyclotomicElement z = CyclotomicElement::zeta(p, m), acc(p, m, Rational(1));
      long order = 1;
      for (unsigned k = 0; k < m; ++k) order *= pv;
      for (long k = 0; k < order; ++k) acc = acc * z;
      EXPECT_EQ(acc, CyclotomicElement(p, m, Rational(1)));
    }
  }
  EXPECT_EQ(euler_phi(Prime(3), 2), 6);
  EXPECT_EQ(euler_phi(Prime(5), 0), 1);
}

TEST(Cyclotomic, ValuationOfZetaMinusOne) {
  for (long pv : {3L, 5L, 7L}) {
    Prime p(pv);
    for (unsigned m = 1; m <= 3; ++m) {
      CyclotomicElement pi = CyclotomicElement::zeta(p, m) - CyclotomicElement(p, m, Rational(1));
      EXPECT_EQ(cyclo_valuation(pi), Valuation(q(1, euler_phi(p, m))));
      EXPECT_EQ(cyclo_valuation(CyclotomicElement(p, m, q(pv * pv, 2))), Valuation(2));
    }
  }
  EXPECT_TRUE(cyclo_valuation(CyclotomicElement(Prime(3), 2)).is_infinite());
}

TEST(Cyclotomic, LiftIsRingHomomorphism) {
  Prime p(3);
  CyclotomicElement a = CyclotomicElement::zeta(p, 1) + CyclotomicElement(p, 1, Rational(2));
  CyclotomicElement b = CyclotomicElement::zeta(p, 1) * CyclotomicElement::zeta(p, 1);
  EXPECT_EQ((a * b).lift(3), a.lift(3) * b.lift(3));
  // zeta_p at level 2 is zeta_{p^2}^p
  CyclotomicElement z2 = CyclotomicElement::zeta(p, 2);
  EXPECT_EQ(CyclotomicElement::zeta(p, 1).lift(2), z2 * z2 * z2);
}

TEST(Cyclotomic, SpecialPointEvaluationMatchesComposition) {
  std::mt19937 rng(53);
  std::uniform_int_distribution<long> c(-6, 6);
  Prime p(3);
  Rational u(4);
  for (int t = 0; t < 30; ++t) {
    std::vector<Rational> coeffs;
    for (int i = 0; i < 1 + t % 7; ++i) coeffs.push_back(q(c(rng)));
    Poly f(coeffs);
    long j = t % 5 - 2;
    unsigned m = t % 3;
    // direct route: substitute x = u^j y - 1 and reduce mod Phi
    Poly direct = f.compose(Poly(std::vector<Rational>{Rational(-1), pow(u, j)})) % cyclotomic_polynomial(p, m);
    EXPECT_EQ(eval_at_special_point(f, j, m, u, p).representative(), direct);
  }
}

TEST(Cyclotomic, TwistedOmegaAndXiAtSpecialPoints) {
  Tower t(3);
  for (long j : {-1L, 0L, 2L})
    for (unsigned n = 0; n <= 2; ++n) {
      for (unsigned m = 0; m <= n; ++m)
        EXPECT_TRUE(eval_at_special_point(omega_twisted(t, n, j), j, m, t.u, t.p).is_zero());
      // Phi_{p^n}(zeta_{p^m}) = p for m < n
      for (unsigned m = 0; m < n; ++m)
        EXPECT_EQ(eval_at_special_point(xi_twisted(t, n, j), j, m, t.u, t.p),
                  CyclotomicElement(t.p, m, Rational(3)));
    }
}

TEST(Cyclotomic, FiltrationMembership) {
  Prime p(5);
  CycloVector v{CyclotomicElement(p, 1, Rational(2)), CyclotomicElement(p, 1)};
  EXPECT_TRUE(membership_in_filtration(v, {0}));
  EXPECT_FALSE(membership_in_filtration(v, {1}));
  EXPECT_TRUE(membership_in_filtration(v, {0, 1}));
}

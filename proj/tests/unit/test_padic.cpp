#include <gtest/gtest.h>

#include <random>

#include "test_util.hpp"
#include "plp/padic.hpp"
#include "plp/poly.hpp"

using namespace plp;

namespace {

// v_p of an integer by repeated division
long naive_ord(long z, long p) {
  long v = 0;
  while (z % p == 0) {
    z /= p;
    ++v;
  }
  return v;
}

long naive_beta(long s, long p) {
  long v = 0;
  for (long k = 2; k <= s - 1; ++k) v += naive_ord(k, p);
  return v;
}

}  // namespace

TEST(Prime, RejectsNonOddPrimes) {
  EXPECT_THROW(Prime(2), std::invalid_argument);
  EXPECT_THROW(Prime(4), std::invalid_argument);
  EXPECT_THROW(Prime(1), std::invalid_argument);
  EXPECT_THROW(Prime(-3), std::invalid_argument);
  EXPECT_EQ(Prime(7).value(), 7);
}

TEST(Valuation, RationalsAndZero) {
  Prime p(3);
  EXPECT_EQ(valuation(Rational(18), p), Valuation(2));
  EXPECT_EQ(valuation(Rational(2, 27), p), Valuation(-3));
  EXPECT_TRUE(valuation(Rational(0), p).is_infinite());
  EXPECT_LT(Valuation(5), Valuation::infinity());
  EXPECT_EQ(min(Valuation(1), Valuation::infinity()), Valuation(1));
  EXPECT_TRUE((Valuation(1) + Valuation::infinity()).is_infinite());
}

TEST(Valuation, MatchesRepeatedDivision) {
  std::mt19937 rng(1234);
  std::uniform_int_distribution<long> d(1, 100000);
  for (long p : {3L, 5L, 7L})
    for (int i = 0; i < 200; ++i) {
      long a = d(rng), b = d(rng);
      EXPECT_EQ(valuation(plp::testing::q(a, b), Prime(p)), Valuation(naive_ord(a, p) - naive_ord(b, p)));
    }
}

TEST(Beta, AgreesWithFactorialValuation) {
  for (long p : {3L, 5L, 7L})
    for (long s = 1; s <= 40; ++s) {
      EXPECT_EQ(beta(s, Prime(p)), naive_beta(s, p)) << p << " " << s;
      EXPECT_EQ(beta_tilde(s, Prime(p)), (s - 1) / (p - 1));
      // beta~ bounds beta from above
      EXPECT_LE(beta(s, Prime(p)), beta_tilde(s, Prime(p)));
    }
}

TEST(LogNorm, GaussNormIsMaxOverCoefficients) {
  Prime p(3);
  // 9 + x/3 + 27 x^2
  Poly f(std::vector<Rational>{Rational(9), Rational(1, 3), Rational(27)});
  EXPECT_EQ(gauss_log_norm(f, p, LogRadius(Rational(0))), LogNorm(1));
  // at rho = p^{-1}: max(-2, 1 - 1, -3 - 2) = 0
  EXPECT_EQ(gauss_log_norm(f, p, LogRadius(Rational(-1))), LogNorm(0));
  EXPECT_TRUE(gauss_log_norm(Poly(), p, LogRadius(Rational(0))).is_neg_infinite());
}

TEST(LogNorm, MultiplicativeOnRandomPolys) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<long> d(-30, 30);
  Prime p(5);
  for (int t = 0; t < 100; ++t) {
    std::vector<Rational> a, b;
    for (int i = 0; i < 4; ++i) a.emplace_back(d(rng), 1 + std::abs(d(rng)));
    for (int i = 0; i < 3; ++i) b.emplace_back(d(rng), 1 + std::abs(d(rng)));
    Poly f(a), g(b);
    if (f.is_zero() || g.is_zero()) continue;
    for (Rational r : {Rational(0), Rational(-1, 4), Rational(-2, 3)}) {
      LogRadius lr(r);
      EXPECT_EQ(gauss_log_norm(f * g, p, lr), gauss_log_norm(f, p, lr) + gauss_log_norm(g, p, lr));
    }
  }
}

TEST(Radius, RhoNAndNZero) {
  Prime p(3);
  EXPECT_EQ(LogRadius::rho0(p).value(), Rational(-1, 2));
  EXPECT_EQ(LogRadius::rho_n(p, 2).value(), Rational(-1, 18));
  EXPECT_THROW(LogRadius(Rational(1)), std::invalid_argument);
  // smallest n with p^n |r| >= 1/(p-1), brute force
  for (Rational r : {Rational(-1, 2), Rational(-1, 18), Rational(-1, 100), Rational(-3)}) {
    long n = 0;
    while (Rational(pow(Integer(3), static_cast<unsigned long>(n))) * (-r) < Rational(1, 2)) ++n;
    EXPECT_EQ(n_zero(LogRadius(r), p), n);
  }
}

TEST(Squares, MatchesSearchModPowers) {
  // q is a square in Q_3 iff even valuation and unit part a square mod 3
  for (long p : {3L, 5L, 7L})
    for (long a = 1; a < 60; ++a) {
      long v = naive_ord(a, p), u = a;
      for (long k = 0; k < v; ++k) u /= p;
      bool unit_square = false;
      for (long x = 1; x < p; ++x) unit_square |= (x * x - u) % p == 0;
      EXPECT_EQ(is_square_in_qp(Rational(a), Prime(p)), v % 2 == 0 && unit_square) << a << " mod " << p;
    }
}

TEST(Rationals, ParseAndPrint) {
  EXPECT_EQ(parse_rational("-6/4"), Rational(-3, 2));
  EXPECT_EQ(to_string(Rational(5)), "5/1");
  EXPECT_THROW(parse_rational("1/0"), std::invalid_argument);
  EXPECT_THROW(parse_rational("x"), std::invalid_argument);
  EXPECT_EQ(to_decimal(Rational(1, 3), 3), "0.333");
}

#include <gtest/gtest.h>

#include <random>

#include "plp/poly.hpp"
#include "plp/qmatrix.hpp"
#include "plp/tower.hpp"
#include "test_util.hpp"

using namespace plp;
using plp::testing::q;

namespace {

Poly random_poly(std::mt19937& rng, int degree, long bound = 9) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  std::vector<Rational> c;
  for (int i = 0; i <= degree; ++i) c.push_back(q(num(rng), den(rng)));
  if (c.back() == 0) c.back() = 1;
  return Poly(std::move(c));
}

// Plain Euclid over Q, the textbook route.
Poly euclid_gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = divmod(a, b).remainder;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

// Resultant as the determinant of the Sylvester matrix.
Rational sylvester_resultant(const Poly& f, const Poly& g) {
  const long m = f.degree(), n = g.degree();
  QMatrix S(m + n, m + n);
  for (long i = 0; i < n; ++i)
    for (long k = 0; k <= m; ++k) S(i, i + k) = f.coeff(m - k);
  for (long i = 0; i < m; ++i)
    for (long k = 0; k <= n; ++k) S(n + i, i + k) = g.coeff(n - k);
  return S.determinant();
}

}  // namespace

TEST(Poly, ArithmeticBasics) {
  Poly x = Poly::x();
  Poly f = x * x - Poly(1);
  EXPECT_EQ(f.degree(), 2);
  EXPECT_EQ(f(Rational(3)), Rational(8));
  EXPECT_EQ(f.shift(Rational(1)), x * x + x * Rational(2));
  EXPECT_EQ(f.compose(x + Poly(1)), f.shift(Rational(1)));
  EXPECT_EQ(f.scale_variable(Rational(2)), x * x * Rational(4) - Poly(1));
  EXPECT_TRUE(Poly().is_zero());
  EXPECT_EQ(Poly().degree(), -1);
  EXPECT_EQ(f.truncate(1), Poly(-1));
}

TEST(Poly, DivisionIdentityOnRandomInputs) {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    Poly a = random_poly(rng, 2 + t % 7), b = random_poly(rng, 1 + t % 4);
    DivMod d = divmod(a, b);
    EXPECT_EQ(d.quotient * b + d.remainder, a);
    EXPECT_LT(d.remainder.degree(), b.degree());
  }
  EXPECT_THROW(divmod(Poly(1), Poly()), std::domain_error);
  EXPECT_THROW(exact_div(Poly::x(), Poly::x() + Poly(1)), std::logic_error);
}

TEST(Poly, ModularGcdAgreesWithEuclid) {
  std::mt19937 rng(11);
  for (int t = 0; t < 150; ++t) {
    Poly common = random_poly(rng, t % 4);
    Poly a = common * random_poly(rng, 1 + t % 5), b = common * random_poly(rng, 1 + (t / 3) % 5);
    Poly g = gcd(a, b);
    EXPECT_EQ(g, euclid_gcd(a, b));
    EXPECT_TRUE(divides(g, a));
    EXPECT_TRUE(divides(g, b));
    EXPECT_TRUE(common.degree() <= 0 || divides(common, g));
  }
  EXPECT_EQ(gcd(Poly(), Poly()), Poly());
  EXPECT_EQ(gcd(Poly(), Poly::x() * Rational(3)), Poly::x());
}

TEST(Poly, ModularGcdOnLargeCoefficients) {
  // products of twisted cyclotomic factors have coefficients with hundreds of digits
  Tower t(3);
  Poly a = mlog(t, Interval(0, 2), 3) * mlog(t, Interval(1, 1), 2);
  Poly b = mlog(t, Interval(1, 3), 3);
  Poly expected = mlog(t, Interval(1, 2), 3).monic();
  EXPECT_EQ(gcd(a, b), expected);
}

TEST(Poly, XgcdBezout) {
  std::mt19937 rng(3);
  for (int t = 0; t < 60; ++t) {
    Poly a = random_poly(rng, 1 + t % 6), b = random_poly(rng, 1 + t % 4);
    Xgcd e = xgcd(a, b);
    EXPECT_EQ(e.s * a + e.t * b, e.g);
    EXPECT_EQ(e.g, gcd(a, b));
  }
}

TEST(Poly, InverseModAndCrt) {
  std::mt19937 rng(5);
  Poly x = Poly::x();
  Poly m1 = x * x + Poly(1), m2 = x - Poly(2), m3 = x * x * x - Poly(5);
  for (int t = 0; t < 40; ++t) {
    Poly r1 = random_poly(rng, 1), r2 = random_poly(rng, 0), r3 = random_poly(rng, 2);
    Poly s = crt({r1, r2, r3}, {m1, m2, m3});
    EXPECT_LT(s.degree(), 6);
    EXPECT_EQ(s % m1, r1 % m1);
    EXPECT_EQ(s % m2, r2 % m2);
    EXPECT_EQ(s % m3, r3 % m3);
    Poly inv = inverse_mod(r3, m1);
    if (!(r3 % m1).is_zero()) EXPECT_EQ((inv * r3) % m1, Poly(1));
  }
  EXPECT_THROW(crt({Poly(1), Poly(2)}, {x, x * x}), std::invalid_argument);
  EXPECT_THROW(inverse_mod(x, x * x), std::invalid_argument);
}

TEST(Poly, ResultantMatchesSylvester) {
  std::mt19937 rng(17);
  for (int t = 0; t < 60; ++t) {
    Poly f = random_poly(rng, 1 + t % 4), g = random_poly(rng, 1 + t % 3);
    EXPECT_EQ(resultant(f, g), sylvester_resultant(f, g));
  }
}

TEST(Poly, InterpolationProperty) {
  std::mt19937 rng(23);
  std::uniform_int_distribution<long> d(-20, 20);
  for (int t = 0; t < 40; ++t) {
    std::vector<Rational> xs, ys;
    for (long k = 0; k < 1 + t % 6; ++k) {
      xs.push_back(q(3 * k - 7, 1 + k));
      ys.emplace_back(d(rng));
    }
    Poly f = interpolate(xs, ys);
    EXPECT_LT(f.degree(), static_cast<long>(xs.size()));
    for (std::size_t i = 0; i < xs.size(); ++i) EXPECT_EQ(f(xs[i]), ys[i]);
  }
}

TEST(Tower, OmegaXiAndTwists) {
  Prime p(3);
  Tower t(3);
  EXPECT_EQ(t.u, Rational(4));
  EXPECT_EQ(omega(p, 0), Poly::x());
  EXPECT_EQ(xi(p, 0), Poly::x() * Rational(3));
  for (unsigned n = 1; n <= 3; ++n) EXPECT_EQ(omega(p, n), omega(p, n - 1) * xi(p, n));
  // twisting by j then evaluating at u^j - 1 recovers the value at 0
  Poly f = omega(p, 2) + Poly::x() * Rational(5);
  for (long j : {-2L, 0L, 3L}) EXPECT_EQ(twist(f, j, t.u)(pow(t.u, j) - 1), f(Rational(0)));
  EXPECT_EQ(mlog(t, Interval(0, -1), 2), Poly(1));
  EXPECT_EQ(omega_J(t, 1, Interval(0, 1)), omega_twisted(t, 1, 0) * omega_twisted(t, 1, 1));
  EXPECT_THROW(Tower(3, Rational(2)), std::invalid_argument);
}

TEST(Interval, ParsingAndSubintervals) {
  EXPECT_EQ(parse_interval("]-2,1]"), Interval(-1, 1));
  EXPECT_EQ(parse_interval("[0,3]"), Interval(0, 3));
  EXPECT_EQ(parse_interval("2..4"), Interval(2, 4));
  EXPECT_EQ(parse_interval("5"), Interval(5, 5));
  EXPECT_TRUE(parse_interval("{}").empty());
  EXPECT_THROW(parse_interval("a..b"), std::invalid_argument);
  // s(s+1)/2 nonempty subintervals plus the empty one
  for (long s = 1; s <= 5; ++s) EXPECT_EQ(static_cast<long>(Interval(0, s - 1).subintervals().size()), s * (s + 1) / 2 + 1);
}

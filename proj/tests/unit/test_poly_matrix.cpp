#include <gtest/gtest.h>

#include <random>

#include "plp/poly_matrix.hpp"
#include "test_util.hpp"

using namespace plp;
using plp::testing::q;

namespace {

Poly random_poly(std::mt19937& rng, int degree) {
  std::uniform_int_distribution<long> c(-4, 4);
  std::vector<Rational> v;
  for (int i = 0; i <= degree; ++i) v.push_back(q(c(rng)));
  if (v.back() == 0) v.back() = 1;
  return Poly(std::move(v));
}

PolyMatrix random_matrix(std::mt19937& rng, std::size_t d, int degree) {
  PolyMatrix m(d, d);
  std::uniform_int_distribution<int> deg(0, degree);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) m(i, j) = random_poly(rng, deg(rng));
  return m;
}

// Laplace expansion along the first row.
Poly cofactor_det(const PolyMatrix& m) {
  const std::size_t d = m.rows();
  if (d == 1) return m(0, 0);
  Poly det;
  for (std::size_t c = 0; c < d; ++c) {
    PolyMatrix minor(d - 1, d - 1);
    for (std::size_t i = 1; i < d; ++i)
      for (std::size_t j = 0, jj = 0; j < d; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    Poly term = m(0, c) * cofactor_det(minor);
    det = c % 2 == 0 ? det + term : det - term;
  }
  return det;
}

}  // namespace

TEST(PolyMatrix, DeterminantMatchesCofactorExpansion) {
  std::mt19937 rng(31);
  for (int t = 0; t < 40; ++t) {
    PolyMatrix m = random_matrix(rng, 1 + t % 4, 3);
    EXPECT_EQ(m.determinant(), cofactor_det(m));
  }
}

TEST(PolyMatrix, ProductAndEvaluationCommute) {
  std::mt19937 rng(37);
  for (int t = 0; t < 20; ++t) {
    PolyMatrix a = random_matrix(rng, 3, 2), b = random_matrix(rng, 3, 2);
    Rational x = q(t - 7, 3);
    EXPECT_EQ((a * b).evaluate(x), a.evaluate(x) * b.evaluate(x));
    EXPECT_EQ((a * b).determinant(), a.determinant() * b.determinant());
  }
}

TEST(PolyMatrix, ModAndTriangularity) {
  Poly x = Poly::x();
  PolyMatrix m = PolyMatrix::diagonal({x * x, x + Poly(1)});
  m(0, 1) = x * x * x;
  EXPECT_TRUE(m.is_upper_triangular());
  EXPECT_EQ(m.max_degree(), 3);
  PolyMatrix r = m.mod(x * x);
  EXPECT_EQ(r(0, 0), Poly());
  EXPECT_EQ(r(0, 1), Poly());
  EXPECT_EQ(r(1, 1), x + Poly(1));
  EXPECT_TRUE((m - m).is_zero());
}

TEST(SmithForm, TransformsReconstructInput) {
  std::mt19937 rng(41);
  for (int t = 0; t < 25; ++t) {
    PolyMatrix m = random_matrix(rng, 2 + t % 2, 2);
    if (m.determinant().is_zero()) continue;
    SmithForm s = smith_form(m);
    EXPECT_EQ(s.left * PolyMatrix::diagonal(s.invariants.divisors) * s.right, m);
    EXPECT_TRUE(s.left.determinant().is_constant());
    EXPECT_TRUE(s.right.determinant().is_constant());
    Poly product(1);
    for (const Poly& d : s.invariants.divisors) product = product * d;
    EXPECT_EQ(product, m.determinant().monic());
  }
  EXPECT_THROW(smith_form(PolyMatrix(2, 2)), std::domain_error);
  EXPECT_THROW(smith_form(PolyMatrix(2, 3)), std::domain_error);
}

TEST(SmithForm, DeterminantalRouteAgreesWithElimination) {
  std::mt19937 rng(43);
  for (int t = 0; t < 25; ++t) {
    PolyMatrix m = random_matrix(rng, 2 + t % 2, 2);
    // force a shared factor so the invariants are not all trivial
    m = Poly::x() * Poly::x() * m;
    if (m.determinant().is_zero()) continue;
    DivisorSequence a = smith_form(m).invariants, b = elementary_divisors(m);
    EXPECT_EQ(a.divisors, b.divisors);
    for (std::size_t i = 0; i + 1 < b.divisors.size(); ++i)
      EXPECT_TRUE(divides(b.divisors[i + 1], b.divisors[i]));
  }
}

TEST(SmithForm, KnownDiagonal) {
  Poly x = Poly::x();
  // diag(x, x^2 (x+1)) already divides the right way up to ordering
  PolyMatrix m = PolyMatrix::diagonal({x * (x + Poly(1)), x * x});
  DivisorSequence d = elementary_divisors(m);
  ASSERT_EQ(d.divisors.size(), 2u);
  EXPECT_EQ(d.divisors[0], x * x * (x + Poly(1)));
  EXPECT_EQ(d.divisors[1], x);
}

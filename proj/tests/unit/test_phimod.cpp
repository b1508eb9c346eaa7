#include <gtest/gtest.h>

#include <random>

#include "plp/phimod.hpp"
#include "test_util.hpp"

using namespace plp;
using plp::testing::q;

namespace {

// Random integer matrix with determinant +-1, built from elementary operations.
QMatrix random_unimodular(std::mt19937& rng, std::size_t d) {
  std::uniform_int_distribution<long> c(-2, 2);
  std::uniform_int_distribution<std::size_t> idx(0, d - 1);
  QMatrix m = QMatrix::identity(d);
  for (int step = 0; step < 6; ++step) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    QMatrix e = QMatrix::identity(d);
    e(i, j) = c(rng);
    m = m * e;
  }
  return m;
}

FilteredPhiModule supersingular(long p, long r, long iota) {
  Rational pr = pow(Rational(p), r);
  return FilteredPhiModule(Prime(p), QMatrix{{Rational(0), Rational(1)}, {Rational(-iota) / pr, Rational(0)}}, {-r, 0});
}

}  // namespace

TEST(Polygon, PointsVerticesAndComparison) {
  Polygon a({Rational(1), Rational(0), Rational(1)});
  EXPECT_EQ(a.slopes(), (std::vector<Rational>{Rational(0), Rational(1), Rational(1)}));
  EXPECT_EQ(a.endpoint(), std::make_pair(3L, Rational(2)));
  EXPECT_EQ(a.vertices().size(), 3u);
  Polygon b({q(1, 2), q(1, 2), Rational(1)});
  EXPECT_TRUE(a.lies_below(b));
  EXPECT_FALSE(b.lies_below(a));
  EXPECT_TRUE(a.same_endpoints(b));
  EXPECT_THROW(a.lies_below(Polygon({Rational(0)})), std::invalid_argument);
  EXPECT_EQ(hodge_polygon({-1, 0, 0}).slopes(), (std::vector<Rational>{Rational(-1), Rational(0), Rational(0)}));
}

TEST(Polygon, NewtonOfConjugatedDiagonal) {
  std::mt19937 rng(71);
  std::uniform_int_distribution<long> e(-3, 3), unit(1, 4);
  for (long pv : {3L, 5L}) {
    Prime p(pv);
    for (int t = 0; t < 30; ++t) {
      const std::size_t d = 2 + t % 3;
      std::vector<Rational> diag;
      std::vector<Rational> expected;
      for (std::size_t i = 0; i < d; ++i) {
        long k = e(rng);
        diag.push_back(pow(Rational(pv), k) * Rational(unit(rng) * pv + 1));
        expected.emplace_back(k);
      }
      std::sort(expected.begin(), expected.end());
      QMatrix U = random_unimodular(rng, d);
      QMatrix phi = U * QMatrix::diagonal(diag) * U.inverse();
      EXPECT_EQ(newton_polygon(phi, p).slopes(), expected);
      EXPECT_EQ(smith_valuations(QMatrix::diagonal(diag) * U, p), expected);
    }
  }
  EXPECT_THROW(newton_polygon(QMatrix(2, 2), Prime(3)), std::domain_error);
  EXPECT_THROW(newton_polygon_of(Poly::x(), Prime(3)), std::domain_error);
}

TEST(Polygon, KatzMazurOnRandomMatrices) {
  std::mt19937 rng(73);
  std::uniform_int_distribution<long> c(-9, 9);
  for (long pv : {3L, 5L}) {
    Prime p(pv);
    for (int t = 0; t < 40; ++t) {
      const std::size_t d = 2 + t % 3;
      QMatrix a(d, d);
      for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) a(i, j) = q(c(rng) * (t % 2 ? pv : 1), 1 + (i + j) % 2 * (pv - 1));
      if (a.determinant() == 0) continue;
      KatzMazurReport r = katz_mazur(a, p);
      EXPECT_TRUE(r.ok());
      EXPECT_EQ(r.newton.endpoint().second, valuation(a.determinant(), p).value());
    }
  }
}

TEST(PhiModule, ConstructionAndFiltration) {
  Prime p(3);
  FilteredPhiModule m(p, QMatrix{{Rational(1), Rational(2)}, {Rational(0), q(1, 3)}}, {-1, 0},
                      QMatrix{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
  EXPECT_EQ(m.filtration_indices(0), (std::set<std::size_t>{1}));
  EXPECT_EQ(m.codim_fil(-1), 0u);
  EXPECT_EQ(m.codim_fil(0), 1u);
  EXPECT_EQ(m.codim_fil(1), 2u);
  EXPECT_EQ(m.fil(0).column(0), (std::vector<Rational>{Rational(1), Rational(1)}));
  EXPECT_EQ(m.basis() * m.phi_in_basis(), m.phi() * m.basis());
  EXPECT_THROW(FilteredPhiModule(p, QMatrix(2, 2), {0, 1}), std::invalid_argument);
  EXPECT_THROW(FilteredPhiModule(p, QMatrix::identity(2), {1, 0}), std::invalid_argument);
  EXPECT_THROW(FilteredPhiModule(p, QMatrix::identity(2), {0}), std::invalid_argument);
}

TEST(PhiModule, SupersingularDimensionTwo) {
  for (long pv : {3L, 5L})
    for (long r : {1L, 3L}) {
      FilteredPhiModule m = supersingular(pv, r, 2);
      EXPECT_EQ(newton_slopes(m), (std::vector<Rational>{q(-r, 2), q(-r, 2)}));
      EXPECT_TRUE(strongly_divisible_check(m));
      WeakAdmissibilityReport w = weakly_admissible_check(m);
      EXPECT_FALSE(w.split);
      EXPECT_TRUE(w.ok);
      // Newton spread is 0, so the top weight already suffices
      EXPECT_EQ(enlarged_top_weight(m), 0);
      FilteredPhiModule tw = tate_twist(m, 2);
      EXPECT_EQ(newton_slopes(tw), (std::vector<Rational>{q(4 - r, 2), q(4 - r, 2)}));
      EXPECT_EQ(tw.weights(), (std::vector<long>{2 - r, 2}));
      EXPECT_TRUE(weakly_admissible_check(tw).ok);
    }
}

TEST(PhiModule, EigenvaluesInQpOnly) {
  // x^2 + 1/25 splits over Q_5 since -1 is a square mod 5, but not over Q
  FilteredPhiModule m = supersingular(5, 2, 1);
  WeakAdmissibilityReport w = weakly_admissible_check(m);
  EXPECT_TRUE(w.split);
  EXPECT_EQ(w.subspaces.size(), 2u);
  EXPECT_TRUE(w.ok);
  // the same polynomial is irreducible over Q_3
  EXPECT_FALSE(weakly_admissible_check(supersingular(3, 2, 1)).split);
}

TEST(PhiModule, SplitWeakAdmissibility) {
  Prime p(3);
  // eigenvalues 1 and 1/3 with Fil^0 in general position: admissible
  FilteredPhiModule good(p, QMatrix::diagonal({Rational(1), q(1, 3)}), {-1, 0},
                         QMatrix{{Rational(1), Rational(1)}, {Rational(0), Rational(1)}});
  EXPECT_TRUE(weakly_admissible_check(good).ok);
  // Fil^0 is the slope -1 eigenline: that line violates the inequality
  FilteredPhiModule bad(p, QMatrix::diagonal({Rational(1), q(1, 3)}), {-1, 0},
                        QMatrix{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}});
  EXPECT_FALSE(weakly_admissible_check(bad).ok);
  EXPECT_THROW(weakly_admissible_check(FilteredPhiModule(p, QMatrix::identity(2), {0, 0})), std::domain_error);
  EXPECT_EQ(enlarged_top_weight(good), 1);
}

TEST(PhiModule, RationalRoots) {
  Poly x = Poly::x();
  Poly f = (x - Rational(2)) * (x * Rational(3) + Rational(1)) * (x - Rational(2)) * (x * x + Rational(1));
  EXPECT_EQ(rational_roots(f), (std::vector<Rational>{q(-1, 3), Rational(2), Rational(2)}));
  EXPECT_TRUE(rational_roots(x * x - Rational(2)).empty());
  EXPECT_THROW(rational_roots(Poly()), std::invalid_argument);
}

TEST(Refinement, CommutatorEntries) {
  std::mt19937 rng(79);
  std::uniform_int_distribution<long> c(-6, 6), a(1, 9);
  for (int t = 0; t < 25; ++t) {
    std::vector<Rational> al{q(a(rng), 3), q(a(rng), 1), q(a(rng), 9)};
    QMatrix P{{Rational(1), q(c(rng)), q(c(rng))}, {Rational(0), Rational(1), q(c(rng))}, {Rational(0), Rational(0), Rational(1)}};
    const Rational l12 = -P(0, 1), l23 = -P(1, 2), l13 = -P(0, 2);
    QMatrix C = refinement_commutator(standard_refinement(al, P));
    EXPECT_TRUE(C.is_upper_triangular());
    EXPECT_EQ(C(0, 0), 1);
    EXPECT_EQ(C(0, 1), (al[0] / al[1] - 1) * l12);
    EXPECT_EQ(C(1, 2), (al[1] / al[2] - 1) * l23);
    EXPECT_EQ(C(0, 2), (al[0] / al[2] - 1) * l13 + (al[0] / al[2] - al[1] / al[2]) * l12 * l23);
  }
}

TEST(Refinement, DimensionThreeExample) {
  Prime p(3);
  std::vector<Rational> al{q(1, 3), q(2, 3), q(4, 3)};
  QMatrix P{{Rational(1), Rational(-1), Rational(-2)}, {Rational(0), Rational(1), Rational(-3)}, {Rational(0), Rational(0), Rational(1)}};
  FilteredPhiModule m = refined_module(p, al, P, {-2, -1, 0});
  Refinement r = standard_refinement(al, P);
  EXPECT_TRUE(refinement_check(m, r).ok());
  EXPECT_TRUE(refinement_basis_adapted(r, p));
  // a flag in the wrong position
  Refinement swapped = r;
  swapped.P(0, 1) = 0;
  EXPECT_FALSE(refinement_check(m, swapped).basis_ok);
  EXPECT_THROW(refinement_check(FilteredPhiModule(p, QMatrix::identity(2), {0, 0}), standard_refinement({1, 1}, QMatrix::identity(2))),
               std::invalid_argument);
}

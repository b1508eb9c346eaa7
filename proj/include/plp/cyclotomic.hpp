#pragma once

#include <set>
#include <vector>

#include "plp/padic.hpp"
#include "plp/poly.hpp"

namespace plp {

// Element of Q(zeta_{p^m}) represented modulo the p^m-th cyclotomic polynomial.
class CyclotomicElement {
 public:
  CyclotomicElement(const Prime& p, unsigned level);
  CyclotomicElement(const Prime& p, unsigned level, const Rational& c);
  CyclotomicElement(const Prime& p, unsigned level, const Poly& representative);

  static CyclotomicElement zeta(const Prime& p, unsigned level);

  const Prime& prime() const { return p_; }
  unsigned level() const { return level_; }
  const Poly& representative() const { return rep_; }
  bool is_zero() const { return rep_.is_zero(); }

  // Same element viewed at a higher level via y -> y^{p^delta}.
  CyclotomicElement lift(unsigned level) const;

  friend CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b);
  friend CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b);
  friend bool operator==(const CyclotomicElement& a, const CyclotomicElement& b);

 private:
  Prime p_;
  unsigned level_;
  Poly rep_;
};

using CycloVector = std::vector<CyclotomicElement>;

// Phi_{p^m}(y); Phi_1 = y - 1.
Poly cyclotomic_polynomial(const Prime& p, unsigned m);
// phi(p^m)
long euler_phi(const Prime& p, unsigned m);

// f(u^j zeta_{p^m} - 1)
CyclotomicElement eval_at_special_point(const Poly& f, long j, unsigned m, const Rational& u,
                                        const Prime& p);

// The extension of ord_p to Q(zeta_{p^m}): v(Res(Phi, rep)) / phi(p^m).
Valuation cyclo_valuation(const CyclotomicElement& a);

// True iff every coordinate whose index is not selected is zero.
bool membership_in_filtration(const CycloVector& v, const std::set<std::size_t>& selected);

}  // namespace plp

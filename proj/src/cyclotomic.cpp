#include "plp/cyclotomic.hpp"

#include <stdexcept>

namespace plp {

namespace {

long block(const Prime& p, unsigned m) { return m == 0 ? 1 : pow(Integer(p.value()), m - 1).get_si(); }

// Reduce a coefficient vector modulo Phi_{p^m} in place, using
// y^{phi} = -(1 + y^b + ... + y^{(p-2)b}) with b = p^{m-1}.
void reduce_in_place(std::vector<Rational>& c, const Prime& p, unsigned m) {
  const std::size_t deg = static_cast<std::size_t>(euler_phi(p, m));
  if (m == 0) {
    Rational s = 0;
    for (auto& q : c) s += q;
    c.assign(1, s);
    return;
  }
  const std::size_t b = static_cast<std::size_t>(block(p, m));
  for (std::size_t k = c.size(); k-- > deg;) {
    if (c[k] == 0) continue;
    Rational t = c[k];
    c[k] = 0;
    std::size_t base = k - deg;
    for (long i = 0; i + 1 < p.value(); ++i) c[base + static_cast<std::size_t>(i) * b] -= t;
  }
  if (c.size() > deg) c.resize(deg);
}

Poly reduce(const Poly& f, const Prime& p, unsigned m) {
  std::vector<Rational> c = f.coefficients();
  reduce_in_place(c, p, m);
  return Poly(std::move(c));
}

void check_same_field(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.prime().value() != b.prime().value())
    throw std::invalid_argument("cyclotomic elements over different primes");
}

}  // namespace

long euler_phi(const Prime& p, unsigned m) { return m == 0 ? 1 : (p.value() - 1) * block(p, m); }

Poly cyclotomic_polynomial(const Prime& p, unsigned m) {
  if (m == 0) return Poly(std::vector<Rational>{Rational(-1), Rational(1)});
  const long b = block(p, m);
  std::vector<Rational> c(static_cast<std::size_t>(b * (p.value() - 1) + 1));
  for (long k = 0; k < p.value(); ++k) c[static_cast<std::size_t>(k * b)] = 1;
  return Poly(std::move(c));
}

CyclotomicElement::CyclotomicElement(const Prime& p, unsigned level) : p_(p), level_(level) {}

CyclotomicElement::CyclotomicElement(const Prime& p, unsigned level, const Rational& c)
    : p_(p), level_(level), rep_(c) {}

CyclotomicElement::CyclotomicElement(const Prime& p, unsigned level, const Poly& representative)
    : p_(p), level_(level), rep_(reduce(representative, p, level)) {}

CyclotomicElement CyclotomicElement::zeta(const Prime& p, unsigned level) {
  return CyclotomicElement(p, level, Poly::x());
}

CyclotomicElement CyclotomicElement::lift(unsigned level) const {
  if (level < level_) throw std::invalid_argument("cannot lift to a lower level");
  if (level == level_) return *this;
  // zeta_{p^m} = zeta_{p^M}^{p^{M-m}}; at level 0, zeta = 1
  std::size_t stride = static_cast<std::size_t>(pow(Integer(p_.value()), level - level_).get_ui());
  if (level_ == 0) return CyclotomicElement(p_, level, rep_.coeff(0));
  std::vector<Rational> c(rep_.coefficients().size() * stride + 1);
  for (std::size_t i = 0; i < rep_.coefficients().size(); ++i) c[i * stride] = rep_.coefficients()[i];
  return CyclotomicElement(p_, level, Poly(std::move(c)));
}

CyclotomicElement operator+(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_same_field(a, b);
  unsigned lv = std::max(a.level_, b.level_);
  CyclotomicElement x = a.lift(lv), y = b.lift(lv);
  x.rep_ += y.rep_;
  return x;
}

CyclotomicElement operator-(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_same_field(a, b);
  unsigned lv = std::max(a.level_, b.level_);
  CyclotomicElement x = a.lift(lv), y = b.lift(lv);
  x.rep_ -= y.rep_;
  return x;
}

CyclotomicElement operator*(const CyclotomicElement& a, const CyclotomicElement& b) {
  check_same_field(a, b);
  unsigned lv = std::max(a.level_, b.level_);
  CyclotomicElement x = a.lift(lv), y = b.lift(lv);
  return CyclotomicElement(a.p_, lv, x.rep_ * y.rep_);
}

bool operator==(const CyclotomicElement& a, const CyclotomicElement& b) {
  if (a.p_.value() != b.p_.value()) return false;
  unsigned lv = std::max(a.level_, b.level_);
  return a.lift(lv).rep_ == b.lift(lv).rep_;
}

CyclotomicElement eval_at_special_point(const Poly& f, long j, unsigned m, const Rational& u,
                                        const Prime& p) {
  const Rational c = pow(u, j);
  const std::size_t deg = static_cast<std::size_t>(euler_phi(p, m));
  // Horner in Q[y]/Phi with x = c*y - 1
  std::vector<Rational> acc(deg + 1);
  const auto& coeffs = f.coefficients();
  Rational tmp;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    // acc <- acc * (c y - 1)
    for (std::size_t k = deg; k-- > 0;) {
      if (acc[k] == 0) continue;
      tmp = c * acc[k];
      acc[k + 1] += tmp;
      acc[k] = -acc[k];
    }
    acc[0] += *it;
    reduce_in_place(acc, p, m);
    acc.resize(deg + 1);
  }
  acc.resize(deg);
  return CyclotomicElement(p, m, Poly(std::move(acc)));
}

Valuation cyclo_valuation(const CyclotomicElement& a) {
  if (a.is_zero()) return Valuation::infinity();
  const Prime& p = a.prime();
  if (a.level() == 0) return valuation(a.representative().coeff(0), p);
  Rational norm = resultant(cyclotomic_polynomial(p, a.level()), a.representative());
  return Valuation(valuation(norm, p).value() / euler_phi(p, a.level()));
}

bool membership_in_filtration(const CycloVector& v, const std::set<std::size_t>& selected) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!selected.count(i) && !v[i].is_zero()) return false;
  return true;
}

}  // namespace plp

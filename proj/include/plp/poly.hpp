#pragma once

#include <string>
#include <vector>

#include "plp/rational.hpp"

namespace plp {

// Dense polynomial over Q, coefficients low degree first, no trailing zeros.
class Poly {
 public:
  Poly() = default;
  Poly(long c);
  Poly(const Rational& c);
  explicit Poly(std::vector<Rational> coefficients);

  static Poly x();
  static Poly monomial(const Rational& c, std::size_t k);

  // -1 for the zero polynomial
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_constant() const { return c_.size() <= 1; }
  const std::vector<Rational>& coefficients() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& g);
  Poly& operator-=(const Poly& g);
  Poly& operator*=(const Poly& g);
  Poly& operator*=(const Rational& c);
  friend Poly operator+(Poly f, const Poly& g) { return f += g; }
  friend Poly operator-(Poly f, const Poly& g) { return f -= g; }
  friend Poly operator*(const Poly& f, const Poly& g);
  friend Poly operator*(Poly f, const Rational& c) { return f *= c; }
  friend Poly operator*(const Rational& c, Poly f) { return f *= c; }
  friend bool operator==(const Poly& f, const Poly& g) { return f.c_ == g.c_; }

  Rational operator()(const Rational& x) const;
  // f(g(x))
  Poly compose(const Poly& g) const;
  // f(c*x)
  Poly scale_variable(const Rational& c) const;
  // f(x + c)
  Poly shift(const Rational& c) const;
  Poly monic() const;
  Poly truncate(std::size_t terms) const;

  std::string to_string(const std::string& var = "x") const;

 private:
  void normalize();
  std::vector<Rational> c_;
};

struct DivMod {
  Poly quotient;
  Poly remainder;
};

DivMod divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
// Throws std::logic_error if b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

Poly pow(const Poly& f, unsigned long e);

// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
  Poly g;  // monic
  Poly s;
  Poly t;  // s*a + t*b = g
};
Xgcd xgcd(const Poly& a, const Poly& b);

// Inverse of a modulo m; throws std::invalid_argument if they are not coprime.
Poly inverse_mod(const Poly& a, const Poly& m);

// Unique polynomial of degree < sum(deg m_i) congruent to r_i mod m_i.
// Throws std::invalid_argument naming the gcd if two moduli share a factor.
Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli);

// lc(f)^{deg g} * prod g(roots of f)
Rational resultant(const Poly& f, const Poly& g);

// Lagrange interpolation through (x_i, y_i) with distinct x_i.
Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace plp

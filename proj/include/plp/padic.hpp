#pragma once

#include <compare>
#include <optional>
#include <string>

#include "plp/rational.hpp"

namespace plp {

class Poly;

// An odd prime p >= 3.
class Prime {
 public:
  explicit Prime(long p);
  long value() const { return p_; }
  operator long() const { return p_; }

 private:
  long p_;
};

// A p-adic valuation: an exact rational, or +infinity for zero.
class Valuation {
 public:
  static Valuation infinity() { return Valuation(); }
  explicit Valuation(Rational v) : v_(std::move(v)) {}
  Valuation(long v) : v_(Rational(v)) {}

  bool is_infinite() const { return !v_.has_value(); }
  const Rational& value() const;

  friend Valuation operator+(const Valuation& a, const Valuation& b);
  friend bool operator==(const Valuation& a, const Valuation& b);
  friend std::strong_ordering operator<=>(const Valuation& a, const Valuation& b);

  std::string to_string() const;

 private:
  Valuation() = default;
  std::optional<Rational> v_;
};

// Radius rho = p^value with value <= 0.
class LogRadius {
 public:
  explicit LogRadius(Rational value);
  const Rational& value() const { return value_; }
  // rho_0 = p^{-1/(p-1)}
  static LogRadius rho0(const Prime& p);
  // rho_0^{1/p^n}
  static LogRadius rho_n(const Prime& p, unsigned n);

 private:
  Rational value_;
};

// log_p of a Gauss norm: an exact rational, or -infinity for the zero polynomial.
class LogNorm {
 public:
  static LogNorm neg_infinity() { return LogNorm(); }
  explicit LogNorm(Rational v) : v_(std::move(v)) {}
  LogNorm(long v) : v_(Rational(v)) {}

  bool is_neg_infinite() const { return !v_.has_value(); }
  const Rational& value() const;

  friend LogNorm operator+(const LogNorm& a, const LogNorm& b);
  friend bool operator==(const LogNorm& a, const LogNorm& b);
  friend std::strong_ordering operator<=>(const LogNorm& a, const LogNorm& b);

  std::string to_string() const;

 private:
  LogNorm() = default;
  std::optional<Rational> v_;
};

LogNorm max(const LogNorm& a, const LogNorm& b);
Valuation min(const Valuation& a, const Valuation& b);

long ord_p(const Integer& z, const Prime& p);  // z != 0
Valuation valuation(const Rational& q, const Prime& p);

// max_i(-v(a_i) + i*r)
LogNorm gauss_log_norm(const Poly& f, const Prime& p, const LogRadius& r);
// min_i v(a_i), the mu-invariant of a polynomial viewed as a power series
Valuation min_coefficient_valuation(const Poly& f, const Prime& p);

// ord_p((s-1)!)
long beta(long s, const Prime& p);
// floor((s-1)/(p-1))
long beta_tilde(long s, const Prime& p);
// Smallest n >= 0 with p^n |r| >= 1/(p-1). Requires r < 0.
long n_zero(const LogRadius& r, const Prime& p);

// Whether q is a square in Q_p (p odd).
bool is_square_in_qp(const Rational& q, const Prime& p);

}  // namespace plp

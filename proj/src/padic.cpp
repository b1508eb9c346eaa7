#include "plp/padic.hpp"

#include <stdexcept>

#include "plp/poly.hpp"

namespace plp {

Prime::Prime(long p) : p_(p) {
  if (p < 3 || p % 2 == 0)
    throw std::invalid_argument("p must be an odd prime >= 3, got " + std::to_string(p));
  if (mpz_probab_prime_p(Integer(p).get_mpz_t(), 30) == 0)
    throw std::invalid_argument(std::to_string(p) + " is not prime");
}

const Rational& Valuation::value() const {
  if (!v_) throw std::domain_error("valuation is +infinity");
  return *v_;
}

Valuation operator+(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return Valuation::infinity();
  return Valuation(*a.v_ + *b.v_);
}

bool operator==(const Valuation& a, const Valuation& b) {
  if (a.is_infinite() || b.is_infinite()) return a.is_infinite() == b.is_infinite();
  return *a.v_ == *b.v_;
}

std::strong_ordering operator<=>(const Valuation& a, const Valuation& b) {
  if (a.is_infinite())
    return b.is_infinite() ? std::strong_ordering::equal : std::strong_ordering::greater;
  if (b.is_infinite()) return std::strong_ordering::less;
  int c = cmp(*a.v_, *b.v_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string Valuation::to_string() const { return v_ ? plp::to_string(*v_) : "+inf"; }

LogRadius::LogRadius(Rational value) : value_(std::move(value)) {
  if (value_ > 0) throw std::invalid_argument("log-radius must be <= 0");
}

LogRadius LogRadius::rho0(const Prime& p) { return LogRadius(Rational(-1, p.value() - 1)); }

LogRadius LogRadius::rho_n(const Prime& p, unsigned n) {
  Rational v(-1, p.value() - 1);
  v /= pow(Integer(p.value()), n);
  return LogRadius(v);
}

const Rational& LogNorm::value() const {
  if (!v_) throw std::domain_error("log-norm is -infinity");
  return *v_;
}

LogNorm operator+(const LogNorm& a, const LogNorm& b) {
  if (a.is_neg_infinite() || b.is_neg_infinite()) return LogNorm::neg_infinity();
  return LogNorm(*a.v_ + *b.v_);
}

bool operator==(const LogNorm& a, const LogNorm& b) {
  if (a.is_neg_infinite() || b.is_neg_infinite())
    return a.is_neg_infinite() == b.is_neg_infinite();
  return *a.v_ == *b.v_;
}

std::strong_ordering operator<=>(const LogNorm& a, const LogNorm& b) {
  if (a.is_neg_infinite())
    return b.is_neg_infinite() ? std::strong_ordering::equal : std::strong_ordering::less;
  if (b.is_neg_infinite()) return std::strong_ordering::greater;
  int c = cmp(*a.v_, *b.v_);
  return c < 0 ? std::strong_ordering::less
               : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
}

std::string LogNorm::to_string() const { return v_ ? plp::to_string(*v_) : "-inf"; }

LogNorm max(const LogNorm& a, const LogNorm& b) { return a < b ? b : a; }
Valuation min(const Valuation& a, const Valuation& b) { return b < a ? b : a; }

long ord_p(const Integer& z, const Prime& p) {
  if (z == 0) throw std::domain_error("ord_p of zero");
  Integer rest;
  Integer prime(p.value());
  return static_cast<long>(mpz_remove(rest.get_mpz_t(), z.get_mpz_t(), prime.get_mpz_t()));
}

Valuation valuation(const Rational& q, const Prime& p) {
  if (q == 0) return Valuation::infinity();
  return Valuation(ord_p(q.get_num(), p) - ord_p(q.get_den(), p));
}

LogNorm gauss_log_norm(const Poly& f, const Prime& p, const LogRadius& r) {
  LogNorm best = LogNorm::neg_infinity();
  const auto& c = f.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    Rational term = -valuation(c[i], p).value() + Rational(static_cast<long>(i)) * r.value();
    best = max(best, LogNorm(term));
  }
  return best;
}

Valuation min_coefficient_valuation(const Poly& f, const Prime& p) {
  Valuation best = Valuation::infinity();
  for (const auto& a : f.coefficients()) best = min(best, valuation(a, p));
  return best;
}

long beta(long s, const Prime& p) {
  if (s < 1) throw std::invalid_argument("beta requires s >= 1");
  long total = 0;
  for (long q = p.value(); q <= s - 1; q *= p.value()) total += (s - 1) / q;
  return total;
}

long beta_tilde(long s, const Prime& p) {
  if (s < 1) throw std::invalid_argument("beta_tilde requires s >= 1");
  return (s - 1) / (p.value() - 1);
}

long n_zero(const LogRadius& r, const Prime& p) {
  if (r.value() == 0) throw std::invalid_argument("n_zero needs a radius < 1");
  Rational target(1, p.value() - 1);
  Rational scaled = -r.value();
  long n = 0;
  while (scaled < target) {
    scaled *= p.value();
    ++n;
  }
  return n;
}

bool is_square_in_qp(const Rational& q, const Prime& p) {
  if (q == 0) return true;
  Valuation v = valuation(q, p);
  if (v.value().get_num() % 2 != 0) return false;
  // unit part modulo p
  Rational unit = q / pow(Rational(p.value()), v.value().get_num().get_si());
  Integer prime(p.value());
  Integer num = unit.get_num() % prime;
  Integer den = unit.get_den() % prime;
  if (num < 0) num += prime;
  Integer inv;
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), prime.get_mpz_t());
  Integer residue = (num * inv) % prime;
  return mpz_legendre(residue.get_mpz_t(), prime.get_mpz_t()) == 1;
}

}  // namespace plp

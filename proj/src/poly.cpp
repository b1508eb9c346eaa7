#include "plp/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>

namespace plp {

namespace {

// f = num / den with integer numerators
struct ScaledInts {
  std::vector<Integer> num;
  Integer den;
};

ScaledInts to_scaled_ints(const std::vector<Rational>& c) {
  ScaledInts s;
  s.den = 1;
  for (const auto& q : c) mpz_lcm(s.den.get_mpz_t(), s.den.get_mpz_t(), q.get_den_mpz_t());
  s.num.resize(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    Integer factor = s.den / c[i].get_den();
    s.num[i] = c[i].get_num() * factor;
  }
  return s;
}


// Integer coefficients of a nonzero f scaled to be primitive.
std::vector<Integer> primitive_integer(const Poly& f) {
  ScaledInts s = to_scaled_ints(f.coefficients());
  Integer content = 0;
  for (const auto& z : s.num) mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), z.get_mpz_t());
  for (auto& z : s.num) mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), content.get_mpz_t());
  return s.num;
}

std::vector<std::uint64_t> reduce(const std::vector<Integer>& f, std::uint64_t q) {
  std::vector<std::uint64_t> r(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) r[i] = mpz_fdiv_ui(f[i].get_mpz_t(), q);
  while (!r.empty() && r.back() == 0) r.pop_back();
  return r;
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t q) {
  std::uint64_t r = 1;
  b %= q;
  while (e) {
    if (e & 1) r = r * b % q;
    b = b * b % q;
    e >>= 1;
  }
  return r;
}

// q < 2^32 prime, so products fit in 64 bits.
std::uint64_t inverse_mod_word(std::uint64_t a, std::uint64_t q) { return pow_mod(a, q - 2, q); }

// Monic gcd over F_q.
std::vector<std::uint64_t> gcd_mod(std::vector<std::uint64_t> x, std::vector<std::uint64_t> y, std::uint64_t q) {
  while (!y.empty()) {
    const std::uint64_t inv = inverse_mod_word(y.back(), q);
    const std::size_t dy = y.size() - 1;
    while (x.size() >= y.size()) {
      const std::uint64_t c = x.back() * inv % q;
      const std::size_t shift = x.size() - y.size();
      for (std::size_t i = 0; i < dy; ++i) x[shift + i] = (x[shift + i] + (q - c) * y[i]) % q;
      x.pop_back();
      while (!x.empty() && x.back() == 0) x.pop_back();
    }
    std::swap(x, y);
  }
  const std::uint64_t inv = inverse_mod_word(x.back(), q);
  for (auto& c : x) c = c * inv % q;
  return x;
}

void previous_prime(Integer& q) {
  do {
    q -= 1;
  } while (mpz_probab_prime_p(q.get_mpz_t(), 25) == 0);
}

}  // namespace

Poly::Poly(long c) {
  if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const Rational& c) {
  if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coefficients) : c_(std::move(coefficients)) {
  for (auto& q : c_) q.canonicalize();
  normalize();
}

Poly Poly::x() { return Poly(std::vector<Rational>{Rational(0), Rational(1)}); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return Poly(std::move(v));
}

void Poly::normalize() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

const Rational& Poly::leading() const {
  if (c_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return c_.back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

Poly& Poly::operator+=(const Poly& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] += g.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& g) {
  if (g.c_.size() > c_.size()) c_.resize(g.c_.size());
  for (std::size_t i = 0; i < g.c_.size(); ++i) c_[i] -= g.c_[i];
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Rational& c) {
  if (c == 0) {
    c_.clear();
    return *this;
  }
  for (auto& q : c_) q *= c;
  return *this;
}

Poly& Poly::operator*=(const Poly& g) {
  *this = *this * g;
  return *this;
}

Poly operator*(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) return Poly();
  if (f.c_.size() == 1) return g * f.c_[0];
  if (g.c_.size() == 1) return f * g.c_[0];
  ScaledInts a = to_scaled_ints(f.c_);
  ScaledInts b = to_scaled_ints(g.c_);
  std::vector<Integer> prod(a.num.size() + b.num.size() - 1);
  for (std::size_t i = 0; i < a.num.size(); ++i) {
    if (a.num[i] == 0) continue;
    for (std::size_t j = 0; j < b.num.size(); ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), a.num[i].get_mpz_t(), b.num[j].get_mpz_t());
  }
  Integer den = a.den * b.den;
  std::vector<Rational> out(prod.size());
  for (std::size_t k = 0; k < prod.size(); ++k) {
    out[k] = Rational(prod[k], den);
    out[k].canonicalize();
  }
  Poly r;
  r.c_ = std::move(out);
  r.normalize();
  return r;
}

Rational Poly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Poly Poly::compose(const Poly& g) const {
  Poly acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    acc = acc * g;
    acc += Poly(*it);
  }
  return acc;
}

Poly Poly::scale_variable(const Rational& c) const {
  Poly r = *this;
  Rational power = 1;
  for (auto& q : r.c_) {
    q *= power;
    power *= c;
  }
  r.normalize();
  return r;
}

Poly Poly::shift(const Rational& c) const {
  // Taylor shift by repeated synthetic division
  std::vector<Rational> a = c_;
  const std::size_t n = a.size();
  if (c == 0 || n <= 1) return *this;
  for (std::size_t i = 0; i + 1 < n; ++i)
    for (std::size_t k = n - 1; k > i; --k) a[k - 1] += c * a[k];
  return Poly(std::move(a));
}

Poly Poly::monic() const {
  if (is_zero()) return *this;
  return *this * (1 / leading());
}

Poly Poly::truncate(std::size_t terms) const {
  if (terms >= c_.size()) return *this;
  return Poly(std::vector<Rational>(c_.begin(), c_.begin() + static_cast<long>(terms)));
}

std::string Poly::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + c_[i].get_str() + ")";
    if (i >= 1) out += "*" + var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

DivMod divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  const auto& bc = b.coefficients();
  std::vector<Rational> r = a.coefficients();
  const std::size_t db = bc.size() - 1;
  std::vector<Rational> q(r.size() - db);
  Rational inv = 1 / b.leading();
  bool monic = (b.leading() == 1);
  Rational tmp;
  for (std::size_t k = q.size(); k-- > 0;) {
    if (r[k + db] == 0) continue;
    Rational coef = monic ? r[k + db] : r[k + db] * inv;
    q[k] = coef;
    for (std::size_t i = 0; i < db; ++i) {
      if (bc[i] == 0) continue;
      tmp = coef * bc[i];
      r[k + i] -= tmp;
    }
    r[k + db] = 0;
  }
  r.resize(db);
  return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).remainder; }

Poly exact_div(const Poly& a, const Poly& b) {
  DivMod d = divmod(a, b);
  if (!d.remainder.is_zero()) throw std::logic_error("inexact polynomial division");
  return d.quotient;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly pow(const Poly& f, unsigned long e) {
  Poly result(1);
  Poly base = f;
  while (e > 0) {
    if (e & 1UL) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Poly gcd(const Poly& a, const Poly& b) {
  if (a.is_zero()) return b.is_zero() ? Poly() : b.monic();
  if (b.is_zero()) return a.monic();
  if (a.degree() == 0 || b.degree() == 0) return Poly(1);
  const std::vector<Integer> A = primitive_integer(a);
  const std::vector<Integer> B = primitive_integer(b);
  Integer lc;
  mpz_gcd(lc.get_mpz_t(), A.back().get_mpz_t(), B.back().get_mpz_t());

  // Brown's dense modular algorithm: images of lc * gcd modulo word-size primes,
  // combined by CRT until the symmetric lift stabilises and divides both inputs.
  std::vector<Integer> H;
  Integer M = 1;
  long deg = std::min(a.degree(), b.degree()) + 1;
  Poly previous;
  Integer q = 2147483647;
  for (;; previous_prime(q)) {
    const unsigned long qq = q.get_ui();
    if (mpz_divisible_ui_p(A.back().get_mpz_t(), qq) || mpz_divisible_ui_p(B.back().get_mpz_t(), qq)) continue;
    std::vector<std::uint64_t> g = gcd_mod(reduce(A, qq), reduce(B, qq), qq);
    const long dg = static_cast<long>(g.size()) - 1;
    if (dg == 0) return Poly(1);
    if (dg > deg) continue;
    if (dg < deg) {
      deg = dg;
      H.assign(g.size(), Integer(0));
      M = 1;
      previous = Poly();
    }
    const std::uint64_t c = mpz_fdiv_ui(lc.get_mpz_t(), qq);
    const std::uint64_t Minv = inverse_mod_word(mpz_fdiv_ui(M.get_mpz_t(), qq), qq);
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t r = g[i] * c % qq;
      const std::uint64_t h = mpz_fdiv_ui(H[i].get_mpz_t(), qq);
      const std::uint64_t t = (r + qq - h) % qq * Minv % qq;
      H[i] += M * Integer(static_cast<unsigned long>(t));
    }
    M *= Integer(qq);
    const Integer half = M / 2;
    std::vector<Rational> lifted(H.size());
    for (std::size_t i = 0; i < H.size(); ++i) lifted[i] = Rational(H[i] > half ? Integer(H[i] - M) : H[i]);
    Poly candidate = Poly(std::move(lifted)).monic();
    if (candidate == previous && divides(candidate, a) && divides(candidate, b)) return candidate;
    previous = std::move(candidate);
  }
}

Xgcd xgcd(const Poly& a, const Poly& b) {
  Poly r0 = a, r1 = b;
  Poly s0(1), s1;
  Poly t0, t1(1);
  while (!r1.is_zero()) {
    DivMod d = divmod(r0, r1);
    Poly s2 = s0 - d.quotient * s1;
    Poly t2 = t0 - d.quotient * t1;
    r0 = std::move(r1);
    r1 = std::move(d.remainder);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
    if (!r1.is_zero()) {
      // keep remainders monic to limit coefficient growth
      Rational inv = 1 / r1.leading();
      r1 *= inv;
      s1 *= inv;
      t1 *= inv;
    }
  }
  if (r0.is_zero()) return {Poly(), Poly(), Poly()};
  Rational inv = 1 / r0.leading();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Poly inverse_mod(const Poly& a, const Poly& m) {
  if (m.degree() < 1) throw std::invalid_argument("modulus must have positive degree");
  Xgcd e = xgcd(a % m, m);
  if (e.g.degree() != 0)
    throw std::invalid_argument("not invertible: gcd is " + e.g.to_string());
  return e.s % m;
}

Poly crt(const std::vector<Poly>& residues, const std::vector<Poly>& moduli) {
  if (residues.size() != moduli.size())
    throw std::invalid_argument("crt: residue and modulus counts differ");
  if (moduli.empty()) return Poly();
  for (const auto& m : moduli)
    if (m.degree() < 1) throw std::invalid_argument("crt: moduli must have positive degree");
  Poly r = residues[0] % moduli[0];
  Poly big = moduli[0];
  for (std::size_t i = 1; i < moduli.size(); ++i) {
    const Poly& m = moduli[i];
    Xgcd e = xgcd(big % m, m);
    if (e.g.degree() != 0)
      throw std::invalid_argument("crt: moduli not coprime, common factor " + e.g.to_string());
    Poly correction = ((residues[i] - r) * e.s) % m;
    r += big * correction;
    big = big * m;
  }
  return r % big;
}

Rational resultant(const Poly& f, const Poly& g) {
  if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant of the zero polynomial");
  Rational result = 1;
  Poly a = f, b = g;
  for (;;) {
    long da = a.degree(), db = b.degree();
    if (db == 0) return result * pow(b.leading(), da);
    if (da == 0) return result * pow(a.leading(), db);
    Poly r = a % b;
    if (r.is_zero()) return 0;
    if ((da * db) % 2 != 0) result = -result;
    result *= pow(b.leading(), da - r.degree());
    a = std::move(b);
    b = std::move(r);
  }
}

Poly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  if (xs.size() != ys.size()) throw std::invalid_argument("interpolate: size mismatch");
  Poly out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Poly basis(1);
    Rational denom = 1;
    for (std::size_t k = 0; k < xs.size(); ++k) {
      if (k == i) continue;
      if (xs[k] == xs[i]) throw std::invalid_argument("interpolate: repeated node");
      basis = basis * Poly(std::vector<Rational>{-xs[k], Rational(1)});
      denom *= xs[i] - xs[k];
    }
    out += basis * (ys[i] / denom);
  }
  return out;
}

}  // namespace plp

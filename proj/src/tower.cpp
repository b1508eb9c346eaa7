#include "plp/tower.hpp"

#include <stdexcept>

namespace plp {

Tower::Tower(long prime) : Tower(prime, Rational(prime + 1)) {}

Tower::Tower(long prime, Rational u_) : p(prime), u(std::move(u_)) {
  if (u == 1) throw std::invalid_argument("u must differ from 1");
  if (valuation(u - 1, p) < Valuation(1))
    throw std::invalid_argument("u must satisfy u = 1 mod p, got u = " + to_string(u));
}

Poly omega(const Prime& p, unsigned n) {
  unsigned long e = pow(Integer(p.value()), n).get_ui();
  std::vector<Rational> c(e + 1);
  for (unsigned long k = 1; k <= e; ++k) c[k] = Rational(binomial(e, k));
  return Poly(std::move(c));
}

Poly xi(const Prime& p, unsigned n) {
  if (n == 0) return Poly::monomial(Rational(p.value()), 1);
  return exact_div(omega(p, n), omega(p, n - 1));
}

Poly twist(const Poly& f, long j, const Rational& u) {
  if (j == 0) return f;
  // f(c(1+x) - 1) = g(c(1+x)) with g(y) = f(y - 1)
  Rational c = pow(u, -j);
  return f.shift(-1).scale_variable(c).shift(1);
}

Poly omega_twisted(const Tower& t, unsigned n, long j) { return twist(omega(t.p, n), j, t.u); }

Poly xi_twisted(const Tower& t, unsigned n, long j) { return twist(xi(t.p, n), j, t.u); }

Poly omega_J(const Tower& t, unsigned n, const Interval& J) {
  Poly out(1);
  Poly base = omega(t.p, n);
  for (long j : J.elements()) out = out * twist(base, j, t.u);
  return out;
}

Poly mlog(const Tower& t, const Interval& J, unsigned n) {
  Poly out(1);
  Poly base = xi(t.p, n) * Rational(1, t.p.value());
  for (long j : J.elements()) out = out * twist(base, j, t.u);
  return out;
}

}  // namespace plp

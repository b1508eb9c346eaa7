#pragma once

#include "plp/interval.hpp"
#include "plp/padic.hpp"
#include "plp/poly.hpp"

namespace plp {

// The prime p together with the generator u of 1 + pZ_p used for twists.
struct Tower {
  Prime p;
  Rational u;

  // u defaults to 1 + p. Requires u != 1 and v_p(u - 1) >= 1.
  explicit Tower(long prime);
  Tower(long prime, Rational u_);
};

// (1+x)^{p^n} - 1
Poly omega(const Prime& p, unsigned n);
// omega_n / omega_{n-1} for n >= 1, and p*x for n = 0
Poly xi(const Prime& p, unsigned n);

// f(u^{-j}(1+x) - 1)
Poly twist(const Poly& f, long j, const Rational& u);

Poly omega_twisted(const Tower& t, unsigned n, long j);
Poly xi_twisted(const Tower& t, unsigned n, long j);
// prod_{j in J} omega_n^{(j)}
Poly omega_J(const Tower& t, unsigned n, const Interval& J);
// prod_{j in J} xi_n^{(j)} / p; 1 for empty J
Poly mlog(const Tower& t, const Interval& J, unsigned n);

}  // namespace plp

#pragma once

#include "plp/rational.hpp"

namespace plp::testing {

inline Rational q(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace plp::testing

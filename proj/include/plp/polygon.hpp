#pragma once

#include <string>
#include <utility>
#include <vector>

#include "plp/padic.hpp"
#include "plp/qmatrix.hpp"

namespace plp {

// Lower-convex polygon from (0,0) with nondecreasing slopes, one per unit step.
class Polygon {
 public:
  Polygon() = default;
  // Sorts the slopes.
  explicit Polygon(std::vector<Rational> slopes);

  const std::vector<Rational>& slopes() const { return slopes_; }
  std::size_t length() const { return slopes_.size(); }
  // (i, sum of the first i slopes) for i = 0..length
  std::vector<std::pair<long, Rational>> points() const;
  // Breakpoints only.
  std::vector<std::pair<long, Rational>> vertices() const;
  std::pair<long, Rational> endpoint() const;

  // Pointwise comparison at every integer abscissa; lengths must match.
  bool lies_below(const Polygon& other) const;
  bool same_endpoints(const Polygon& other) const;

  friend bool operator==(const Polygon&, const Polygon&) = default;
  std::string to_string() const;

 private:
  std::vector<Rational> slopes_;
};

// Lower hull of (i, v(c_i)) for det(1 - x phi) = sum c_i x^i. Throws
// std::domain_error when phi is singular.
Polygon newton_polygon(const QMatrix& phi, const Prime& p);
// Lower convex hull of (i, v(c_i)) for a polynomial with nonzero constant term.
Polygon newton_polygon_of(const Poly& f, const Prime& p);

Polygon hodge_polygon(const std::vector<long>& weights);

// Sorted valuations of the elementary divisors of A over the p-integral
// rationals, by valuation-pivot elimination. Throws std::domain_error if A is singular.
std::vector<Rational> smith_valuations(const QMatrix& a, const Prime& p);
Polygon smith_polygon(const QMatrix& a, const Prime& p);

struct KatzMazurReport {
  Polygon smith;
  Polygon newton;
  bool below = false;
  bool same_endpoints = false;
  bool ok() const { return below && same_endpoints; }
};
KatzMazurReport katz_mazur(const QMatrix& a, const Prime& p);

}  // namespace plp

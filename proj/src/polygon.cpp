#include "plp/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace plp {

Polygon::Polygon(std::vector<Rational> slopes) : slopes_(std::move(slopes)) {
  std::sort(slopes_.begin(), slopes_.end());
}

std::vector<std::pair<long, Rational>> Polygon::points() const {
  std::vector<std::pair<long, Rational>> pts{{0, Rational(0)}};
  Rational acc = 0;
  for (std::size_t i = 0; i < slopes_.size(); ++i) {
    acc += slopes_[i];
    pts.emplace_back(static_cast<long>(i + 1), acc);
  }
  return pts;
}

std::vector<std::pair<long, Rational>> Polygon::vertices() const {
  auto pts = points();
  std::vector<std::pair<long, Rational>> out{pts.front()};
  for (std::size_t i = 1; i < pts.size(); ++i)
    if (i + 1 == pts.size() || slopes_[i - 1] != slopes_[i]) out.push_back(pts[i]);
  return out;
}

std::pair<long, Rational> Polygon::endpoint() const { return points().back(); }

bool Polygon::lies_below(const Polygon& other) const {
  if (length() != other.length()) throw std::invalid_argument("polygons of different lengths");
  auto a = points(), b = other.points();
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i].second > b[i].second) return false;
  return true;
}

bool Polygon::same_endpoints(const Polygon& other) const { return endpoint() == other.endpoint(); }

std::string Polygon::to_string() const {
  std::string s;
  for (const auto& [x, y] : vertices()) {
    if (!s.empty()) s += " ";
    s += "(" + std::to_string(x) + "," + plp::to_string(y) + ")";
  }
  return s;
}

Polygon newton_polygon_of(const Poly& f, const Prime& p) {
  const auto& c = f.coefficients();
  if (c.empty() || c[0] == 0) throw std::domain_error("Newton polygon needs a nonzero constant term");
  std::vector<std::pair<long, Rational>> pts;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) pts.emplace_back(static_cast<long>(i), valuation(c[i], p).value());
  // lower hull, monotone chain
  std::vector<std::pair<long, Rational>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull.back();
      // drop b when it lies on or above segment a-pt
      Rational cross = (b.second - a.second) * (pt.first - a.first) - (pt.second - a.second) * (b.first - a.first);
      if (cross >= 0) hull.pop_back();
      else break;
    }
    hull.push_back(pt);
  }
  std::vector<Rational> slopes;
  for (std::size_t i = 1; i < hull.size(); ++i) {
    Rational s = (hull[i].second - hull[i - 1].second) / Rational(hull[i].first - hull[i - 1].first);
    for (long k = hull[i - 1].first; k < hull[i].first; ++k) slopes.push_back(s);
  }
  return Polygon(std::move(slopes));
}

Polygon newton_polygon(const QMatrix& phi, const Prime& p) {
  if (phi.determinant() == 0) throw std::domain_error("phi is singular");
  // det(1 - x phi) is the reversal of det(x - phi)
  const Poly chi_poly = phi.characteristic_polynomial();
  const auto& chi = chi_poly.coefficients();
  std::vector<Rational> rev(chi.rbegin(), chi.rend());
  return newton_polygon_of(Poly(std::move(rev)), p);
}

Polygon hodge_polygon(const std::vector<long>& weights) {
  std::vector<Rational> s;
  for (long w : weights) s.emplace_back(w);
  return Polygon(std::move(s));
}

std::vector<Rational> smith_valuations(const QMatrix& a, const Prime& p) {
  if (a.rows() != a.cols()) throw std::domain_error("Smith polygon needs a square matrix");
  QMatrix m = a;
  const std::size_t d = m.rows();
  std::vector<Rational> out;
  for (std::size_t k = 0; k < d; ++k) {
    std::size_t bi = d, bj = d;
    Valuation best = Valuation::infinity();
    for (std::size_t i = k; i < d; ++i)
      for (std::size_t j = k; j < d; ++j) {
        Valuation v = valuation(m(i, j), p);
        if (v < best) best = v, bi = i, bj = j;
      }
    if (best.is_infinite()) throw std::domain_error("matrix is singular");
    for (std::size_t j = 0; j < d; ++j) std::swap(m(k, j), m(bi, j));
    for (std::size_t i = 0; i < d; ++i) std::swap(m(i, k), m(i, bj));
    const Rational piv = m(k, k);
    for (std::size_t i = k + 1; i < d; ++i) {
      if (m(i, k) == 0) continue;
      Rational f = m(i, k) / piv;
      for (std::size_t j = k; j < d; ++j) m(i, j) -= f * m(k, j);
    }
    for (std::size_t j = k + 1; j < d; ++j) m(k, j) = 0;
    out.push_back(best.value());
  }
  std::sort(out.begin(), out.end());
  return out;
}

Polygon smith_polygon(const QMatrix& a, const Prime& p) { return Polygon(smith_valuations(a, p)); }

KatzMazurReport katz_mazur(const QMatrix& a, const Prime& p) {
  KatzMazurReport r{smith_polygon(a, p), newton_polygon(a, p)};
  r.below = r.smith.lies_below(r.newton);
  r.same_endpoints = r.smith.same_endpoints(r.newton);
  return r;
}

}  // namespace plp

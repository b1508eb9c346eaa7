#pragma once

#include <vector>

#include "plp/poly.hpp"
#include "plp/qmatrix.hpp"

namespace plp {

// Dense matrix over Q[x].
class PolyMatrix {
 public:
  PolyMatrix() = default;
  PolyMatrix(std::size_t rows, std::size_t cols);
  explicit PolyMatrix(const QMatrix& m);

  static PolyMatrix identity(std::size_t d);
  static PolyMatrix diagonal(const std::vector<Poly>& entries);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Poly& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Poly& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  friend PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b);
  friend PolyMatrix operator*(const Poly& f, const PolyMatrix& a);
  friend bool operator==(const PolyMatrix& a, const PolyMatrix& b);

  Poly determinant() const;
  bool is_upper_triangular() const;
  // Entrywise remainder modulo m.
  PolyMatrix mod(const Poly& m) const;
  bool is_zero() const;
  long max_degree() const;
  // Entrywise evaluation at a rational point.
  QMatrix evaluate(const Rational& x) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Poly> a_;
};

// Monic elementary divisors d_1, ..., d_d with d_{i+1} | d_i.
struct DivisorSequence {
  std::vector<Poly> divisors;
};

struct SmithForm {
  DivisorSequence invariants;
  // M = left * diag(invariants) * right; left and right are invertible over Q[x]
  PolyMatrix left;
  PolyMatrix right;
};

// Throws std::domain_error for singular or non-square input.
SmithForm smith_form(const PolyMatrix& m);

// Same invariants as smith_form, from gcds of k x k minors; no transforms, and
// much cheaper on entries with large coefficients.
DivisorSequence elementary_divisors(const PolyMatrix& m);

}  // namespace plp

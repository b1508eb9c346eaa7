#pragma once

#include <vector>

#include "plp/padic.hpp"
#include "plp/poly.hpp"

namespace plp {

// Dense matrix over Q.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static QMatrix identity(std::size_t d);
  static QMatrix diagonal(const std::vector<Rational>& entries);
  // Columns given as vectors.
  static QMatrix from_columns(const std::vector<std::vector<Rational>>& cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<Rational> column(std::size_t j) const;
  QMatrix columns(const std::vector<std::size_t>& idx) const;
  QMatrix transpose() const;

  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator+(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator-(const QMatrix& a, const QMatrix& b);
  friend QMatrix operator*(const Rational& c, const QMatrix& a);
  friend std::vector<Rational> operator*(const QMatrix& a, const std::vector<Rational>& v);
  friend bool operator==(const QMatrix& a, const QMatrix& b);

  Rational determinant() const;
  std::size_t rank() const;
  // Throws std::domain_error when singular.
  QMatrix inverse() const;
  QMatrix power(long e) const;
  // Basis of the right kernel, as columns.
  QMatrix kernel() const;
  // Coefficients of det(x I - A), low degree first.
  Poly characteristic_polynomial() const;

  bool is_upper_triangular() const;
  Valuation min_valuation(const Prime& p) const;
  // log_p of the max-entry norm
  LogNorm log_norm(const Prime& p) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

// Horizontal concatenation.
QMatrix hstack(const QMatrix& a, const QMatrix& b);

}  // namespace plp

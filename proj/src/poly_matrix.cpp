#include "plp/poly_matrix.hpp"

#include <functional>
#include <stdexcept>

namespace plp {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

PolyMatrix::PolyMatrix(const QMatrix& m) : PolyMatrix(m.rows(), m.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = Poly(m(i, j));
}

PolyMatrix PolyMatrix::identity(std::size_t d) {
  PolyMatrix m(d, d);
  for (std::size_t i = 0; i < d; ++i) m(i, i) = Poly(1);
  return m;
}

PolyMatrix PolyMatrix::diagonal(const std::vector<Poly>& entries) {
  PolyMatrix m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) m(i, i) = entries[i];
  return m;
}

PolyMatrix operator*(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape mismatch");
  PolyMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      if (a(i, k).is_zero()) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (b(k, j).is_zero()) continue;
        c(i, j) += a(i, k) * b(k, j);
      }
    }
  return c;
}

PolyMatrix operator+(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] += b.a_[i];
  return c;
}

PolyMatrix operator-(const PolyMatrix& a, const PolyMatrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  PolyMatrix c = a;
  for (std::size_t i = 0; i < c.a_.size(); ++i) c.a_[i] -= b.a_[i];
  return c;
}

PolyMatrix operator*(const Poly& f, const PolyMatrix& a) {
  PolyMatrix c = a;
  for (auto& e : c.a_) e = f * e;
  return c;
}

bool operator==(const PolyMatrix& a, const PolyMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
}

Poly PolyMatrix::determinant() const {
  if (rows_ != cols_) throw std::invalid_argument("determinant of a non-square matrix");
  const std::size_t n = rows_;
  if (n == 0) return Poly(1);
  // Bareiss fraction-free elimination
  PolyMatrix m = *this;
  Poly prev(1);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m(k, k).is_zero()) {
      std::size_t piv = k + 1;
      while (piv < n && m(piv, k).is_zero()) ++piv;
      if (piv == n) return Poly();
      for (std::size_t j = 0; j < n; ++j) std::swap(m(k, j), m(piv, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j)
        m(i, j) = exact_div(m(i, j) * m(k, k) - m(i, k) * m(k, j), prev);
    prev = m(k, k);
  }
  return negate ? -m(n - 1, n - 1) : m(n - 1, n - 1);
}

bool PolyMatrix::is_upper_triangular() const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < i && j < cols_; ++j)
      if (!(*this)(i, j).is_zero()) return false;
  return true;
}

PolyMatrix PolyMatrix::mod(const Poly& m) const {
  PolyMatrix c = *this;
  for (auto& e : c.a_) e = e % m;
  return c;
}

bool PolyMatrix::is_zero() const {
  for (const auto& e : a_)
    if (!e.is_zero()) return false;
  return true;
}

long PolyMatrix::max_degree() const {
  long d = -1;
  for (const auto& e : a_) d = std::max(d, e.degree());
  return d;
}

QMatrix PolyMatrix::evaluate(const Rational& x) const {
  QMatrix m(rows_, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) m(i, j) = (*this)(i, j)(x);
  return m;
}

namespace {

// Elimination state: u * a * v stays equal to the working matrix, while
// u_inv and v_inv track the inverses so the certificate never needs inverting.
struct SmithWork {
  PolyMatrix a, u, u_inv, v, v_inv;
  std::size_t n;

  explicit SmithWork(const PolyMatrix& m)
      : a(m),
        u(PolyMatrix::identity(m.rows())),
        u_inv(PolyMatrix::identity(m.rows())),
        v(PolyMatrix::identity(m.cols())),
        v_inv(PolyMatrix::identity(m.cols())),
        n(m.rows()) {}

  // row t += c * row s
  void add_row(std::size_t t, std::size_t s, const Poly& c) {
    for (std::size_t j = 0; j < n; ++j) {
      if (!a(s, j).is_zero()) a(t, j) += c * a(s, j);
      if (!u(s, j).is_zero()) u(t, j) += c * u(s, j);
      if (!u_inv(j, t).is_zero()) u_inv(j, s) -= c * u_inv(j, t);
    }
  }
  // col t += c * col s
  void add_col(std::size_t t, std::size_t s, const Poly& c) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!a(i, s).is_zero()) a(i, t) += c * a(i, s);
      if (!v(i, s).is_zero()) v(i, t) += c * v(i, s);
      if (!v_inv(t, i).is_zero()) v_inv(s, i) -= c * v_inv(t, i);
    }
  }
  void swap_rows(std::size_t s, std::size_t t) {
    if (s == t) return;
    for (std::size_t j = 0; j < n; ++j) {
      std::swap(a(s, j), a(t, j));
      std::swap(u(s, j), u(t, j));
      std::swap(u_inv(j, s), u_inv(j, t));
    }
  }
  void swap_cols(std::size_t s, std::size_t t) {
    if (s == t) return;
    for (std::size_t i = 0; i < n; ++i) {
      std::swap(a(i, s), a(i, t));
      std::swap(v(i, s), v(i, t));
      std::swap(v_inv(s, i), v_inv(t, i));
    }
  }
  void scale_row(std::size_t t, const Rational& c) {
    Rational inv = 1 / c;
    for (std::size_t j = 0; j < n; ++j) {
      a(t, j) *= c;
      u(t, j) *= c;
      u_inv(j, t) *= inv;
    }
  }
};

}  // namespace

SmithForm smith_form(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("smith_form needs a square matrix");
  const std::size_t n = m.rows();
  SmithWork w(m);
  for (std::size_t k = 0; k < n; ++k) {
    for (;;) {
      // smallest-degree nonzero entry of the trailing block becomes the pivot
      long best = -1;
      std::size_t bi = k, bj = k;
      for (std::size_t i = k; i < n; ++i)
        for (std::size_t j = k; j < n; ++j) {
          const Poly& e = w.a(i, j);
          if (!e.is_zero() && (best < 0 || e.degree() < best)) {
            best = e.degree();
            bi = i;
            bj = j;
          }
        }
      if (best < 0) throw std::domain_error("smith_form: singular matrix");
      w.swap_rows(k, bi);
      w.swap_cols(k, bj);

      bool clear = true;
      for (std::size_t i = k + 1; i < n; ++i) {
        if (w.a(i, k).is_zero()) continue;
        Poly q = divmod(w.a(i, k), w.a(k, k)).quotient;
        w.add_row(i, k, -q);
        if (!w.a(i, k).is_zero()) clear = false;
      }
      for (std::size_t j = k + 1; j < n; ++j) {
        if (w.a(k, j).is_zero()) continue;
        Poly q = divmod(w.a(k, j), w.a(k, k)).quotient;
        w.add_col(j, k, -q);
        if (!w.a(k, j).is_zero()) clear = false;
      }
      if (!clear) continue;

      bool divisible = true;
      for (std::size_t i = k + 1; i < n && divisible; ++i)
        for (std::size_t j = k + 1; j < n; ++j)
          if (!divides(w.a(k, k), w.a(i, j))) {
            w.add_row(k, i, Poly(1));
            divisible = false;
            break;
          }
      if (divisible) break;
    }
    w.scale_row(k, 1 / w.a(k, k).leading());
  }

  // The elimination yields d_1 | d_2 | ...; reverse to descending order.
  SmithForm out;
  out.left = PolyMatrix(n, n);
  out.right = PolyMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.invariants.divisors.push_back(w.a(n - 1 - k, n - 1 - k));
    for (std::size_t i = 0; i < n; ++i) {
      out.left(i, k) = w.u_inv(i, n - 1 - k);
      out.right(k, i) = w.v_inv(n - 1 - k, i);
    }
  }
  return out;
}

namespace {

void for_each_subset(std::size_t n, std::size_t k, const std::function<void(const std::vector<std::size_t>&)>& fn) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    fn(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

DivisorSequence elementary_divisors(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::domain_error("elementary_divisors needs a square matrix");
  const std::size_t n = m.rows();
  // D_k = gcd of k x k minors; the k-th invariant is D_k / D_{k-1}
  std::vector<Poly> D{Poly(1)};
  for (std::size_t k = 1; k <= n; ++k) {
    Poly g;
    if (k == n) {
      g = m.determinant();
    } else {
      for_each_subset(n, k, [&](const std::vector<std::size_t>& rows) {
        for_each_subset(n, k, [&](const std::vector<std::size_t>& cols) {
          if (g.degree() == 0) return;
          PolyMatrix sub(k, k);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
          g = gcd(g, sub.determinant());
        });
      });
    }
    if (g.is_zero()) throw std::domain_error("elementary_divisors: singular matrix");
    D.push_back(g.monic());
  }
  DivisorSequence out;
  for (std::size_t k = n; k >= 1; --k) out.divisors.push_back(exact_div(D[k], D[k - 1]));
  return out;
}

}  // namespace plp

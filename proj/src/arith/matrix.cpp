#include "symprod/arith/matrix.hpp"

#include <sstream>

#include "symprod/errors.hpp"

namespace symprod {

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  require(a.cols_ == b.rows_, ErrorCode::invalid_argument, "matrix product: dimension mismatch");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rational& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Rational RatMatrix::trace() const {
  Rational t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rational RatMatrix::determinant() const {
  require(rows_ == cols_, ErrorCode::invalid_argument, "determinant of non-square matrix");
  RatMatrix m = *this;
  const std::size_t n = rows_;
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m(piv, c) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(piv, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    Rational inv = 1 / m(c, c);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) * inv;
      for (std::size_t j = c; j < n; ++j) m(r, j) -= f * m(c, j);
    }
  }
  return det;
}

// Reduction to upper Hessenberg form followed by the standard recurrence
// for the characteristic polynomial of a Hessenberg matrix.
UniPoly RatMatrix::charpoly() const {
  require(rows_ == cols_, ErrorCode::invalid_argument, "charpoly of non-square matrix");
  const std::size_t n = rows_;
  RatMatrix h = *this;
  for (std::size_t m = 1; m + 1 < n; ++m) {
    std::size_t i = m;
    while (i < n && h(i, m - 1) == 0) ++i;
    if (i == n) continue;
    if (i != m) {
      for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
      for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
    }
    Rational pivot = h(m, m - 1);
    for (std::size_t r = m + 1; r < n; ++r) {
      if (h(r, m - 1) == 0) continue;
      Rational u = h(r, m - 1) / pivot;
      for (std::size_t j = 0; j < n; ++j) h(r, j) -= u * h(m, j);
      for (std::size_t j = 0; j < n; ++j) h(j, m) += u * h(j, r);
    }
  }
  std::vector<UniPoly> p(n + 1);
  p[0] = UniPoly::constant(1);
  for (std::size_t k = 1; k <= n; ++k) {
    // p_k = (x - h_kk) p_{k-1} - sum_{i<k} h_{i,k} (prod_{j=i+1}^{k} h_{j,j-1}) p_{i-1}
    p[k] = UniPoly{-h(k - 1, k - 1), Rational(1)} * p[k - 1];
    Rational prod = 1;
    for (std::size_t i = k - 1; i >= 1; --i) {
      prod *= h(i, i - 1);
      if (prod == 0) break;
      p[k] -= p[i - 1] * Rational(prod * h(i - 1, k - 1));
    }
  }
  return p[n];
}

std::size_t RatMatrix::rank() const {
  RatMatrix m = *this;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < cols_ && rank < rows_; ++c) {
    std::size_t piv = rank;
    while (piv < rows_ && m(piv, c) == 0) ++piv;
    if (piv == rows_) continue;
    for (std::size_t j = 0; j < cols_; ++j) std::swap(m(piv, j), m(rank, j));
    for (std::size_t r = rank + 1; r < rows_; ++r) {
      if (m(r, c) == 0) continue;
      Rational f = m(r, c) / m(rank, c);
      for (std::size_t j = c; j < cols_; ++j) m(r, j) -= f * m(rank, j);
    }
    ++rank;
  }
  return rank;
}

std::string RatMatrix::to_string() const {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    os << (i ? ", [" : "[");
    for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << symprod::to_string((*this)(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b) {
  const std::size_t rows = a.rows(), cols = a.cols();
  require(b.size() == rows, ErrorCode::invalid_argument, "solve_linear: rhs size mismatch");
  std::vector<std::size_t> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a(piv, c) == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(piv, j), a(r, j));
      std::swap(b[piv], b[r]);
    }
    Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < cols; ++j) a(r, j) *= inv;
    b[r] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a(i, c) == 0) continue;
      Rational f = a(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (a(r, j) != 0) a(i, j) -= f * a(r, j);
      b[i] -= f * b[r];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i)
    if (b[i] != 0) return std::nullopt;
  std::vector<Rational> x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = b[i];
  return x;
}

Integer bareiss_determinant(std::vector<std::vector<Integer>> m) {
  const std::size_t n = m.size();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
        m[i][j] = v;
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace symprod

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "symprod/arith/integer.hpp"
#include "symprod/arith/upoly.hpp"

namespace symprod {

/// Dense row-major matrix over Q.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}
  static RatMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Rational& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend bool operator==(const RatMatrix& a, const RatMatrix& b) = default;

  Rational trace() const;
  Rational determinant() const;
  /// Characteristic polynomial det(x I - A), monic of degree n (Hessenberg method).
  UniPoly charpoly() const;
  std::size_t rank() const;

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Rational> a_;
};

/// One solution of A x = b (free variables set to zero), or nullopt when the
/// system is inconsistent.
std::optional<std::vector<Rational>> solve_linear(RatMatrix a, std::vector<Rational> b);

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
Integer bareiss_determinant(std::vector<std::vector<Integer>> m);

}  // namespace symprod

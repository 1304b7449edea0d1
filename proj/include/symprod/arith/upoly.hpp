#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "symprod/arith/integer.hpp"

namespace symprod {

/// Dense univariate polynomial over Q. coeffs()[i] is the coefficient of x^i;
/// the representation is always trimmed so the leading coefficient is nonzero.
/// The zero polynomial has degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs);
  static UniPoly constant(const Rational& c);
  static UniPoly monomial(const Rational& c, int degree);
  static UniPoly x() { return monomial(1, 1); }
  static UniPoly from_integers(const std::vector<Integer>& coeffs);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  /// Coefficient of x^i; zero outside the stored range.
  Rational coeff(int i) const;
  const Rational& lead() const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& s);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const Rational& s) { return a *= s; }
  friend UniPoly operator*(const Rational& s, UniPoly a) { return a *= s; }
  UniPoly operator-() const;
  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

  /// Euclidean division; throws on a zero divisor.
  static std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator/(const UniPoly& a, const UniPoly& b) { return divmod(a, b).first; }
  friend UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).second; }

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned e) const;
  /// this(g(x)).
  UniPoly compose(const UniPoly& g) const;

  template <class T>
  T evaluate(const T& x, const T& zero) const {
    T acc = zero;
    for (int i = degree(); i >= 0; --i) acc = acc * x + T(zero + c_[static_cast<std::size_t>(i)]);
    return acc;
  }
  Rational operator()(const Rational& x) const;

  /// Positive rational c with this = c * p, p integral primitive with
  /// positive leading coefficient (sign folded into c). Zero -> (0, 0).
  std::pair<Rational, UniPoly> content_primitive() const;
  UniPoly primitive() const { return content_primitive().second; }
  std::vector<Integer> integer_coeffs() const;  ///< requires integral coefficients

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Monic gcd (zero if both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);

/// s*a + t*b = g with g = monic gcd(a, b).
struct ExtendedGcd {
  UniPoly g, s, t;
};
ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b);

/// Resultant over Q (Euclidean algorithm).
Rational resultant(const UniPoly& a, const UniPoly& b);

/// Yun's square-free decomposition: list of (monic square-free part, multiplicity).
std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p);

}  // namespace symprod

#pragma once

#include <memory>
#include <string>
#include <vector>

#include "symprod/arith/factor.hpp"
#include "symprod/arith/integer.hpp"
#include "symprod/arith/matrix.hpp"
#include "symprod/arith/upoly.hpp"

namespace symprod {

class NFElem;

/// Q[x]/(m) with m monic and irreducible over Q (verified on construction).
class NumberField {
 public:
  /// Accepts any irreducible polynomial; it is scaled to be monic.
  static std::shared_ptr<const NumberField> make(const UniPoly& defining, std::string generator = "a");
  static std::shared_ptr<const NumberField> rationals();

  const UniPoly& minpoly() const noexcept { return minpoly_; }
  /// Primitive integral form of the defining polynomial (for display).
  UniPoly integral_minpoly() const { return minpoly_.primitive(); }
  int degree() const noexcept { return minpoly_.degree(); }
  const std::string& generator_name() const noexcept { return name_; }
  /// Exact equality of defining polynomials (same presentation).
  bool same_as(const NumberField& o) const { return minpoly_ == o.minpoly_; }

 private:
  NumberField(UniPoly m, std::string name) : minpoly_(std::move(m)), name_(std::move(name)) {}
  UniPoly minpoly_;
  std::string name_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/// Element of a number field in the power basis 1, a, ..., a^(n-1).
class NFElem {
 public:
  NFElem() = default;
  NFElem(FieldPtr field, const Rational& value);
  NFElem(FieldPtr field, std::vector<Rational> coords);
  static NFElem generator(FieldPtr field);
  static NFElem from_poly(FieldPtr field, const UniPoly& p);

  const FieldPtr& field() const noexcept { return field_; }
  const std::vector<Rational>& coords() const noexcept { return c_; }
  UniPoly as_poly() const { return UniPoly(c_); }
  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  ///< requires is_rational()

  NFElem& operator+=(const NFElem& o);
  NFElem& operator-=(const NFElem& o);
  NFElem& operator*=(const NFElem& o);
  NFElem& operator/=(const NFElem& o);
  friend NFElem operator+(NFElem a, const NFElem& b) { return a += b; }
  friend NFElem operator-(NFElem a, const NFElem& b) { return a -= b; }
  friend NFElem operator*(NFElem a, const NFElem& b) { return a *= b; }
  friend NFElem operator/(NFElem a, const NFElem& b) { return a /= b; }
  friend NFElem operator+(NFElem a, const Rational& b) { return a += NFElem(a.field_, b); }
  friend NFElem operator*(NFElem a, const Rational& b);
  NFElem operator-() const;
  NFElem inverse() const;
  NFElem pow(unsigned e) const;
  friend bool operator==(const NFElem& a, const NFElem& b);
  friend bool operator!=(const NFElem& a, const NFElem& b) { return !(a == b); }

  /// Matrix of multiplication by this element in the power basis.
  RatMatrix multiplication_matrix() const;
  Rational norm() const;
  Rational trace() const;

  std::string to_string() const;
  std::size_t hash() const;

 private:
  void check_same(const NFElem& o) const;
  FieldPtr field_;
  std::vector<Rational> c_;
};

/// Monic irreducible polynomial of e over Q.
UniPoly minimal_polynomial(const NFElem& e);

/// Dense polynomial with coefficients in one number field.
class FieldPoly {
 public:
  FieldPoly() = default;
  FieldPoly(FieldPtr field, std::vector<NFElem> coeffs);
  static FieldPoly lift(FieldPtr field, const UniPoly& p);

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<NFElem>& coeffs() const noexcept { return c_; }
  const FieldPtr& field() const noexcept { return field_; }
  FieldPoly monic() const;
  NFElem operator()(const NFElem& x) const;

  friend FieldPoly operator*(const FieldPoly& a, const FieldPoly& b);
  friend FieldPoly operator-(const FieldPoly& a, const FieldPoly& b);
  static std::pair<FieldPoly, FieldPoly> divmod(const FieldPoly& a, const FieldPoly& b);
  friend bool operator==(const FieldPoly& a, const FieldPoly& b) { return a.c_ == b.c_; }

  std::string to_string() const;

 private:
  void trim();
  FieldPtr field_;
  std::vector<NFElem> c_;
};

FieldPoly gcd(const FieldPoly& a, const FieldPoly& b);  ///< monic

/// Monic irreducible factors over K of a squarefree polynomial g in Q[x]
/// (Trager's norm method).
std::vector<FieldPoly> factor_over_field(const UniPoly& g, const FieldPtr& field);

/// Roots of g in K (distinct).
std::vector<NFElem> roots_in_field(const UniPoly& g, const FieldPtr& field);

/// True when L = Q[x]/(g) embeds into K, i.e. g has a root in K.
bool field_contains_root(const FieldPtr& field, const UniPoly& g);

/// Polynomial through the points (xs[i], ys[i]) (distinct xs).
UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace symprod

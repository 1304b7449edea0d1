#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symprod/arith/integer.hpp"
#include "symprod/arith/upoly.hpp"

namespace symprod {

/// Homogeneous polynomial of degree d in two variables (X, Y):
/// sum_i coeffs[i] * X^i * Y^(d-i). The zero form is allowed as a value but
/// rejected where a genuine form is required.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(int degree, std::vector<Rational> ascending);
  /// Homogenize p(X) to the given degree (>= deg p).
  static BinaryForm homogenize(const UniPoly& p, int degree);

  int degree() const noexcept { return degree_; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }
  Rational coeff(int i) const { return i < 0 || i > degree_ ? Rational(0) : c_[static_cast<std::size_t>(i)]; }
  bool is_zero() const;
  /// p(X) = form(X, 1).
  UniPoly dehomogenize() const { return UniPoly(c_); }
  /// Multiplicity of the root (X:Y) = (1:0).
  int infinity_multiplicity() const;

  template <class T>
  T evaluate(const T& x, const T& y, const T& zero) const {
    // Horner in X with Y powers accumulated from the top.
    T acc = zero;
    T ypow = zero + Rational(1);
    std::vector<T> ypows;
    ypows.reserve(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) {
      ypows.push_back(ypow);
      ypow = ypow * y;
    }
    for (int i = degree_; i >= 0; --i) acc = acc * x + ypows[static_cast<std::size_t>(degree_ - i)] * c_[static_cast<std::size_t>(i)];
    return acc;
  }

  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator+(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator-(const BinaryForm& a, const BinaryForm& b);
  friend BinaryForm operator*(BinaryForm a, const Rational& s);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b) = default;
  BinaryForm pow(unsigned e) const;

  BinaryForm derivative_x() const;
  BinaryForm derivative_y() const;
  /// this(P(z,t), Q(z,t)).
  BinaryForm compose(const BinaryForm& p, const BinaryForm& q) const;
  /// Integral primitive multiple, highest nonzero X-coefficient positive.
  BinaryForm primitive() const;

  std::string to_string(const std::string& x = "z", const std::string& y = "t") const;

 private:
  int degree_ = 0;
  std::vector<Rational> c_;
};

/// Homogeneous (Sylvester) resultant of two forms.
Rational resultant(const BinaryForm& a, const BinaryForm& b);

/// A degree-d self-map of P^1, [z:t] -> [P(z,t) : Q(z,t)], stored as the
/// primitive integral lift with the leading nonzero coefficient of P positive.
class RationalMap1 {
 public:
  /// Throws Error(degenerate_map) if degrees differ, d < 2 or Res(P,Q) = 0.
  RationalMap1(BinaryForm p, BinaryForm q);
  /// z -> poly(z), homogenized: [t^d p(z/t) : t^d].
  static RationalMap1 polynomial(const UniPoly& p);

  const BinaryForm& num() const noexcept { return p_; }
  const BinaryForm& den() const noexcept { return q_; }
  int degree() const noexcept { return p_.degree(); }
  bool is_polynomial() const;  ///< den is a multiple of t^d

  /// Lift of the n-th iterate.
  std::pair<BinaryForm, BinaryForm> iterate_lift(unsigned n) const;
  Rational resultant() const { return symprod::resultant(p_, q_); }
  /// dP/dz dQ/dt - dP/dt dQ/dz, degree 2d-2.
  BinaryForm wronskian() const;

  template <class T>
  std::pair<T, T> apply(const T& z, const T& t, const T& zero) const {
    return {p_.evaluate(z, t, zero), q_.evaluate(z, t, zero)};
  }

  std::string to_string() const;
  friend bool operator==(const RationalMap1& a, const RationalMap1& b) = default;

 private:
  BinaryForm p_, q_;
};

}  // namespace symprod

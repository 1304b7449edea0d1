#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "symprod/arith/integer.hpp"

namespace symprod {

using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Degree-reverse-lexicographic order with x0 > x1 > ... ; true if a > b.
struct DegRevLexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse polynomial over Q in variables x0..x(n-1). Terms are kept in
/// descending degrevlex order and never store zero coefficients.
class MPoly {
 public:
  using Terms = std::map<Monomial, Rational, DegRevLexGreater>;

  MPoly() = default;
  explicit MPoly(std::size_t nvars) : nvars_(nvars) {}
  static MPoly constant(std::size_t nvars, const Rational& c);
  static MPoly variable(std::size_t nvars, std::size_t i);
  static MPoly monomial(const Monomial& m, const Rational& c);

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t size() const noexcept { return terms_.size(); }
  Rational coeff(const Monomial& m) const;
  int degree() const;  ///< -1 for zero
  bool is_homogeneous() const;

  void add_term(const Monomial& m, const Rational& c);

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly& operator*=(const Rational& s);
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }
  friend MPoly operator*(const MPoly& a, const MPoly& b);
  friend MPoly operator*(MPoly a, const Rational& s) { return a *= s; }
  MPoly operator-() const;
  friend bool operator==(const MPoly& a, const MPoly& b) { return a.nvars_ == b.nvars_ && a.terms_ == b.terms_; }
  MPoly pow(unsigned e) const;
  MPoly derivative(std::size_t var) const;

  /// Evaluate with values of any ring T that accepts T * Rational and T + T.
  template <class T>
  T evaluate(const std::vector<T>& x, const T& zero) const {
    T acc = zero;
    for (const auto& [m, c] : terms_) {
      T term = zero + c;
      for (std::size_t i = 0; i < m.size(); ++i)
        for (unsigned e = 0; e < m[i]; ++e) term = term * x[i];
      acc = acc + term;
    }
    return acc;
  }
  Rational operator()(const std::vector<Rational>& x) const;
  Integer eval_integer(const std::vector<Integer>& x) const;  ///< requires integral coefficients

  /// Substitute polynomials for the variables (all in a common ring).
  MPoly compose(const std::vector<MPoly>& subs) const;

  /// Serialization `c*x0^a0*...*xk^ak + ...`; zero exponents omitted.
  std::string serialize() const;
  static MPoly parse(std::string_view text, std::size_t nvars);
  /// Human display with custom variable names, e.g. "v0^2 - 2*v1^2".
  std::string pretty(const std::vector<std::string>& names) const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace symprod

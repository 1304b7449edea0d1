#pragma once

#include <functional>
#include <string>
#include <vector>

#include "symprod/arith/integer.hpp"
#include "symprod/core/mpoly.hpp"

namespace symprod {

/// Rational point of P^k as coprime integers, first nonzero coordinate
/// positive. Equal points have identical representations.
class PkPoint {
 public:
  PkPoint() = default;
  explicit PkPoint(std::vector<Integer> coords);
  static PkPoint from_rationals(const std::vector<Rational>& coords);
  /// P^1 point x = (x : 1).
  static PkPoint affine(const Rational& x) { return from_rationals({x, Rational(1)}); }
  static PkPoint infinity() { return PkPoint({Integer(1), Integer(0)}); }

  std::size_t dim() const noexcept { return c_.empty() ? 0 : c_.size() - 1; }
  std::size_t size() const noexcept { return c_.size(); }
  const std::vector<Integer>& coords() const noexcept { return c_; }
  const Integer& operator[](std::size_t i) const { return c_[i]; }
  std::vector<Rational> rational_coords() const;

  /// P^1 helpers: last coordinate zero, and z/t otherwise.
  bool is_infinity() const { return c_.back() == 0; }
  Rational affine_value() const;

  friend bool operator==(const PkPoint& a, const PkPoint& b) = default;
  friend bool operator<(const PkPoint& a, const PkPoint& b) { return a.c_ < b.c_; }
  std::size_t hash() const;
  std::string to_string() const;  ///< "(81, 108, 54, 12, 1)"

 private:
  std::vector<Integer> c_;
};

struct PkPointHash {
  std::size_t operator()(const PkPoint& p) const { return p.hash(); }
};

/// Self-map of P^k given by k+1 homogeneous forms of a common degree d in
/// variables x0..xk.
class MorphismPk {
 public:
  MorphismPk() = default;
  explicit MorphismPk(std::vector<MPoly> components);

  std::size_t dim() const noexcept { return comps_.empty() ? 0 : comps_.size() - 1; }
  int degree() const noexcept { return degree_; }
  const std::vector<MPoly>& components() const noexcept { return comps_; }
  const MPoly& operator[](std::size_t i) const { return comps_[i]; }

  /// Throws Error(invariant_violation) if every component vanishes.
  PkPoint apply(const PkPoint& p) const;
  std::vector<Integer> apply_lift(const std::vector<Integer>& x) const;
  PkPoint iterate(const PkPoint& p, unsigned n) const;

  /// Components scaled together to coprime integers, last term of the last
  /// component positive.
  MorphismPk normalized() const;
  bool integral() const;

  std::string serialize() const;  ///< one component per line
  std::string pretty(const std::string& var = "v") const;
  friend bool operator==(const MorphismPk& a, const MorphismPk& b) = default;

 private:
  std::vector<MPoly> comps_;
  int degree_ = 0;
};

}  // namespace symprod

template <>
struct std::hash<symprod::PkPoint> {
  std::size_t operator()(const symprod::PkPoint& p) const { return p.hash(); }
};

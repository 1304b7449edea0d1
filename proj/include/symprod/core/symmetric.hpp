#pragma once

#include <string>
#include <utility>
#include <vector>

#include "symprod/arith/number_field.hpp"
#include "symprod/core/binary_form.hpp"
#include "symprod/core/projective.hpp"

namespace symprod {

/// The bihomogeneous elementary symmetric functions of k points (z_l : t_l):
/// result[j] = sum over |I| = k - j of prod z^I t^(1-I), j = 0..k, which are
/// the coefficients of X^(k-j) Y^j in prod (z_l X + t_l Y).
template <class T>
std::vector<T> eta_values(const std::vector<std::pair<T, T>>& points, const T& zero) {
  std::vector<T> c{zero + Rational(1)};
  for (const auto& [z, t] : points) {
    std::vector<T> next(c.size() + 1, zero);
    for (std::size_t j = 0; j < c.size(); ++j) {
      next[j] = next[j] + c[j] * z;
      next[j + 1] = next[j + 1] + c[j] * t;
    }
    c = std::move(next);
  }
  return c;
}

/// eta_k of k rational points of P^1.
PkPoint eta(const std::vector<PkPoint>& points);
/// eta_k of k points over a common number field, given as (z, t) pairs.
std::vector<NFElem> eta(const std::vector<std::pair<NFElem, NFElem>>& points);

/// The k-symmetric product F with F o eta_k = eta_k o (f, ..., f).
MorphismPk symmetrize(const RationalMap1& f, unsigned k);

/// Exact symbolic check of F o eta_k = c * eta_k o (f,...,f) for one c != 0.
bool commutes_symbolically(const RationalMap1& f, const MorphismPk& F, unsigned k);

/// Form prod (z_l X + t_l Y) attached to a point of P^k; coefficient of
/// X^(k-j) Y^j is the j-th coordinate.
BinaryForm form_of_point(const PkPoint& p);
PkPoint point_of_form(const BinaryForm& g);

/// R(z, t) = form(t, -z): its roots (z:t), with multiplicity, are the
/// points of the multiset.
BinaryForm point_polynomial(const PkPoint& p);
/// Inverse of point_polynomial: the point whose multiset is the roots of r.
PkPoint point_of_roots(const BinaryForm& r);

/// f viewed as a morphism of P^1 in variables (x0, x1) = (z, t).
MorphismPk as_morphism(const RationalMap1& f);

/// A point of P^1 over a number field: either infinity or an affine value.
struct AlgebraicPoint {
  FieldPtr field;
  bool infinity = false;
  NFElem x;

  static AlgebraicPoint rational(const Rational& v);
  static AlgebraicPoint at_infinity();
  static AlgebraicPoint affine(const NFElem& v) { return {v.field(), false, v}; }

  bool is_rational() const { return infinity || x.is_rational(); }
  /// Minimal polynomial of the affine coordinate, integral primitive; "inf" point has none.
  UniPoly minpoly() const;
  std::string to_string() const;
  friend bool operator==(const AlgebraicPoint& a, const AlgebraicPoint& b);
};

struct ConjugateClass {
  FieldPtr field;
  AlgebraicPoint point;
  unsigned multiplicity = 1;
  UniPoly minpoly;  ///< integral primitive; empty for infinity
  int degree() const { return point.infinity ? 1 : minpoly.degree(); }
};

/// Galois orbits encoded by a rational point of P^k (total degree k with
/// multiplicity, infinity counted once per multiplicity).
std::vector<ConjugateClass> conjugate_points(const PkPoint& p);

/// eta of the full set of embeddings of P (charpoly of the coordinate).
/// k defaults to the field degree.
PkPoint eta_tilde(const AlgebraicPoint& p);
PkPoint eta_tilde(const AlgebraicPoint& p, unsigned k);

}  // namespace symprod

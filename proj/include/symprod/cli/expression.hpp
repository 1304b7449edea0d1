#pragma once

#include <string>
#include <string_view>

#include "symprod/arith/upoly.hpp"
#include "symprod/core/binary_form.hpp"
#include "symprod/core/projective.hpp"
#include "symprod/core/symmetric.hpp"

namespace symprod::cli {

/// Grammar (whitespace ignored):
///   map   := poly_x | '[' poly_zt (',' | ':') poly_zt ']'
///   poly  := term (('+' | '-') term)*
///   term  := unary (('*' | '/') unary)*       division only by constants
///   unary := ('+' | '-') unary | power
///   power := atom ('^' digits)?
///   atom  := digits | variable | '(' poly ')'
/// Affine input uses the variable x and denotes a polynomial map; the
/// homogeneous pair uses z and t.
struct MapExpression {
  std::string source;
  bool affine = false;
  RationalMap1 map;
  /// Canonical text that parses back to the same map.
  std::string canonical() const { return map.to_string(); }
};

/// Throws ParseError (with position) on syntax errors and
/// Error(degenerate_map) for degree < 2 or a vanishing resultant.
MapExpression parse_map(std::string_view text);

/// Polynomial in x, e.g. "x^4 + x^3 + x^2 + x + 1".
UniPoly parse_polynomial(std::string_view text);

/// A point argument: "3", "-5/4", "inf", "root(<poly in x>)" for the
/// generator of Q[x]/(poly), or a tuple "(a, b, ...)" of rationals for P^k.
struct PointExpression {
  bool is_tuple = false;
  AlgebraicPoint point;  ///< when !is_tuple
  PkPoint tuple;         ///< when is_tuple
};
PointExpression parse_point(std::string_view text);

}  // namespace symprod::cli

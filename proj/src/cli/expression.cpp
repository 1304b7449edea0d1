#include "symprod/cli/expression.hpp"

#include <cctype>

#include "symprod/errors.hpp"
#include "symprod/op_trace.hpp"

namespace symprod::cli {

namespace {

// Recursive-descent parser producing bivariate polynomials over Q.
class Parser {
 public:
  // vars: names bound to x0 and x1 (second may be '\0' for univariate input)
  Parser(std::string_view text, char v0, char v1) : s_(text), v0_(v0), v1_(v1) {}

  MPoly poly() {
    MPoly acc = term();
    for (;;) {
      skip();
      if (eat('+'))
        acc += term();
      else if (eat('-'))
        acc -= term();
      else
        return acc;
    }
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError(pos_, std::string("expected '") + c + "'");
  }
  bool done() {
    skip();
    return pos_ == s_.size();
  }
  std::size_t pos() const { return pos_; }

 private:
  MPoly term() {
    MPoly acc = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        acc = acc * unary();
      } else if (pos_ < s_.size() && s_[pos_] == '/') {
        const std::size_t at = pos_++;
        MPoly den = unary();
        if (den.degree() > 0) throw ParseError(at, "division by a non-constant");
        const Rational c = den.coeff(Monomial(2, 0));
        if (c == 0) throw ParseError(at, "division by zero");
        acc *= Rational(1 / c);
      } else {
        return acc;
      }
    }
  }

  MPoly unary() {
    if (eat('-')) return -unary();
    if (eat('+')) return unary();
    return power();
  }

  MPoly power() {
    MPoly base = atom();
    if (eat('^')) {
      skip();
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      if (start == pos_) throw ParseError(pos_, "expected exponent digits");
      const std::string digits(s_.substr(start, pos_ - start));
      if (digits.size() > 4) throw ParseError(start, "exponent too large");
      base = base.pow(static_cast<unsigned>(std::stoul(digits)));
    }
    return base;
  }

  MPoly atom() {
    skip();
    if (pos_ >= s_.size()) throw ParseError(pos_, "unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      MPoly inner = poly();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return MPoly::constant(2, Rational(Integer(std::string(s_.substr(start, pos_ - start)))));
    }
    if (c == v0_) {
      ++pos_;
      return MPoly::variable(2, 0);
    }
    if (v1_ && c == v1_) {
      ++pos_;
      return MPoly::variable(2, 1);
    }
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  char v0_, v1_;
};

UniPoly to_unipoly(const MPoly& p) {
  std::vector<Rational> c(static_cast<std::size_t>(std::max(p.degree(), 0)) + 1);
  for (const auto& [m, v] : p.terms()) c[m[0]] += v;
  return UniPoly(std::move(c));
}

BinaryForm to_form(const MPoly& p, std::size_t at) {
  if (p.is_zero()) throw ParseError(at, "zero component");
  if (!p.is_homogeneous()) throw ParseError(at, "component is not homogeneous in z, t");
  const int d = p.degree();
  std::vector<Rational> c(static_cast<std::size_t>(d) + 1);
  for (const auto& [m, v] : p.terms()) c[m[0]] = v;
  return BinaryForm(d, std::move(c));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

UniPoly parse_polynomial(std::string_view text) {
  Parser ps(text, 'x', '\0');
  MPoly p = ps.poly();
  if (!ps.done()) throw ParseError(ps.pos(), "trailing input");
  return to_unipoly(p);
}

MapExpression parse_map(std::string_view text) {
  note_op(Op::parse_map);
  std::string_view body = trim(text);
  if (body.empty()) throw ParseError(0, "empty map expression");
  if (body.front() == '[') {
    Parser ps(text, 'z', 't');
    ps.expect('[');
    const std::size_t at_p = ps.pos();
    MPoly p = ps.poly();
    if (!ps.eat(',') && !ps.eat(':')) throw ParseError(ps.pos(), "expected ',' or ':' between components");
    const std::size_t at_q = ps.pos();
    MPoly q = ps.poly();
    ps.expect(']');
    if (!ps.done()) throw ParseError(ps.pos(), "trailing input");
    BinaryForm P = to_form(p, at_p), Q = to_form(q, at_q);
    if (P.degree() != Q.degree()) throw ParseError(at_q, "components have different degrees");
    if (P.degree() < 2) fail(ErrorCode::degenerate_map, "map degree must be at least 2");
    return MapExpression{std::string(text), false, RationalMap1(P, Q)};
  }
  Parser ps(text, 'x', '\0');
  UniPoly p = to_unipoly(ps.poly());
  if (!ps.done()) throw ParseError(ps.pos(), "trailing input");
  if (p.degree() < 2)
    fail(ErrorCode::degenerate_map, "map degree must be at least 2 (got degree " + std::to_string(p.degree()) + ")");
  return MapExpression{std::string(text), true, RationalMap1::polynomial(p)};
}

PointExpression parse_point(std::string_view text) {
  std::string_view s = trim(text);
  PointExpression out;
  if (s.empty()) throw ParseError(0, "empty point");
  if (s == "inf" || s == "infinity" || s == "oo") {
    out.point = AlgebraicPoint::at_infinity();
    return out;
  }
  if (s.starts_with("root(") && s.ends_with(")")) {
    UniPoly g = parse_polynomial(s.substr(5, s.size() - 6));
    if (g.degree() < 1) throw ParseError(5, "root() needs a non-constant polynomial");
    if (g.degree() == 1) {
      out.point = AlgebraicPoint::rational(-g.coeff(0) / g.coeff(1));
      return out;
    }
    if (!is_irreducible(g)) fail(ErrorCode::invalid_argument, "root(): polynomial is reducible over Q");
    auto K = NumberField::make(g);
    out.point = AlgebraicPoint::affine(NFElem::generator(K));
    return out;
  }
  if (s.front() == '(') {
    if (s.back() != ')') throw ParseError(s.size(), "expected ')'");
    std::vector<Rational> coords;
    std::string_view inner = s.substr(1, s.size() - 2);
    std::size_t start = 0;
    for (std::size_t i = 0; i <= inner.size(); ++i) {
      if (i == inner.size() || inner[i] == ',' || inner[i] == ':') {
        std::string_view item = trim(inner.substr(start, i - start));
        try {
          coords.push_back(parse_rational(item));
        } catch (const ParseError&) {
          throw ParseError(start + 1, "bad coordinate '" + std::string(item) + "'");
        }
        start = i + 1;
      }
    }
    if (coords.size() < 2) throw ParseError(0, "a projective point needs at least two coordinates");
    bool nonzero = false;
    for (const auto& c : coords) nonzero = nonzero || c != 0;
    if (!nonzero) fail(ErrorCode::invalid_argument, "the zero vector is not a projective point");
    out.is_tuple = true;
    out.tuple = PkPoint::from_rationals(coords);
    return out;
  }
  out.point = AlgebraicPoint::rational(parse_rational(s));
  return out;
}

}  // namespace symprod::cli

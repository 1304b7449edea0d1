#include "symprod/arith/number_field.hpp"

#include <functional>

#include "symprod/errors.hpp"
#include "symprod/op_trace.hpp"

namespace symprod {

FieldPtr NumberField::make(const UniPoly& defining, std::string generator) {
  require(defining.degree() >= 1, ErrorCode::invalid_argument, "number field: defining polynomial must have degree >= 1");
  require(is_irreducible(defining), ErrorCode::invalid_argument, "number field: defining polynomial is reducible over Q");
  return FieldPtr(new NumberField(defining.monic(), std::move(generator)));
}

FieldPtr NumberField::rationals() {
  static const FieldPtr q(new NumberField(UniPoly::x(), "a"));
  return q;
}

NFElem::NFElem(FieldPtr field, const Rational& value) : field_(std::move(field)) {
  require(field_ != nullptr, ErrorCode::invalid_argument, "NFElem: null field");
  c_.assign(static_cast<std::size_t>(field_->degree()), Rational(0));
  c_[0] = value;
}

NFElem::NFElem(FieldPtr field, std::vector<Rational> coords) : field_(std::move(field)), c_(std::move(coords)) {
  require(field_ != nullptr, ErrorCode::invalid_argument, "NFElem: null field");
  require(c_.size() == static_cast<std::size_t>(field_->degree()), ErrorCode::invalid_argument,
          "NFElem: coordinate count differs from field degree");
}

NFElem NFElem::from_poly(FieldPtr field, const UniPoly& p) {
  UniPoly r = p % field->minpoly();
  std::vector<Rational> c(static_cast<std::size_t>(field->degree()));
  for (int i = 0; i <= r.degree(); ++i) c[static_cast<std::size_t>(i)] = r.coeff(i);
  return NFElem(std::move(field), std::move(c));
}

NFElem NFElem::generator(FieldPtr field) { return from_poly(std::move(field), UniPoly::x()); }

bool NFElem::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

bool NFElem::is_rational() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

Rational NFElem::rational_value() const {
  require(is_rational(), ErrorCode::invalid_argument, "element is not rational");
  return c_.empty() ? Rational(0) : c_[0];
}

void NFElem::check_same(const NFElem& o) const {
  if (field_ == o.field_) return;
  if (field_ && o.field_ && field_->same_as(*o.field_)) return;
  fail(ErrorCode::field_mismatch, "number field elements from different fields");
}

NFElem& NFElem::operator+=(const NFElem& o) {
  note_op(Op::nf_arith);
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

NFElem& NFElem::operator-=(const NFElem& o) {
  note_op(Op::nf_arith);
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

NFElem& NFElem::operator*=(const NFElem& o) {
  note_op(Op::nf_arith);
  check_same(o);
  const std::size_t n = c_.size();
  if (n == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<Rational> prod(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  // reduce with the monic minimal polynomial: a^n = -sum m_i a^i
  const auto& m = field_->minpoly().coeffs();
  for (std::size_t k = 2 * n - 2; k >= n; --k) {
    if (prod[k] != 0) {
      Rational top = prod[k];
      for (std::size_t i = 0; i < n; ++i) prod[k - n + i] -= top * m[i];
      prod[k] = 0;
    }
  }
  prod.resize(n);
  c_ = std::move(prod);
  return *this;
}

NFElem NFElem::inverse() const {
  note_op(Op::nf_arith);
  require(!is_zero(), ErrorCode::division_by_zero, "number field division by zero");
  if (c_.size() == 1) return NFElem(field_, Rational(1 / c_[0]));
  auto eg = extended_gcd(as_poly(), field_->minpoly());
  return from_poly(field_, eg.s);
}

NFElem& NFElem::operator/=(const NFElem& o) {
  check_same(o);
  return *this *= o.inverse();
}

NFElem operator*(NFElem a, const Rational& b) {
  for (auto& c : a.c_) c *= b;
  return a;
}

NFElem NFElem::operator-() const {
  NFElem r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

NFElem NFElem::pow(unsigned e) const {
  NFElem result(field_, Rational(1)), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

bool operator==(const NFElem& a, const NFElem& b) {
  if (a.field_ != b.field_ && !(a.field_ && b.field_ && a.field_->same_as(*b.field_))) return false;
  return a.c_ == b.c_;
}

RatMatrix NFElem::multiplication_matrix() const {
  const std::size_t n = c_.size();
  RatMatrix m(n, n);
  NFElem basis(field_, Rational(1));
  const NFElem gen = generator(field_);
  for (std::size_t j = 0; j < n; ++j) {
    NFElem col = *this * basis;
    for (std::size_t i = 0; i < n; ++i) m(i, j) = col.c_[i];
    basis *= gen;
  }
  return m;
}

Rational NFElem::norm() const { return multiplication_matrix().determinant(); }
Rational NFElem::trace() const { return multiplication_matrix().trace(); }

std::string NFElem::to_string() const {
  return as_poly().to_string(field_ ? field_->generator_name() : "a");
}

std::size_t NFElem::hash() const {
  std::size_t h = 0x9e3779b97f4a7c15ull;
  for (const auto& c : c_) {
    std::size_t v = std::hash<std::string>{}(c.get_str());
    h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  }
  return h;
}

UniPoly minimal_polynomial(const NFElem& e) {
  note_op(Op::minimal_polynomial);
  if (e.coords().size() == 1 || e.is_rational()) return UniPoly{-e.coords()[0], Rational(1)};
  UniPoly cp = e.multiplication_matrix().charpoly();
  // The characteristic polynomial is a power of the minimal polynomial.
  auto parts = squarefree_decomposition(cp);
  require(parts.size() == 1, ErrorCode::invariant_violation, "charpoly of a field element is not a prime power");
  return parts.front().first;
}

FieldPoly::FieldPoly(FieldPtr field, std::vector<NFElem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

FieldPoly FieldPoly::lift(FieldPtr field, const UniPoly& p) {
  std::vector<NFElem> c;
  for (const auto& v : p.coeffs()) c.emplace_back(field, v);
  return FieldPoly(std::move(field), std::move(c));
}

void FieldPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

FieldPoly FieldPoly::monic() const {
  if (is_zero()) return *this;
  NFElem inv = c_.back().inverse();
  std::vector<NFElem> c = c_;
  for (auto& v : c) v *= inv;
  return FieldPoly(field_, std::move(c));
}

NFElem FieldPoly::operator()(const NFElem& x) const {
  NFElem acc(field_, Rational(0));
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
  return acc;
}

FieldPoly operator*(const FieldPoly& a, const FieldPoly& b) {
  if (a.is_zero() || b.is_zero()) return FieldPoly(a.field_, {});
  std::vector<NFElem> r(a.c_.size() + b.c_.size() - 1, NFElem(a.field_, Rational(0)));
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return FieldPoly(a.field_, std::move(r));
}

FieldPoly operator-(const FieldPoly& a, const FieldPoly& b) {
  const FieldPtr& f = a.field_ ? a.field_ : b.field_;
  std::vector<NFElem> r(std::max(a.c_.size(), b.c_.size()), NFElem(f, Rational(0)));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return FieldPoly(f, std::move(r));
}

std::pair<FieldPoly, FieldPoly> FieldPoly::divmod(const FieldPoly& a, const FieldPoly& b) {
  require(!b.is_zero(), ErrorCode::division_by_zero, "FieldPoly division by zero");
  if (a.degree() < b.degree()) return {FieldPoly(a.field_, {}), a};
  std::vector<NFElem> rem = a.c_;
  const int db = b.degree();
  std::vector<NFElem> quo(static_cast<std::size_t>(a.degree() - db) + 1, NFElem(a.field_, Rational(0)));
  const NFElem inv = b.c_.back().inverse();
  for (int i = a.degree(); i >= db; --i) {
    if (rem[static_cast<std::size_t>(i)].is_zero()) continue;
    NFElem q = rem[static_cast<std::size_t>(i)] * inv;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.c_[static_cast<std::size_t>(j)];
    quo[static_cast<std::size_t>(i - db)] = std::move(q);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {FieldPoly(a.field_, std::move(quo)), FieldPoly(a.field_, std::move(rem))};
}

std::string FieldPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const NFElem& c = c_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    if (!s.empty()) s += " + ";
    s += "(" + c.to_string() + ")";
    if (i > 0) s += "*x" + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return s;
}

FieldPoly gcd(const FieldPoly& a, const FieldPoly& b) {
  FieldPoly x = a, y = b;
  while (!y.is_zero()) {
    FieldPoly r = FieldPoly::divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UniPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
  const std::size_t n = xs.size();
  std::vector<Rational> dd = ys;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = n - 1; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  UniPoly acc;
  for (std::size_t i = n; i-- > 0;) acc = acc * UniPoly{-xs[i], Rational(1)} + UniPoly::constant(dd[i]);
  return acc;
}

namespace {

// p(x + c) over K.
FieldPoly shift(const FieldPoly& p, const NFElem& c) {
  const FieldPtr& k = p.field();
  FieldPoly lin(k, {c, NFElem(k, Rational(1))});
  FieldPoly acc(k, {});
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * lin;
    std::vector<NFElem> coeffs = acc.coeffs();
    if (coeffs.empty()) coeffs.emplace_back(k, Rational(0));
    coeffs[0] += p.coeffs()[static_cast<std::size_t>(i)];
    acc = FieldPoly(k, std::move(coeffs));
  }
  return acc;
}

// Res_y(m(y), g(x - s*y)) as a polynomial in x.
UniPoly shifted_norm(const UniPoly& g, const UniPoly& m, long s) {
  const int degree = g.degree() * m.degree();
  std::vector<Rational> xs, ys;
  for (int i = 0; i <= degree; ++i) {
    Rational x0 = i;
    UniPoly arg{x0, Rational(-s)};
    xs.push_back(x0);
    ys.push_back(resultant(m, g.compose(arg)));
  }
  return interpolate(xs, ys);
}

}  // namespace

std::vector<FieldPoly> factor_over_field(const UniPoly& g, const FieldPtr& field) {
  require(g.degree() >= 1, ErrorCode::invalid_argument, "factor_over_field: degree must be positive");
  if (field->degree() == 1) {
    std::vector<FieldPoly> out;
    for (auto& [f, m] : factor_unipoly(g).factors) out.push_back(FieldPoly::lift(field, f).monic());
    return out;
  }
  const NFElem alpha = NFElem::generator(field);
  for (long s : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, 5L, 7L, 11L}) {
    UniPoly norm = shifted_norm(g, field->minpoly(), s);
    if (gcd(norm, norm.derivative()).degree() > 0) continue;
    NFElem shift_by = alpha * Rational(-s);
    FieldPoly gk = shift(FieldPoly::lift(field, g), shift_by);  // g(x - s*alpha)
    std::vector<FieldPoly> out;
    for (auto& [f, m] : factor_unipoly(norm).factors) {
      FieldPoly h = gcd(gk, FieldPoly::lift(field, f));
      if (h.degree() < 1) continue;
      out.push_back(shift(h, alpha * Rational(s)).monic());
    }
    return out;
  }
  fail(ErrorCode::invariant_violation, "factor_over_field: no squarefree norm found");
}

std::vector<NFElem> roots_in_field(const UniPoly& g, const FieldPtr& field) {
  std::vector<NFElem> roots;
  UniPoly sf;
  {
    UniPoly acc = UniPoly::constant(1);
    for (auto& [part, m] : squarefree_decomposition(g)) acc *= part;
    sf = acc;
  }
  if (sf.degree() < 1) return roots;
  for (auto& f : factor_over_field(sf, field))
    if (f.degree() == 1) roots.push_back(-f.coeffs()[0]);
  return roots;
}

bool field_contains_root(const FieldPtr& field, const UniPoly& g) { return !roots_in_field(g, field).empty(); }

}  // namespace symprod

#include "symprod/arith/upoly.hpp"

#include <algorithm>

#include "symprod/errors.hpp"

namespace symprod {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : c_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, int degree) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return UniPoly(std::move(v));
}

UniPoly UniPoly::from_integers(const std::vector<Integer>& coeffs) {
  std::vector<Rational> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.emplace_back(c);
  return UniPoly(std::move(v));
}

void UniPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return c_[static_cast<std::size_t>(i)];
}

const Rational& UniPoly::lead() const {
  require(!c_.empty(), ErrorCode::invalid_argument, "leading coefficient of zero polynomial");
  return c_.back();
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(r));
}

UniPoly& UniPoly::operator*=(const UniPoly& o) { return *this = *this * o; }

UniPoly& UniPoly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& c : c_) c *= s;
  return *this;
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& a, const UniPoly& b) {
  require(!b.is_zero(), ErrorCode::division_by_zero, "polynomial division by zero");
  if (a.degree() < b.degree()) return {UniPoly{}, a};
  std::vector<Rational> rem = a.c_;
  const int db = b.degree();
  std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - db) + 1);
  const Rational inv_lead = 1 / b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const Rational& top = rem[static_cast<std::size_t>(i)];
    if (top == 0) continue;
    Rational q = top * inv_lead;
    quo[static_cast<std::size_t>(i - db)] = q;
    for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= q * b.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(db));
  return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

UniPoly UniPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Rational> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return UniPoly(std::move(r));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * Rational(1 / lead());
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result = constant(1), base = *this;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

UniPoly UniPoly::compose(const UniPoly& g) const {
  UniPoly acc;
  for (int i = degree(); i >= 0; --i) acc = acc * g + constant(c_[static_cast<std::size_t>(i)]);
  return acc;
}

Rational UniPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (int i = degree(); i >= 0; --i) acc = acc * x + c_[static_cast<std::size_t>(i)];
  return acc;
}

std::pair<Rational, UniPoly> UniPoly::content_primitive() const {
  if (is_zero()) return {Rational(0), UniPoly{}};
  Integer den_lcm = 1, num_gcd = 0;
  for (const auto& c : c_) den_lcm = lcm(den_lcm, c.get_den());
  for (const auto& c : c_) {
    if (c == 0) continue;
    Integer v = c.get_num() * (den_lcm / c.get_den());
    num_gcd = gcd(num_gcd, v);
  }
  Rational content = make_rational(num_gcd, den_lcm);
  if (lead() < 0) content = -content;
  std::vector<Rational> prim;
  prim.reserve(c_.size());
  for (const auto& c : c_) prim.emplace_back(c / content);
  return {content, UniPoly(std::move(prim))};
}

std::vector<Integer> UniPoly::integer_coeffs() const {
  std::vector<Integer> out;
  out.reserve(c_.size());
  for (const auto& c : c_) {
    require(c.get_den() == 1, ErrorCode::invalid_argument, "polynomial is not integral");
    out.push_back(c.get_num());
  }
  return out;
}

std::string UniPoly::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (s.empty()) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (i == 0 || !unit) s += symprod::to_string(mag);
    if (i > 0) {
      if (!unit) s += "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a, y = b;
  while (!y.is_zero()) {
    UniPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ExtendedGcd extended_gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly r0 = a, r1 = b, s0 = UniPoly::constant(1), s1, t0, t1 = UniPoly::constant(1);
  while (!r1.is_zero()) {
    auto [q, r] = UniPoly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UniPoly s2 = s0 - q * s1;
    UniPoly t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {UniPoly{}, UniPoly{}, UniPoly{}};
  Rational inv = 1 / r0.lead();
  return {r0 * inv, s0 * inv, t0 * inv};
}

Rational resultant(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return 0;
  UniPoly f = a, g = b;
  Rational res = 1;
  while (true) {
    const int df = f.degree(), dg = g.degree();
    if (dg == 0) {
      Rational lg = g.lead();
      Rational p = 1;
      for (int i = 0; i < df; ++i) p *= lg;
      return res * p;
    }
    if (df == 0 && dg > 0) {
      Rational lf = f.lead();
      Rational p = 1;
      for (int i = 0; i < dg; ++i) p *= lf;
      return res * p;
    }
    UniPoly r = f % g;
    if (r.is_zero()) return 0;
    // Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
    const int dr = r.degree();
    if ((df % 2 == 1) && (dg % 2 == 1)) res = -res;
    Rational lg = g.lead();
    for (int i = 0; i < df - dr; ++i) res *= lg;
    f = std::move(g);
    g = std::move(r);
  }
}

std::vector<std::pair<UniPoly, unsigned>> squarefree_decomposition(const UniPoly& p) {
  std::vector<std::pair<UniPoly, unsigned>> out;
  if (p.degree() <= 0) return out;
  UniPoly f = p.monic();
  UniPoly df = f.derivative();
  UniPoly a = gcd(f, df);
  UniPoly b = f / a;
  UniPoly c = df / a;
  UniPoly d = c - b.derivative();
  unsigned i = 1;
  while (b.degree() > 0) {
    UniPoly g = gcd(b, d);
    b = b / g;
    c = d / g;
    if (g.degree() > 0) out.emplace_back(g.monic(), i);
    d = c - b.derivative();
    ++i;
  }
  return out;
}

}  // namespace symprod

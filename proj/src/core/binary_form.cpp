#include "symprod/core/binary_form.hpp"

#include "symprod/arith/matrix.hpp"
#include "symprod/errors.hpp"

namespace symprod {

BinaryForm::BinaryForm(int degree, std::vector<Rational> ascending) : degree_(degree), c_(std::move(ascending)) {
  require(degree >= 0, ErrorCode::invalid_argument, "binary form: negative degree");
  require(c_.size() <= static_cast<std::size_t>(degree) + 1, ErrorCode::invalid_argument,
          "binary form: more coefficients than degree allows");
  c_.resize(static_cast<std::size_t>(degree) + 1);
}

BinaryForm BinaryForm::homogenize(const UniPoly& p, int degree) {
  require(p.degree() <= degree, ErrorCode::invalid_argument, "homogenize: degree too small");
  return BinaryForm(degree, p.coeffs());
}

bool BinaryForm::is_zero() const {
  for (const auto& c : c_)
    if (c != 0) return false;
  return true;
}

int BinaryForm::infinity_multiplicity() const { return degree_ - dehomogenize().degree(); }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  std::vector<Rational> r(static_cast<std::size_t>(a.degree_ + b.degree_) + 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  }
  return BinaryForm(a.degree_ + b.degree_, std::move(r));
}

BinaryForm operator+(const BinaryForm& a, const BinaryForm& b) {
  require(a.degree_ == b.degree_, ErrorCode::invalid_argument, "adding forms of different degree");
  BinaryForm r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
  return r;
}

BinaryForm operator-(const BinaryForm& a, const BinaryForm& b) {
  require(a.degree_ == b.degree_, ErrorCode::invalid_argument, "subtracting forms of different degree");
  BinaryForm r = a;
  for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] -= b.c_[i];
  return r;
}

BinaryForm operator*(BinaryForm a, const Rational& s) {
  for (auto& c : a.c_) c *= s;
  return a;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm result(0, {Rational(1)}), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

BinaryForm BinaryForm::derivative_x() const {
  if (degree_ == 0) return BinaryForm(0, {});
  std::vector<Rational> r(static_cast<std::size_t>(degree_));
  for (int i = 1; i <= degree_; ++i) r[static_cast<std::size_t>(i - 1)] = c_[static_cast<std::size_t>(i)] * i;
  return BinaryForm(degree_ - 1, std::move(r));
}

BinaryForm BinaryForm::derivative_y() const {
  if (degree_ == 0) return BinaryForm(0, {});
  std::vector<Rational> r(static_cast<std::size_t>(degree_));
  for (int i = 0; i < degree_; ++i) r[static_cast<std::size_t>(i)] = c_[static_cast<std::size_t>(i)] * (degree_ - i);
  return BinaryForm(degree_ - 1, std::move(r));
}

BinaryForm BinaryForm::compose(const BinaryForm& p, const BinaryForm& q) const {
  require(p.degree_ == q.degree_, ErrorCode::invalid_argument, "compose: forms of different degree");
  const int n = degree_ * p.degree_;
  BinaryForm acc(n, {});
  std::vector<BinaryForm> ppow{BinaryForm(0, {Rational(1)})}, qpow{BinaryForm(0, {Rational(1)})};
  for (int i = 1; i <= degree_; ++i) {
    ppow.push_back(ppow.back() * p);
    qpow.push_back(qpow.back() * q);
  }
  for (int i = 0; i <= degree_; ++i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    acc = acc + ppow[static_cast<std::size_t>(i)] * qpow[static_cast<std::size_t>(degree_ - i)] * c;
  }
  return acc;
}

BinaryForm BinaryForm::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1, num = 0;
  for (const auto& c : c_) den = lcm(den, c.get_den());
  for (const auto& c : c_) num = gcd(num, Integer(c.get_num() * (den / c.get_den())));
  Rational scale = make_rational(den, num);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it)
    if (*it != 0) {
      if (*it < 0) scale = -scale;
      break;
    }
  return *this * scale;
}

std::string BinaryForm::to_string(const std::string& x, const std::string& y) const {
  std::string s;
  for (int i = degree_; i >= 0; --i) {
    const Rational& c = c_[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    Rational mag = c < 0 ? Rational(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    const int j = degree_ - i;
    std::string mono;
    auto add = [&](const std::string& v, int e) {
      if (e == 0) return;
      if (!mono.empty()) mono += "*";
      mono += v;
      if (e > 1) mono += "^" + std::to_string(e);
    };
    add(x, i);
    add(y, j);
    if (mono.empty())
      s += symprod::to_string(mag);
    else if (mag == 1)
      s += mono;
    else
      s += symprod::to_string(mag) + "*" + mono;
  }
  return s.empty() ? "0" : s;
}

Rational resultant(const BinaryForm& a, const BinaryForm& b) {
  const int m = a.degree(), n = b.degree();
  const std::size_t size = static_cast<std::size_t>(m + n);
  if (size == 0) return 1;
  RatMatrix s(size, size);
  // Coefficients listed from the top X-degree down.
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= m; ++i) s(static_cast<std::size_t>(r), static_cast<std::size_t>(r + i)) = a.coeff(m - i);
  for (int r = 0; r < m; ++r)
    for (int i = 0; i <= n; ++i) s(static_cast<std::size_t>(n + r), static_cast<std::size_t>(r + i)) = b.coeff(n - i);
  return s.determinant();
}

RationalMap1::RationalMap1(BinaryForm p, BinaryForm q) {
  if (p.degree() != q.degree()) fail(ErrorCode::degenerate_map, "map components have different degrees");
  if (p.degree() < 2) fail(ErrorCode::degenerate_map, "map degree must be at least 2");
  if (symprod::resultant(p, q) == 0) fail(ErrorCode::degenerate_map, "components share a root (zero resultant)");
  // Common primitive scaling of both components.
  Integer den = 1, num = 0;
  for (const auto* f : {&p, &q})
    for (const auto& c : f->coeffs()) den = lcm(den, c.get_den());
  for (const auto* f : {&p, &q})
    for (const auto& c : f->coeffs()) num = gcd(num, Integer(c.get_num() * (den / c.get_den())));
  Rational scale = make_rational(den, num);
  for (int i = p.degree(); i >= 0; --i)
    if (p.coeff(i) != 0) {
      if (p.coeff(i) < 0) scale = -scale;
      break;
    }
  p_ = p * scale;
  q_ = q * scale;
}

RationalMap1 RationalMap1::polynomial(const UniPoly& p) {
  const int d = p.degree();
  return RationalMap1(BinaryForm::homogenize(p, d), BinaryForm(d, std::vector<Rational>{Rational(1)}));
}

bool RationalMap1::is_polynomial() const {
  for (int i = 1; i <= q_.degree(); ++i)
    if (q_.coeff(i) != 0) return false;
  return true;
}

std::pair<BinaryForm, BinaryForm> RationalMap1::iterate_lift(unsigned n) const {
  BinaryForm pn(1, {Rational(0), Rational(1)}), qn(1, {Rational(1), Rational(0)});
  for (unsigned i = 0; i < n; ++i) {
    BinaryForm a = p_.compose(pn, qn);
    BinaryForm b = q_.compose(pn, qn);
    pn = std::move(a);
    qn = std::move(b);
  }
  return {pn, qn};
}

BinaryForm RationalMap1::wronskian() const {
  return p_.derivative_x() * q_.derivative_y() - p_.derivative_y() * q_.derivative_x();
}

std::string RationalMap1::to_string() const { return "[" + p_.to_string() + " : " + q_.to_string() + "]"; }

}  // namespace symprod

#include "symprod/core/projective.hpp"

#include "symprod/errors.hpp"
#include "symprod/op_trace.hpp"

namespace symprod {

PkPoint::PkPoint(std::vector<Integer> coords) : c_(std::move(coords)) {
  require(c_.size() >= 2, ErrorCode::invalid_argument, "projective point needs at least two coordinates");
  Integer g = 0;
  for (const auto& c : c_) g = gcd(g, c);
  require(g != 0, ErrorCode::invalid_argument, "projective point with all coordinates zero");
  for (const auto& c : c_)
    if (c != 0) {
      if (c < 0) g = -g;
      break;
    }
  if (g != 1)
    for (auto& c : c_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

PkPoint PkPoint::from_rationals(const std::vector<Rational>& coords) {
  Integer den = 1;
  for (const auto& c : coords) den = lcm(den, c.get_den());
  std::vector<Integer> v;
  v.reserve(coords.size());
  for (const auto& c : coords) v.push_back(c.get_num() * (den / c.get_den()));
  return PkPoint(std::move(v));
}

std::vector<Rational> PkPoint::rational_coords() const {
  std::vector<Rational> r;
  r.reserve(c_.size());
  for (const auto& c : c_) r.emplace_back(c);
  return r;
}

Rational PkPoint::affine_value() const {
  require(c_.size() == 2 && c_[1] != 0, ErrorCode::invalid_argument, "affine_value: not a finite point of P^1");
  return make_rational(c_[0], c_[1]);
}

std::size_t PkPoint::hash() const {
  std::size_t h = 1469598103934665603ull;
  for (const auto& c : c_) {
    std::size_t limb = mpz_size(c.get_mpz_t()) ? mpz_getlimbn(c.get_mpz_t(), 0) : 0;
    h ^= limb + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h ^= static_cast<std::size_t>(mpz_sgn(c.get_mpz_t()) + 1) * 0x100000001b3ull;
  }
  return h;
}

std::string PkPoint::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += c_[i].get_str();
  }
  return s + ")";
}

MorphismPk::MorphismPk(std::vector<MPoly> components) : comps_(std::move(components)) {
  require(comps_.size() >= 2, ErrorCode::invalid_argument, "morphism needs at least two components");
  const std::size_t nv = comps_.size();
  degree_ = -1;
  for (const auto& c : comps_) {
    require(c.nvars() == nv, ErrorCode::invalid_argument, "morphism component has wrong variable count");
    require(c.is_homogeneous(), ErrorCode::invalid_argument, "morphism component is not homogeneous");
    if (c.is_zero()) continue;
    if (degree_ < 0) degree_ = c.degree();
    require(c.degree() == degree_, ErrorCode::invalid_argument, "morphism components differ in degree");
  }
  require(degree_ >= 0, ErrorCode::invalid_argument, "morphism with all components zero");
}

std::vector<Integer> MorphismPk::apply_lift(const std::vector<Integer>& x) const {
  std::vector<Integer> out;
  out.reserve(comps_.size());
  for (const auto& c : comps_) out.push_back(c.eval_integer(x));
  return out;
}

PkPoint MorphismPk::apply(const PkPoint& p) const {
  note_op(Op::apply);
  require(p.size() == comps_.size(), ErrorCode::invalid_argument, "apply: point dimension differs from morphism");
  std::vector<Integer> out;
  if (integral()) {
    out = apply_lift(p.coords());
  } else {
    std::vector<Rational> x = p.rational_coords();
    std::vector<Rational> vals;
    for (const auto& c : comps_) vals.push_back(c(x));
    Integer den = 1;
    for (const auto& v : vals) den = lcm(den, v.get_den());
    for (const auto& v : vals) out.push_back(v.get_num() * (den / v.get_den()));
  }
  for (const auto& v : out)
    if (v != 0) return PkPoint(std::move(out));
  fail(ErrorCode::invariant_violation, "all components vanish at " + p.to_string());
}

PkPoint MorphismPk::iterate(const PkPoint& p, unsigned n) const {
  PkPoint q = p;
  for (unsigned i = 0; i < n; ++i) q = apply(q);
  return q;
}

bool MorphismPk::integral() const {
  for (const auto& c : comps_)
    for (const auto& [m, v] : c.terms())
      if (v.get_den() != 1) return false;
  return true;
}

MorphismPk MorphismPk::normalized() const {
  Integer den = 1, num = 0;
  for (const auto& c : comps_)
    for (const auto& [m, v] : c.terms()) den = lcm(den, v.get_den());
  for (const auto& c : comps_)
    for (const auto& [m, v] : c.terms()) num = gcd(num, Integer(v.get_num() * (den / v.get_den())));
  Rational scale = make_rational(den, num);
  for (auto it = comps_.rbegin(); it != comps_.rend(); ++it)
    if (!it->is_zero()) {
      if (it->terms().rbegin()->second < 0) scale = -scale;
      break;
    }
  std::vector<MPoly> out;
  for (const auto& c : comps_) out.push_back(c * scale);
  return MorphismPk(std::move(out));
}

std::string MorphismPk::serialize() const {
  std::string s;
  for (const auto& c : comps_) s += c.serialize() + "\n";
  return s;
}

std::string MorphismPk::pretty(const std::string& var) const {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < comps_.size(); ++i) names.push_back(var + std::to_string(i));
  std::string s = "[";
  for (std::size_t i = 0; i < comps_.size(); ++i) {
    if (i) s += " : ";
    s += comps_[i].pretty(names);
  }
  return s + "]";
}

}  // namespace symprod

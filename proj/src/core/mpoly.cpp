#include "symprod/core/mpoly.hpp"

#include <cctype>
#include <numeric>

#include "symprod/errors.hpp"

namespace symprod {

unsigned total_degree(const Monomial& m) { return std::accumulate(m.begin(), m.end(), 0u); }

bool DegRevLexGreater::operator()(const Monomial& a, const Monomial& b) const {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  for (std::size_t i = a.size(); i-- > 0;)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

MPoly MPoly::constant(std::size_t nvars, const Rational& c) {
  MPoly p(nvars);
  p.add_term(Monomial(nvars, 0), c);
  return p;
}

MPoly MPoly::variable(std::size_t nvars, std::size_t i) {
  Monomial m(nvars, 0);
  m.at(i) = 1;
  return monomial(m, 1);
}

MPoly MPoly::monomial(const Monomial& m, const Rational& c) {
  MPoly p(m.size());
  p.add_term(m, c);
  return p;
}

Rational MPoly::coeff(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

int MPoly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, static_cast<int>(total_degree(m)));
  return d;
}

bool MPoly::is_homogeneous() const {
  if (terms_.empty()) return true;
  unsigned d = total_degree(terms_.begin()->first);
  for (const auto& [m, c] : terms_)
    if (total_degree(m) != d) return false;
  return true;
}

void MPoly::add_term(const Monomial& m, const Rational& c) {
  require(m.size() == nvars_, ErrorCode::invalid_argument, "MPoly: monomial length differs from variable count");
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  if (nvars_ == 0 && terms_.empty()) nvars_ = o.nvars_;
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly& MPoly::operator*=(const Rational& s) {
  if (s == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= s;
  return *this;
}

MPoly operator*(const MPoly& a, const MPoly& b) {
  MPoly r(std::max(a.nvars_, b.nvars_));
  Monomial m(r.nvars_);
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
      r.add_term(m, ca * cb);
    }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

MPoly MPoly::pow(unsigned e) const {
  MPoly result = constant(nvars_, 1), base = *this;
  while (e) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e) base = base * base;
  }
  return result;
}

MPoly MPoly::derivative(std::size_t var) const {
  MPoly r(nvars_);
  for (const auto& [m, c] : terms_) {
    if (m[var] == 0) continue;
    Monomial n = m;
    --n[var];
    r.add_term(n, c * m[var]);
  }
  return r;
}

Rational MPoly::operator()(const std::vector<Rational>& x) const {
  Rational acc = 0;
  for (const auto& [m, c] : terms_) {
    Rational t = c;
    for (std::size_t i = 0; i < m.size(); ++i)
      for (unsigned e = 0; e < m[i]; ++e) t *= x[i];
    acc += t;
  }
  return acc;
}

Integer MPoly::eval_integer(const std::vector<Integer>& x) const {
  Integer acc = 0;
  Integer t;
  for (const auto& [m, c] : terms_) {
    require(c.get_den() == 1, ErrorCode::invalid_argument, "eval_integer: non-integral coefficient");
    t = c.get_num();
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) {
        Integer pw;
        mpz_pow_ui(pw.get_mpz_t(), x[i].get_mpz_t(), m[i]);
        t *= pw;
      }
    acc += t;
  }
  return acc;
}

MPoly MPoly::compose(const std::vector<MPoly>& subs) const {
  require(subs.size() == nvars_, ErrorCode::invalid_argument, "MPoly::compose: wrong substitution count");
  std::size_t target = subs.empty() ? 0 : subs.front().nvars();
  MPoly acc(target);
  // cache powers per variable
  std::vector<std::vector<MPoly>> powers(nvars_);
  for (const auto& [m, c] : terms_) {
    MPoly t = constant(target, c);
    for (std::size_t i = 0; i < nvars_; ++i) {
      if (m[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(constant(target, 1));
      while (pw.size() <= m[i]) pw.push_back(pw.back() * subs[i]);
      t = t * pw[m[i]];
    }
    acc += t;
  }
  return acc;
}

std::string MPoly::serialize() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    if (!s.empty()) s += " + ";
    s += to_string(c);
    for (std::size_t i = 0; i < m.size(); ++i)
      if (m[i]) s += "*x" + std::to_string(i) + "^" + std::to_string(m[i]);
  }
  return s;
}

MPoly MPoly::parse(std::string_view text, std::size_t nvars) {
  MPoly p(nvars);
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto number = [&]() -> std::string {
    std::size_t start = i;
    if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
    while (i < text.size() && (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/')) ++i;
    if (i == start) throw ParseError(i, "expected coefficient");
    return std::string(text.substr(start, i - start));
  };
  skip();
  if (text.substr(i) == "0") return p;
  while (true) {
    skip();
    Rational c;
    std::size_t cpos = i;
    std::string num = number();
    try {
      c = parse_rational(num);
    } catch (const ParseError&) {
      throw ParseError(cpos, "malformed coefficient");
    }
    Monomial m(nvars, 0);
    while (i < text.size() && text[i] == '*') {
      ++i;
      if (i >= text.size() || text[i] != 'x') throw ParseError(i, "expected variable x<i>");
      ++i;
      std::size_t vstart = i;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (vstart == i) throw ParseError(i, "expected variable index");
      std::size_t var = std::stoul(std::string(text.substr(vstart, i - vstart)));
      if (var >= nvars) throw ParseError(vstart, "variable index out of range");
      unsigned e = 1;
      if (i < text.size() && text[i] == '^') {
        ++i;
        std::size_t estart = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (estart == i) throw ParseError(i, "expected exponent");
        e = static_cast<unsigned>(std::stoul(std::string(text.substr(estart, i - estart))));
      }
      m[var] += e;
    }
    p.add_term(m, c);
    skip();
    if (i == text.size()) break;
    if (text[i] != '+') throw ParseError(i, "expected '+' between terms");
    ++i;
  }
  return p;
}

std::string MPoly::pretty(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [m, c] : terms_) {
    Rational mag = c < 0 ? Rational(-c) : c;
    if (s.empty())
      s += c < 0 ? "-" : "";
    else
      s += c < 0 ? " - " : " + ";
    bool constant_term = total_degree(m) == 0;
    bool first = true;
    if (mag != 1 || constant_term) {
      s += to_string(mag);
      first = false;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (!m[i]) continue;
      if (!first) s += "*";
      s += names.at(i);
      if (m[i] > 1) s += "^" + std::to_string(m[i]);
      first = false;
    }
  }
  return s;
}

}  // namespace symprod

#include "symprod/arith/modpoly.hpp"

#include <algorithm>

#include "symprod/errors.hpp"
#include "symprod/kernels/modp.hpp"

namespace symprod {

std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1 % p, b = a % p;
  while (e) {
    if (e & 1u) r = r * b % p;
    b = b * b % p;
    e >>= 1u;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::int64_t t = 0, nt = 1, r = p, nr = a % p;
  require(nr != 0, ErrorCode::division_by_zero, "inverse of zero modulo p");
  while (nr) {
    std::int64_t q = r / nr;
    std::tie(t, nt) = std::make_pair(nt, t - q * nt);
    std::tie(r, nr) = std::make_pair(nr, r - q * nr);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

ModPoly::ModPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs) : p_(p), c_(std::move(coeffs)) {
  require(p >= 2 && p < kernels::max_modulus, ErrorCode::invalid_argument, "ModPoly: modulus out of range");
  for (auto& c : c_) c %= p_;
  trim();
}

ModPoly ModPoly::reduce(const std::vector<Integer>& coeffs, std::uint32_t p) {
  std::vector<std::uint32_t> v;
  v.reserve(coeffs.size());
  for (const auto& c : coeffs) v.push_back(static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_mpz_t(), p)));
  return ModPoly(p, std::move(v));
}

ModPoly ModPoly::reduce(const UniPoly& f, std::uint32_t p) {
  std::vector<std::uint32_t> v;
  v.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    auto num = static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_num_mpz_t(), p));
    auto den = static_cast<std::uint32_t>(mpz_fdiv_ui(c.get_den_mpz_t(), p));
    require(den != 0, ErrorCode::division_by_zero, "denominator vanishes modulo p");
    v.push_back(static_cast<std::uint32_t>(std::uint64_t(num) * inv_mod(den, p) % p));
  }
  return ModPoly(p, std::move(v));
}

void ModPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

ModPoly& ModPoly::operator+=(const ModPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) {
    std::uint32_t s = c_[i] + o.c_[i];
    c_[i] = s >= p_ ? s - p_ : s;
  }
  trim();
  return *this;
}

ModPoly& ModPoly::operator-=(const ModPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] >= o.c_[i] ? c_[i] - o.c_[i] : c_[i] + p_ - o.c_[i];
  trim();
  return *this;
}

ModPoly operator*(const ModPoly& a, const ModPoly& b) {
  if (a.is_zero() || b.is_zero()) return ModPoly(a.p_);
  std::vector<std::uint32_t> r(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    if (a.c_[i]) kernels::axpy_mod(r.data() + i, b.c_.data(), b.c_.size(), a.c_[i], a.p_);
  return ModPoly(a.p_, std::move(r));
}

ModPoly ModPoly::scaled(std::uint32_t s) const {
  ModPoly r = *this;
  kernels::scale_mod(r.c_.data(), r.c_.size(), s % p_, p_);
  r.trim();
  return r;
}

std::pair<ModPoly, ModPoly> ModPoly::divmod(const ModPoly& a, const ModPoly& b) {
  require(!b.is_zero(), ErrorCode::division_by_zero, "ModPoly division by zero");
  const std::uint32_t p = a.p_;
  if (a.degree() < b.degree()) return {ModPoly(p), a};
  std::vector<std::uint32_t> rem = a.c_;
  const int db = b.degree();
  std::vector<std::uint32_t> quo(static_cast<std::size_t>(a.degree() - db) + 1, 0);
  const std::uint32_t inv = inv_mod(b.lead(), p);
  for (int i = a.degree(); i >= db; --i) {
    std::uint32_t top = rem[static_cast<std::size_t>(i)];
    if (!top) continue;
    auto q = static_cast<std::uint32_t>(std::uint64_t(top) * inv % p);
    quo[static_cast<std::size_t>(i - db)] = q;
    kernels::axpy_mod(rem.data() + (i - db), b.c_.data(), b.c_.size(), p - q, p);
  }
  rem.resize(static_cast<std::size_t>(db));
  return {ModPoly(p, std::move(quo)), ModPoly(p, std::move(rem))};
}

ModPoly ModPoly::monic() const {
  if (is_zero()) return *this;
  return scaled(inv_mod(lead(), p_));
}

ModPoly ModPoly::derivative() const {
  if (c_.size() <= 1) return ModPoly(p_);
  std::vector<std::uint32_t> r(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = static_cast<std::uint32_t>(std::uint64_t(c_[i]) * (i % p_) % p_);
  return ModPoly(p_, std::move(r));
}

std::uint32_t ModPoly::operator()(std::uint32_t x) const {
  std::uint64_t acc = 0;
  for (int i = degree(); i >= 0; --i) acc = (acc * x + c_[static_cast<std::size_t>(i)]) % p_;
  return static_cast<std::uint32_t>(acc);
}

ModPoly ModPoly::powmod(const Integer& e, const ModPoly& m) const {
  ModPoly result = constant(p_, 1) % m, base = *this % m;
  const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  if (e == 0) return result;
  for (std::size_t i = bits; i-- > 0;) {
    result = (result * result) % m;
    if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * base) % m;
  }
  return result;
}

std::string ModPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (int i = degree(); i >= 0; --i) {
    std::uint32_t c = c_[static_cast<std::size_t>(i)];
    if (!c) continue;
    if (!s.empty()) s += " + ";
    if (c != 1 || i == 0) s += std::to_string(c);
    if (i > 0) s += (c != 1 ? "*x" : "x") + (i > 1 ? "^" + std::to_string(i) : std::string());
  }
  return s;
}

ModPoly gcd(const ModPoly& a, const ModPoly& b) {
  ModPoly x = a, y = b;
  while (!y.is_zero()) {
    ModPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

ModExtendedGcd extended_gcd(const ModPoly& a, const ModPoly& b) {
  const std::uint32_t p = a.modulus();
  ModPoly r0 = a, r1 = b, s0 = ModPoly::constant(p, 1), s1(p), t0(p), t1 = ModPoly::constant(p, 1);
  while (!r1.is_zero()) {
    auto [q, r] = ModPoly::divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    ModPoly s2 = s0 - q * s1, t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  std::uint32_t inv = inv_mod(r0.lead(), p);
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f_in) {
  const std::uint32_t p = f_in.modulus();
  std::vector<std::pair<ModPoly, int>> out;
  ModPoly f = f_in.monic();
  const ModPoly x = ModPoly::x(p);
  ModPoly h = x % f;
  for (int d = 1; 2 * d <= f.degree(); ++d) {
    h = h.powmod(p, f);
    ModPoly g = gcd(h - x, f);
    if (g.degree() > 0) {
      out.emplace_back(g, d);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) out.emplace_back(f, f.degree());
  return out;
}

namespace {

ModPoly random_poly(std::uint32_t p, int below_degree, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
  std::vector<std::uint32_t> c(static_cast<std::size_t>(below_degree));
  for (auto& v : c) v = dist(rng);
  return ModPoly(p, std::move(c));
}

}  // namespace

std::vector<ModPoly> equal_degree_factor(const ModPoly& f, int d, std::mt19937_64& rng) {
  if (f.degree() <= d) return {f.monic()};
  const std::uint32_t p = f.modulus();
  const Integer q = pow(Integer(p), static_cast<unsigned long>(d));
  while (true) {
    ModPoly a = random_poly(p, f.degree(), rng);
    if (a.degree() < 1) continue;
    ModPoly b(p);
    if (p == 2) {
      // Trace map a + a^2 + ... + a^(2^(md-1)) works in characteristic 2.
      ModPoly t = a % f;
      b = t;
      for (int i = 1; i < d; ++i) {
        t = (t * t) % f;
        b += t;
      }
    } else {
      b = a.powmod(Integer((q - 1) / 2), f) - ModPoly::constant(p, 1);
    }
    ModPoly g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      auto left = equal_degree_factor(g, d, rng);
      auto right = equal_degree_factor(f / g, d, rng);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
  }
}

std::vector<ModPoly> factor_squarefree_mod(const ModPoly& f, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  for (auto& [g, d] : distinct_degree_factor(f)) {
    auto parts = equal_degree_factor(g, d, rng);
    out.insert(out.end(), parts.begin(), parts.end());
  }
  std::sort(out.begin(), out.end(), [](const ModPoly& a, const ModPoly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().rbegin(), a.coeffs().rend(), b.coeffs().rbegin(), b.coeffs().rend());
  });
  return out;
}

bool is_irreducible_mod(const ModPoly& f) {
  if (f.degree() < 1) return false;
  if (f.degree() == 1) return true;
  ModPoly m = f.monic();
  if (gcd(m, m.derivative()).degree() > 0) return false;
  auto ddf = distinct_degree_factor(m);
  return ddf.size() == 1 && ddf.front().second == m.degree();
}

}  // namespace symprod

#include "symprod/arith/finite_field.hpp"

#include "symprod/errors.hpp"

namespace symprod {

namespace {

std::vector<std::uint32_t> digits(std::uint32_t a, std::uint32_t p, unsigned e) {
  std::vector<std::uint32_t> d(e);
  for (unsigned i = 0; i < e; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t a = 0;
  for (std::size_t i = d.size(); i-- > 0;) a = a * p + d[i];
  return a;
}

}  // namespace

GaloisField::GaloisField(std::uint32_t p, unsigned e) : p_(p), e_(e) {
  require(e >= 1 && p >= 2, ErrorCode::invalid_argument, "GaloisField: need p >= 2, e >= 1");
  require(is_prime(Integer(p)), ErrorCode::invalid_argument, "GaloisField: characteristic must be prime");
  std::uint64_t q = 1;
  for (unsigned i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order) fail(ErrorCode::budget_exceeded, "GaloisField: order exceeds table budget");
  }
  q_ = static_cast<std::uint32_t>(q);

  if (e == 1) {
    modulus_ = ModPoly(p, {0, 1});
  } else {
    // first monic irreducible of degree e in digit order
    for (std::uint32_t tail = 0;; ++tail) {
      std::vector<std::uint32_t> c = digits(tail, p, e);
      c.push_back(1);
      ModPoly m(p, c);
      if (is_irreducible_mod(m)) {
        modulus_ = m;
        break;
      }
    }
  }

  // find a generator of the multiplicative group
  std::vector<std::uint32_t> prime_factors;
  for (const auto& pp : factor_integer(Integer(q_ - 1)))
    prime_factors.push_back(static_cast<std::uint32_t>(pp.prime.get_ui()));
  auto power = [&](Elem a, std::uint64_t n) {
    Elem r = 1, b = a;
    while (n) {
      if (n & 1) r = poly_mul(r, b);
      b = poly_mul(b, b);
      n >>= 1;
    }
    return r;
  };
  Elem gen = 1;
  if (q_ > 2) {
    for (Elem g = 2; g < q_; ++g) {
      bool ok = true;
      for (auto r : prime_factors)
        if (power(g, (q_ - 1) / r) == 1) {
          ok = false;
          break;
        }
      if (ok) {
        gen = g;
        break;
      }
    }
  }
  exp_.resize(2 * static_cast<std::size_t>(q_ - 1) + 1);
  log_.assign(q_, 0);
  Elem cur = 1;
  for (std::uint32_t i = 0; i + 1 < q_; ++i) {
    exp_[i] = cur;
    log_[cur] = i;
    cur = poly_mul(cur, gen);
  }
  for (std::size_t i = q_ - 1; i < exp_.size(); ++i) exp_[i] = exp_[i - (q_ - 1)];
}

GaloisField::Elem GaloisField::poly_mul(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>(std::uint64_t(a) * b % p_);
  ModPoly pa(p_, digits(a, p_, e_)), pb(p_, digits(b, p_, e_));
  ModPoly r = (pa * pb) % modulus_;
  std::vector<std::uint32_t> d(e_, 0);
  for (int i = 0; i <= r.degree(); ++i) d[static_cast<std::size_t>(i)] = r.coeff(i);
  return undigits(d, p_);
}

GaloisField::Elem GaloisField::add(Elem a, Elem b) const {
  if (e_ == 1) return (a + b) % p_;
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((a % p_ + b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::sub(Elem a, Elem b) const {
  if (e_ == 1) return (a + p_ - b) % p_;
  Elem r = 0, place = 1;
  for (unsigned i = 0; i < e_; ++i) {
    r += ((a % p_ + p_ - b % p_) % p_) * place;
    a /= p_;
    b /= p_;
    place *= p_;
  }
  return r;
}

GaloisField::Elem GaloisField::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[std::size_t(log_[a]) + log_[b]];
}

GaloisField::Elem GaloisField::inv(Elem a) const {
  require(a != 0, ErrorCode::division_by_zero, "GaloisField: inverse of zero");
  return exp_[(q_ - 1 - log_[a]) % (q_ - 1)];
}

GaloisField::Elem GaloisField::from_integer(const Integer& n) const {
  Integer r = n % Integer(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r.get_ui());
}

}  // namespace symprod

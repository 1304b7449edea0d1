#include "symprod/arith/integer.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "symprod/errors.hpp"
#include "symprod/op_trace.hpp"

namespace symprod {

namespace {

constexpr std::uint32_t kTrialLimit = 1'000'000;

const std::vector<std::uint32_t>& trial_primes() {
  static const std::vector<std::uint32_t> primes = small_primes_upto(kTrialLimit);
  return primes;
}

// Brent's variant of Pollard rho. Returns a nontrivial factor of composite n.
Integer pollard_brent(const Integer& n) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, x, q = 1, g = 1, ys;
    unsigned long r = 1;
    constexpr unsigned long m = 128;
    auto step = [&](const Integer& v) {
      Integer w = v * v + c;
      mpz_mod(w.get_mpz_t(), w.get_mpz_t(), n.get_mpz_t());
      return w;
    };
    do {
      x = y;
      for (unsigned long i = 0; i < r; ++i) y = step(y);
      unsigned long k = 0;
      do {
        ys = y;
        for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
          y = step(y);
          Integer diff = x - y;
          q = q * abs(diff);
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = step(ys);
        g = gcd(abs(Integer(x - ys)), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void split_composite(const Integer& n, std::map<Integer, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  Integer f = pollard_brent(n);
  split_composite(f, out);
  split_composite(Integer(n / f), out);
}

}  // namespace

std::vector<std::uint32_t> small_primes_upto(std::uint32_t limit) {
  std::vector<bool> composite(limit + 1, false);
  std::vector<std::uint32_t> primes;
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = std::uint64_t(i) * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<PrimePower> factor_integer(const Integer& n) {
  note_op(Op::factor_integer);
  require(n != 0, ErrorCode::invalid_argument, "factor_integer: input must be nonzero");
  Integer m = abs(n);
  std::map<Integer, unsigned> found;
  for (std::uint32_t p : trial_primes()) {
    if (Integer(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      m /= p;
      ++found[Integer(p)];
    }
  }
  if (m > 1) {
    if (m < Integer(kTrialLimit) * kTrialLimit) {
      ++found[m];
    } else {
      split_composite(m, found);
    }
  }
  std::vector<PrimePower> out;
  out.reserve(found.size());
  for (auto& [p, e] : found) out.push_back({p, e});
  return out;
}

unsigned valuation(const Integer& n, const Integer& p) {
  require(n != 0 && p >= 2, ErrorCode::invalid_argument, "valuation: need n != 0, p >= 2");
  unsigned e = 0;
  Integer m = n;
  while (mpz_divisible_p(m.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), p.get_mpz_t());
    ++e;
  }
  return e;
}

Integer pow(const Integer& base, unsigned long exponent) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

Integer abs(const Integer& n) {
  Integer r;
  mpz_abs(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer r;
  mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Integer lcm(const Integer& a, const Integer& b) {
  Integer r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  require(den != 0, ErrorCode::division_by_zero, "rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& n) { return n.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(std::string_view text) {
  std::size_t i = 0;
  auto digits = [&](std::size_t start) {
    std::size_t j = start;
    while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
    return j;
  };
  bool neg = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    neg = text[i] == '-';
    ++i;
  }
  std::size_t end = digits(i);
  if (end == i) throw ParseError(i, "expected digits");
  Integer num(std::string(text.substr(i, end - i)));
  Integer den = 1;
  if (end < text.size() && text[end] == '/') {
    std::size_t dstart = end + 1;
    std::size_t dend = digits(dstart);
    if (dend == dstart) throw ParseError(dstart, "expected denominator digits");
    den = Integer(std::string(text.substr(dstart, dend - dstart)));
    end = dend;
  }
  if (end != text.size()) throw ParseError(end, "unexpected character in rational");
  if (neg) num = -num;
  return make_rational(num, den);
}

double log_abs(const Integer& n) {
  require(n != 0, ErrorCode::invalid_argument, "log_abs of zero");
  long exp = 0;
  double mant = mpz_get_d_2exp(&exp, n.get_mpz_t());
  return std::log(std::fabs(mant)) + static_cast<double>(exp) * std::log(2.0);
}

}  // namespace symprod

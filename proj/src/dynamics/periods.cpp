#include <numeric>

#include "symprod/arith/finite_field.hpp"
#include "symprod/dynamics/dynamics.hpp"
#include "symprod/errors.hpp"
#include "symprod/heights/heights.hpp"
#include "symprod/op_trace.hpp"

namespace symprod {

namespace {

// Cycle lengths of a functional graph on [0, n).
std::set<unsigned> cycle_lengths(const std::vector<std::uint32_t>& next) {
  const std::size_t n = next.size();
  std::vector<std::uint8_t> state(n, 0);  // 0 new, 1 on current path, 2 done
  std::vector<std::uint32_t> path;
  std::set<unsigned> out;
  for (std::size_t s = 0; s < n; ++s) {
    if (state[s]) continue;
    path.clear();
    std::uint32_t v = static_cast<std::uint32_t>(s);
    while (state[v] == 0) {
      state[v] = 1;
      path.push_back(v);
      v = next[v];
    }
    if (state[v] == 1) {
      unsigned len = 1;
      for (std::uint32_t w = next[v]; w != v; w = next[w]) ++len;
      out.insert(len);
    }
    for (auto w : path) state[w] = 2;
  }
  return out;
}

// Sign of a + b sqrt5.
int sign_sqrt5(const Integer& a, const Integer& b) {
  const int sa = sgn(a), sb = sgn(b);
  if (sa >= 0 && sb >= 0) return (sa || sb) ? 1 : 0;
  if (sa <= 0 && sb <= 0) return -1;
  // opposite signs: compare a^2 with 5 b^2
  const int c = cmp(Integer(a * a), Integer(5 * b * b));
  return sa > 0 ? c : -c;
}

}  // namespace

std::set<unsigned> periods_mod_p(const RationalMap1& f, unsigned p, unsigned k) {
  note_op(Op::periods_mod_p);
  require(k >= 1, ErrorCode::invalid_argument, "periods_mod_p: k must be positive");
  require(is_prime(Integer(p)), ErrorCode::invalid_argument, "periods_mod_p: p must be prime");
  if (degenerate_mod(f, Integer(p))) fail(ErrorCode::invalid_argument, "periods_mod_p: " + std::to_string(p) + " is a prime of bad reduction");

  const int d = f.degree();
  std::set<unsigned> base;
  for (unsigned j = 1; j <= k; ++j) {
    GaloisField K(p, j);
    const std::uint32_t q = K.order();
    std::vector<GaloisField::Elem> a, b;
    for (int i = 0; i <= d; ++i) {
      a.push_back(K.from_integer(f.num().coeff(i).get_num()));
      b.push_back(K.from_integer(f.den().coeff(i).get_num()));
    }
    auto eval = [&](const std::vector<GaloisField::Elem>& c, GaloisField::Elem z) {
      GaloisField::Elem acc = 0;
      for (int i = d; i >= 0; --i) acc = K.add(K.mul(acc, z), c[static_cast<std::size_t>(i)]);
      return acc;
    };
    std::vector<std::uint32_t> next(q + 1);
    for (std::uint32_t z = 0; z < q; ++z) {
      const auto num = eval(a, z), den = eval(b, z);
      next[z] = den == 0 ? q : K.mul(num, K.inv(den));
    }
    // infinity = (1 : 0): the X^d coefficients
    const auto num = a[static_cast<std::size_t>(d)], den = b[static_cast<std::size_t>(d)];
    next[q] = den == 0 ? q : K.mul(num, K.inv(den));
    for (unsigned len : cycle_lengths(next)) base.insert(len);
  }
  std::set<unsigned> closed = base;
  for (unsigned round = 1; round < k; ++round) {
    std::set<unsigned> grown = closed;
    for (unsigned a : closed)
      for (unsigned b : base) grown.insert(std::lcm(a, b));
    closed = std::move(grown);
  }
  return closed;
}

unsigned exponent_bound(const Integer& p, const Integer& vp) {
  require(vp >= 1, ErrorCode::invalid_argument, "exponent_bound: v(p) must be positive");
  require(is_prime(p), ErrorCode::invalid_argument, "exponent_bound: p must be prime");
  if (p != 2) return static_cast<unsigned>(mpz_sizeinbase(vp.get_mpz_t(), 2));  // 1 + floor(log2 vp)
  // X = (sqrt5 v + sqrt(5v^2 + 4))/2 is the positive root of y^2 - sqrt5 v y - 1.
  // phi^m <= X  iff  phi^2m - sqrt5 v phi^m - 1 <= 0, with phi^m = (L_m + F_m sqrt5)/2.
  auto lucas_fib = [](unsigned m) {
    Integer L, F;
    mpz_lucnum_ui(L.get_mpz_t(), m);
    mpz_fib_ui(F.get_mpz_t(), m);
    return std::pair{L, F};
  };
  unsigned m = 0;
  for (;; ++m) {
    const unsigned next = m + 1;
    auto [L, F] = lucas_fib(next);
    auto [L2, F2] = lucas_fib(2 * next);
    const Integer a = L2 - 5 * vp * F - 2;
    const Integer b = F2 - vp * L;
    if (sign_sqrt5(a, b) > 0) break;
  }
  return 1 + m;
}

Integer period_bound(const PeriodBoundInput& in) {
  note_op(Op::period_bound);
  require(in.k >= 1, ErrorCode::invalid_argument, "period_bound: k must be at least 1");
  require(in.Np >= 1 && in.vp >= 1, ErrorCode::invalid_argument, "period_bound: Np and v(p) must be positive");
  require(is_prime(in.p), ErrorCode::invalid_argument, "period_bound: p must be prime");
  Integer n = in.Np;
  while (n % in.p == 0) n /= in.p;
  require(n == 1, ErrorCode::invalid_argument, "period_bound: Np must be a power of p");
  Integer sum = 0, power = 1;
  for (unsigned i = 0; i <= in.k; ++i) {
    sum += power;
    power *= in.Np;
  }
  const unsigned e = exponent_bound(in.p, in.vp);
  return sum * in.k * in.Np * pow(in.p, e);
}

}  // namespace symprod

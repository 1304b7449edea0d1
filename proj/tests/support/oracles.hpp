#pragma once

// Independent reference computations shared by the unit and acceptance tests.
// Nothing here calls the library routine it is used to check.

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "symprod/arith/finite_field.hpp"
#include "symprod/arith/integer.hpp"
#include "symprod/core/binary_form.hpp"
#include "symprod/core/projective.hpp"

namespace oracle {

using namespace symprod;

inline PkPoint pt(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return PkPoint(v);
}

inline Rational q(long a, long b = 1) { return make_rational(Integer(a), Integer(b)); }

inline RationalMap1 poly_map(std::initializer_list<Rational> c) { return RationalMap1::polynomial(UniPoly(c)); }

/// Random [P : Q] of degree d with integer coefficients in [-bound, bound]
/// and nonzero resultant.
inline RationalMap1 random_map(std::mt19937_64& rng, int d, long bound = 4) {
  std::uniform_int_distribution<long> c(-bound, bound);
  for (;;) {
    std::vector<Rational> p(static_cast<std::size_t>(d) + 1), r(static_cast<std::size_t>(d) + 1);
    for (auto& x : p) x = c(rng);
    for (auto& x : r) x = c(rng);
    BinaryForm P(d, p), Q(d, r);
    if (P.degree() != d || P.is_zero() || Q.is_zero() || resultant(P, Q) == 0) continue;
    return RationalMap1(P, Q);
  }
}

/// Random point of P^k with coordinates in [-bound, bound].
inline PkPoint random_point(std::mt19937_64& rng, std::size_t k, long bound = 9) {
  std::uniform_int_distribution<long> c(-bound, bound);
  for (;;) {
    std::vector<Integer> v(k + 1);
    bool nonzero = false;
    for (auto& x : v) {
      x = c(rng);
      nonzero = nonzero || x != 0;
    }
    if (nonzero) return PkPoint(v);
  }
}

/// Every point of P^k(Q) whose coprime coordinates satisfy |x_i| <= bound.
inline std::vector<PkPoint> box_points(std::size_t k, long bound) {
  std::vector<PkPoint> out;
  std::vector<long> x(k + 1, -bound);
  for (;;) {
    std::size_t lead = 0;
    while (lead <= k && x[lead] == 0) ++lead;
    if (lead <= k && x[lead] > 0) {
      Integer g = 0;
      for (long v : x) g = gcd(g, Integer(v));
      if (g == 1) {
        std::vector<Integer> v(x.begin(), x.end());
        out.emplace_back(v);
      }
    }
    std::size_t i = 0;
    while (i <= k && x[i] == bound) x[i++] = -bound;
    if (i > k) break;
    ++x[i];
  }
  return out;
}

/// Brute-force search for a common zero of the components of the integral
/// morphism F over P^k(F_{p^e}).
inline bool has_common_zero(const MorphismPk& F, std::uint32_t p, unsigned e) {
  const GaloisField gf(p, e);
  const std::size_t n = F.dim() + 1;
  struct Term {
    GaloisField::Elem c;
    Monomial m;
  };
  std::vector<std::vector<Term>> comps;
  for (const auto& comp : F.components()) {
    std::vector<Term> ts;
    for (const auto& [m, c] : comp.terms()) ts.push_back({gf.from_integer(c.get_num()), m});
    comps.push_back(std::move(ts));
  }
  auto eval = [&](const std::vector<Term>& ts, const std::vector<GaloisField::Elem>& x) {
    GaloisField::Elem acc = 0;
    for (const auto& t : ts) {
      GaloisField::Elem v = t.c;
      for (std::size_t i = 0; i < n; ++i)
        for (unsigned j = 0; j < t.m[i]; ++j) v = gf.mul(v, x[i]);
      acc = gf.add(acc, v);
    }
    return acc;
  };
  // points normalized with the first nonzero coordinate equal to 1
  for (std::size_t lead = 0; lead < n; ++lead) {
    std::vector<GaloisField::Elem> x(n, 0);
    x[lead] = 1;
    const std::size_t free = n - lead - 1;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < free; ++i) total *= gf.order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
      std::uint64_t r = idx;
      for (std::size_t i = lead + 1; i < n; ++i) {
        x[i] = static_cast<GaloisField::Elem>(r % gf.order());
        r /= gf.order();
      }
      bool all_zero = true;
      for (const auto& c : comps)
        if (eval(c, x) != 0) {
          all_zero = false;
          break;
        }
      if (all_zero) return true;
    }
  }
  return false;
}

/// Green function of a monic integral polynomial at the archimedean place,
/// lim 2^-n log max(1, |f^n(z)|), by escape-time iteration in long double.
inline long double escape_green(const std::function<std::complex<long double>(std::complex<long double>)>& f,
                                long double degree, std::complex<long double> z) {
  long double scale = 1;
  for (int n = 0; n < 200; ++n) {
    if (std::abs(z) > 1e30L) return scale * std::log(std::abs(z));
    z = f(z);
    scale /= degree;
  }
  return 0;
}

}  // namespace oracle

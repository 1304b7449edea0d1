#include <doctest.h>

#include <random>

#include "support/oracles.hpp"
#include "symprod/spectra/spectra.hpp"

using namespace symprod;
using oracle::poly_map;
using oracle::pt;
using oracle::q;

namespace {

bool divides(const UniPoly& d, const UniPoly& p) { return (p % d).is_zero(); }

UniPoly linear(const Rational& root) { return UniPoly{-root, 1}; }

Rational rational_multiplier(const RationalMap1& f, const Rational& x, unsigned n) {
  return multiplier_f(f, AlgebraicPoint::rational(x), n).rational_value();
}

// Random quadratic or cubic polynomial with f(a) = b and f(b) = a
// (a = b gives a fixed point).
RationalMap1 through(std::mt19937_64& rng, int degree, const Rational& a, const Rational& b) {
  std::uniform_int_distribution<long> c(-3, 3);
  for (;;) {
    Rational lead = c(rng);
    if (lead == 0) continue;
    // f(x) = lead * x^degree + s * x + t
    auto top = [&](const Rational& x) {
      Rational v = lead;
      for (int i = 0; i < degree; ++i) v *= x;
      return v;
    };
    Rational s, t;
    if (a == b) {
      s = c(rng);
      t = a - top(a) - s * a;
    } else {
      // lead*a^d + s a + t = b, lead*b^d + s b + t = a
      s = (b - a - top(a) + top(b)) / (a - b);
      t = b - top(a) - s * a;
    }
    std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs[0] = t;
    coeffs[1] = s;
    coeffs[static_cast<std::size_t>(degree)] += lead;
    return RationalMap1::polynomial(UniPoly(coeffs));
  }
}

}  // namespace

TEST_CASE("multipliers of the x^2 - 21/16 fixtures") {
  const RationalMap1 f = poly_map({q(-21, 16), 0, 1});
  CHECK(rational_multiplier(f, q(7, 4), 1) == q(7, 2));
  CHECK(rational_multiplier(f, q(-3, 4), 1) == q(-3, 2));
  CHECK(rational_multiplier(f, q(-5, 4), 2) == q(-5, 4));
  CHECK(rational_multiplier(f, q(1, 4), 2) == q(-5, 4));
  CHECK_THROWS(multiplier_f(f, AlgebraicPoint::rational(q(1, 4)), 1));
}

TEST_CASE("charpoly of a fixed point mixing a fixed point and a collapsed 2-cycle") {
  const RationalMap1 f = poly_map({q(-21, 16), 0, 1});
  const PkPoint p = eta({PkPoint::affine(q(-3, 4)), PkPoint::affine(q(-5, 4)), PkPoint::affine(q(1, 4))});
  CHECK(p == pt({15, 28, -112, 64}));
  for (std::size_t chart = 0; chart < 4; ++chart) {
    const MultiplierReport r = multiplier_F(f, 3, p, 1, chart);
    CHECK(factored_string(r.charpoly) == "(x + 3/2)*(x^2 + 5/4)");
  }
  const MultiplierReport r = multiplier_F(f, 3, p, 1);
  CHECK(divides(linear(q(-3, 2)), r.charpoly));
  CHECK(divides(UniPoly{q(5, 4), 0, 1}, r.charpoly));
  CHECK(r.base.size() == 3);
}

TEST_CASE("collapsed 3-cycle of x^2 - 29/16") {
  const RationalMap1 f = poly_map({q(-29, 16), 0, 1});
  const PkPoint p = eta({PkPoint::affine(q(5, 4)), PkPoint::affine(q(-1, 4)), PkPoint::affine(q(-7, 4))});
  const MultiplierReport r = multiplier_F(f, 3, p, 1);
  CHECK(r.charpoly == UniPoly{q(-35, 8), 0, 0, 1});
  const Rational lambda = rational_multiplier(f, q(5, 4), 3);
  CHECK(lambda == q(35, 8));
}

TEST_CASE("multiplier at infinity and non-periodic input") {
  CHECK(multiplier_f(poly_map({0, 0, 1}), AlgebraicPoint::at_infinity(), 1).is_zero());
  const RationalMap1 f = poly_map({-2, 0, 1});
  CHECK_THROWS(multiplier_F(f, 2, pt({1, -3, 2}), 1));
}

TEST_CASE("multiplier divisibility on 50 random instances") {
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> small(-5, 5);
  int repeated = 0, collapsed = 0;
  for (int trial = 0; trial < 50; ++trial) {
    const int degree = 2 + trial % 2;
    if (trial % 2 == 0) {
      // m-fold repeated fixed point: prod_{i=1}^{m} (x - lambda^i)
      const Rational a = make_rational(Integer(small(rng)), Integer(1 + trial % 3));
      const RationalMap1 f = through(rng, degree, a, a);
      const unsigned m = 2 + static_cast<unsigned>(trial % 3 == 0);
      const Rational lambda = rational_multiplier(f, a, 1);
      std::vector<PkPoint> rep(m, PkPoint::affine(a));
      const MultiplierReport r = multiplier_F(f, m, eta(rep), 1);
      UniPoly want{1};
      Rational power = 1;
      for (unsigned i = 1; i <= m; ++i) {
        power *= lambda;
        want *= linear(power);
      }
      INFO(f.to_string(), " at ", a.get_str());
      CHECK(divides(want, r.charpoly));
      ++repeated;
    } else {
      // collapsed 2-cycle: x^2 - lambda
      Rational a = small(rng), b = small(rng);
      if (a == b) b += 1;
      const RationalMap1 f = through(rng, degree, a, b);
      const Rational lambda = rational_multiplier(f, a, 2);
      const MultiplierReport r = multiplier_F(f, 2, eta({PkPoint::affine(a), PkPoint::affine(b)}), 1);
      INFO(f.to_string(), " cycle ", a.get_str(), " ", b.get_str());
      CHECK(divides(UniPoly{-lambda, 0, 1}, r.charpoly));
      ++collapsed;
    }
  }
  CHECK(repeated + collapsed == 50);
}

TEST_CASE("charpoly does not depend on the chart") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 10; ++trial) {
    const Rational a = trial - 4, b = trial - 2;
    const RationalMap1 f = through(rng, 2, a, b);
    const PkPoint p = eta({PkPoint::affine(a), PkPoint::affine(b), PkPoint::affine(a), PkPoint::affine(b)});
    std::optional<UniPoly> first;
    for (std::size_t chart = 0; chart < p.size(); ++chart) {
      if (p[chart] == 0) continue;
      const UniPoly c = multiplier_F(f, 4, p, 1, chart).charpoly;
      if (!first) first = c;
      CHECK(c == *first);
    }
  }
}

TEST_CASE("critical points") {
  const auto c = critical_points(poly_map({-1, 0, 1}));
  REQUIRE(c.size() == 2);
  unsigned total = 0;
  bool zero = false, inf = false;
  for (const auto& cls : c) {
    total += cls.multiplicity * static_cast<unsigned>(cls.degree());
    zero = zero || (!cls.point.infinity && cls.point.x.is_zero());
    inf = inf || cls.point.infinity;
  }
  CHECK(total == 2);
  CHECK(zero);
  CHECK(inf);

  // restricted family at a = 2: [-4 z^2 : (z + t)^2] is critical at 0 and -1
  const RationalMap1 fa(BinaryForm(2, {0, 0, -4}), BinaryForm(2, {1, 2, 1}));
  std::vector<Rational> roots;
  for (const auto& cls : critical_points(fa)) {
    REQUIRE_FALSE(cls.point.infinity);
    roots.push_back(cls.point.x.rational_value());
  }
  std::sort(roots.begin(), roots.end());
  CHECK(roots == std::vector<Rational>{-1, 0});

  // degree 3: 2d - 2 = 4 critical points counted with multiplicity
  std::mt19937_64 rng(4);
  for (int i = 0; i < 5; ++i) {
    unsigned count = 0;
    for (const auto& cls : critical_points(oracle::random_map(rng, 3)))
      count += cls.multiplicity * static_cast<unsigned>(cls.degree());
    CHECK(count == 4);
  }
}

TEST_CASE("postcritical finiteness verdicts with certificates") {
  struct Case {
    RationalMap1 f;
    bool pcf;
  };
  const std::vector<Case> cases{{poly_map({-1, 0, 1}), true},
                                {poly_map({-2, 0, 1}), true},
                                {poly_map({1, 0, 1}), false},
                                {poly_map({-1, 0, 1}), true},
                                {poly_map({q(-1, 4), 0, 1}), false},
                                {poly_map({0, 0, 1}), true}};
  for (const auto& c : cases) {
    const PCFCertificate cert = is_pcf(c.f);
    INFO(c.f.to_string());
    CHECK(cert.pcf == c.pcf);
    bool all = true;
    for (const auto& co : cert.critical) {
      all = all && co.orbit.preperiodic();
      if (!co.orbit.preperiodic()) CHECK(co.orbit.escape_height > co.orbit.bound);
    }
    CHECK(all == cert.pcf);
    for (unsigned k = 2; k <= 3; ++k) {
      const PCFCertificate s = is_strongly_pcf_symmetric(c.f, k);
      CHECK(s.pcf == cert.pcf);
      CHECK(s.k == k);
    }
  }
}

TEST_CASE("factored display") {
  CHECK(factored_string(UniPoly{q(15, 8), q(5, 4), q(3, 2), 1}) == "(x + 3/2)*(x^2 + 5/4)");
  CHECK(factored_string(UniPoly{1, 2, 1}) == "(x + 1)^2");
  CHECK(factored_string(UniPoly{-4, 0, 2}) == "2*(x^2 - 2)");
}

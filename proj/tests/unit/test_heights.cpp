#include <doctest.h>

#include <cmath>
#include <random>

#include "support/oracles.hpp"
#include "symprod/dynamics/dynamics.hpp"
#include "symprod/heights/heights.hpp"

using namespace symprod;
using oracle::poly_map;
using oracle::pt;
using oracle::q;

namespace {

std::vector<long> primes_of(const BadPrimeSet& s) {
  std::vector<long> out;
  for (const auto& p : s) out.push_back(p.get_si());
  return out;
}

// Multiplicative height of coprime integer coordinates.
Integer big_height(const PkPoint& p) {
  Integer h = 0;
  for (const auto& c : p.coords()) h = std::max(h, Integer(abs(c)));
  return h;
}

const double golden_height = std::log((3 + std::sqrt(5.0)) / 2);

}  // namespace

TEST_CASE("naive height") {
  CHECK(naive_height(pt({81, 108, 54, 12, 1})) == doctest::Approx(std::log(108.0)).epsilon(1e-14));
  CHECK(naive_height(pt({0, 1})) == 0);
  CHECK(naive_height(pt({-7, 4})) == doctest::Approx(std::log(7.0)).epsilon(1e-14));
}

TEST_CASE("bad primes of sample maps") {
  CHECK(primes_of(bad_primes(poly_map({q(-29, 16), 0, 1}))) == std::vector<long>{2});
  CHECK(bad_primes(poly_map({-2, 0, 1})).empty());
  CHECK(bad_primes(poly_map({0, 0, 1})).empty());
  // x^2/3 + 1: leading coefficient carries the prime 3
  CHECK(primes_of(bad_primes(poly_map({1, 0, q(1, 3)}))) == std::vector<long>{3});
  // Milnor form at a^2 = 4: resultant 1 - a^4 = -15
  const RationalMap1 milnor(BinaryForm(2, {0, 4, 1}), BinaryForm(2, {1, 4, 0}));
  CHECK(primes_of(bad_primes(milnor)) == std::vector<long>{3, 5});
}

TEST_CASE("bad_primes_sym agrees with the base map for k = 2, 3, 4") {
  std::mt19937_64 rng(11);
  std::vector<RationalMap1> maps{poly_map({q(-29, 16), 0, 1}), poly_map({q(-21, 16), 0, 1}), poly_map({-2, 0, 1})};
  for (int i = 0; i < 6; ++i) maps.push_back(oracle::random_map(rng, 2 + i % 2, 3));
  for (const auto& f : maps)
    for (unsigned k = 2; k <= 4; ++k) CHECK(bad_primes_sym(f, k) == bad_primes(f));
}

TEST_CASE("k=2 brute-force degeneracy audit over F_{p^e}, p <= 7, e <= 3") {
  std::mt19937_64 rng(5);
  std::vector<RationalMap1> maps{poly_map({q(-29, 16), 0, 1}), poly_map({1, 0, q(1, 3)}),
                                 RationalMap1(BinaryForm(2, {0, 4, 1}), BinaryForm(2, {1, 4, 0})),
                                 RationalMap1(BinaryForm(2, {1, 0, 1}), BinaryForm(2, {0, 5, 0}))};
  for (int i = 0; i < 6; ++i) maps.push_back(oracle::random_map(rng, 2 + i % 2, 3));
  for (const auto& f : maps) {
    const MorphismPk F = symmetrize(f, 2).normalized();
    const BadPrimeSet bad = bad_primes_sym(f, 2);
    for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
      bool zero = false;
      for (unsigned e = 1; e <= 3 && !zero; ++e) zero = oracle::has_common_zero(F, p, e);
      const bool listed = std::find(bad.begin(), bad.end(), Integer(p)) != bad.end();
      INFO(f.to_string(), " p = ", p);
      CHECK(zero == listed);
      CHECK(degenerate_mod(f, Integer(p)) == listed);
    }
  }
}

TEST_CASE("Nullstellensatz certificates verify exactly") {
  for (unsigned k = 1; k <= 4; ++k) {
    const MorphismPk F = symmetrize(poly_map({-2, 0, 1}), k).normalized();
    const auto cert = nullstellensatz_certificate(F);
    REQUIRE(cert.has_value());
    CHECK(cert->verify(F));
  }
  const MorphismPk G = symmetrize(poly_map({q(-29, 16), 0, 1}), 3).normalized();
  const auto cert = nullstellensatz_certificate(G);
  REQUIRE(cert.has_value());
  CHECK(cert->verify(G));
  const HeightConstant hc = height_comparison_constant(G);
  CHECK(hc.certified);
  CHECK(hc.lower <= hc.upper);
  CHECK(hc.C >= 0);
}

TEST_CASE("height comparison constant holds on 10^4 sampled points") {
  std::mt19937_64 rng(2024);
  struct Case {
    RationalMap1 f;
    unsigned k;
  };
  std::vector<Case> cases{{poly_map({-2, 0, 1}), 1},
                          {poly_map({-2, 0, 1}), 3},
                          {poly_map({q(-29, 16), 0, 1}), 2},
                          {poly_map({q(-29, 16), 0, 1}), 3},
                          {RationalMap1(BinaryForm(2, {0, 4, 1}), BinaryForm(2, {1, 4, 0})), 2}};
  std::size_t checked = 0;
  for (const auto& c : cases) {
    const MorphismPk F = symmetrize(c.f, c.k).normalized();
    const HeightConstant hc = height_comparison_constant(F);
    REQUIRE(hc.certified);
    const double d = F.degree();
    for (int i = 0; i < 2000; ++i) {
      const PkPoint p = oracle::random_point(rng, c.k, i % 2 ? 1000 : 20);
      const double diff = naive_height(F.apply(p)) - d * naive_height(p);
      CHECK(diff <= hc.upper + 1e-9);
      CHECK(diff >= hc.lower - 1e-9);
      ++checked;
    }
  }
  CHECK(checked == 10000);
}

TEST_CASE("canonical heights of the worked example") {
  const RationalMap1 f = poly_map({-2, 0, 1});
  HeightOptions opt;
  opt.tol = 1e-7;
  const HeightValue h = canonical_height(symmetrize(f, 1), PkPoint::affine(3), opt);
  CHECK(h.certified);
  CHECK(h.error_bound <= opt.tol);
  CHECK(std::abs(h.value - golden_height) <= 1e-6);
  CHECK(std::abs(h.value - 0.9624) <= 1e-3);

  const HeightValue h4 = canonical_height(symmetrize(f, 4), pt({81, 108, 54, 12, 1}));
  CHECK(std::abs(h4.value - 3.84969) <= 1e-3);
  CHECK(std::abs(h4.value - 4 * h.value) <= 2 * 1e-6 + 4 * 1e-7);

  const auto K = NumberField::make(UniPoly{1, 1, 1, 1, 1});
  const HeightValue hz = canonical_height_nf(f, AlgebraicPoint::affine(NFElem::generator(K)));
  CHECK(std::abs(hz.value - 0.3884) <= 1e-3);
  CHECK(hz.note.empty());
}

TEST_CASE("canonical height of rational points via the transfer equals the direct value") {
  const RationalMap1 f = poly_map({q(1, 3), 0, 1});
  for (long a : {-3L, 1L, 5L}) {
    const HeightValue direct = canonical_height(symmetrize(f, 1), PkPoint::affine(a));
    const HeightValue nf = canonical_height_nf(f, AlgebraicPoint::rational(a));
    CHECK(std::abs(direct.value - nf.value) <= 2e-6);
  }
}

TEST_CASE("transfer scaling against conjugate-averaged escape-time estimates") {
  // monic integral maps and integral points: only the archimedean place contributes
  std::mt19937_64 rng(77);
  std::uniform_int_distribution<long> coef(-6, 6);
  struct Case {
    long c;
    UniPoly minpoly;
  };
  std::vector<Case> cases{{-2, UniPoly{1, 1, 1, 1, 1}}};
  while (cases.size() < 11) {
    const long b = coef(rng), c0 = coef(rng), c = coef(rng);
    const long disc = b * b - 4 * c0;
    const long r = static_cast<long>(std::lround(std::sqrt(std::abs(static_cast<double>(disc)))));
    if (disc >= 0 && r * r == disc) continue;
    cases.push_back({c, UniPoly{c0, b, 1}});
  }
  for (const auto& cs : cases) {
    const RationalMap1 f = poly_map({cs.c, 0, 1});
    const auto K = NumberField::make(cs.minpoly);
    const HeightValue h = canonical_height_nf(f, AlgebraicPoint::affine(NFElem::generator(K)));
    // numeric conjugates by Durand-Kerner
    const int n = cs.minpoly.degree();
    std::vector<std::complex<long double>> z(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) z[static_cast<std::size_t>(i)] = std::pow(std::complex<long double>(0.4L, 0.9L), i);
    for (int it = 0; it < 500; ++it)
      for (int i = 0; i < n; ++i) {
        std::complex<long double> num = 0, den = 1;
        for (int j = n; j >= 0; --j) num = num * z[static_cast<std::size_t>(i)] + static_cast<long double>(cs.minpoly.coeff(j).get_d());
        for (int j = 0; j < n; ++j)
          if (j != i) den *= z[static_cast<std::size_t>(i)] - z[static_cast<std::size_t>(j)];
        z[static_cast<std::size_t>(i)] -= num / den;
      }
    long double avg = 0;
    const long double c = cs.c;
    for (const auto& root : z) avg += oracle::escape_green([c](auto w) { return w * w + c; }, 2, root);
    avg /= n;
    INFO("c = ", cs.c, " minpoly ", cs.minpoly.to_string());
    CHECK(std::abs(h.value - static_cast<double>(avg)) <= 1e-5);
  }
}

TEST_CASE("functional equation on 100 random points") {
  std::mt19937_64 rng(99);
  HeightOptions opt;
  opt.tol = 1e-6;
  std::vector<std::pair<RationalMap1, unsigned>> cases{{poly_map({-2, 0, 1}), 1},
                                                       {poly_map({q(-29, 16), 0, 1}), 2},
                                                       {oracle::random_map(rng, 2, 3), 1},
                                                       {oracle::random_map(rng, 2, 3), 2}};
  int done = 0;
  for (const auto& [f, k] : cases) {
    const MorphismPk F = symmetrize(f, k);
    const HeightContext ctx(F);
    for (int i = 0; i < 25; ++i) {
      const PkPoint p = oracle::random_point(rng, k, 6);
      const HeightValue a = ctx.canonical(p, opt);
      const HeightValue b = ctx.canonical(F.apply(p), opt);
      REQUIRE(a.certified);
      CHECK(std::abs(b.value - F.degree() * a.value) <= b.error_bound + F.degree() * a.error_bound + 1e-12);
      ++done;
    }
  }
  CHECK(done == 100);
}

TEST_CASE("preperiodic points have canonical height zero") {
  const RationalMap1 f = poly_map({q(-29, 16), 0, 1});
  for (const auto& x : {q(5, 4), q(-1, 4), q(3, 4), q(-7, 4)})
    CHECK(std::abs(canonical_height(symmetrize(f, 1), PkPoint::affine(x)).value) <= 1e-6);
  const auto K = NumberField::make(UniPoly{q(23, 64), q(-164, 64), q(16, 64), 1});
  const HeightValue h = canonical_height_nf(f, AlgebraicPoint::affine(NFElem::generator(K)));
  CHECK(std::abs(h.value) <= 1e-6);
}

TEST_CASE("green decomposition: canonical height is the sum of local terms") {
  const MorphismPk F = symmetrize(poly_map({q(-29, 16), 0, 1}), 2);
  const PkPoint p = pt({3, -5, 7});
  HeightOptions opt;
  const HeightValue h = canonical_height(F, p, opt);
  double sum = 0;
  for (const auto& place : h.places) {
    const Integer v = place.place == "inf" ? Integer(0) : Integer(place.place);
    sum += green_local(F, p, v, opt).value;
  }
  CHECK(std::abs(sum - h.value) <= 2 * opt.tol);
  // the power map has green function log max |x_i| at infinity and 0 elsewhere
  const MorphismPk sq = symmetrize(poly_map({0, 0, 1}), 1);
  CHECK(green_local(sq, pt({5, 3}), 0).value == doctest::Approx(std::log(5.0)).epsilon(1e-9));
  CHECK(green_local(sq, pt({5, 3}), 3).value == doctest::Approx(0).epsilon(1e-12));
}

TEST_CASE("height comparison for roots: 200 exact multisets") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> ks(1, 6);
  for (int trial = 0; trial < 200; ++trial) {
    const int k = ks(rng);
    std::vector<PkPoint> pts;
    Integer prod = 1;
    for (int i = 0; i < k; ++i) {
      pts.push_back(oracle::random_point(rng, 1, trial % 3 ? 12 : 200));
      prod *= big_height(pts.back());
    }
    const Integer H = big_height(eta(pts));
    const Integer two_k = Integer(1) << k;
    CHECK(two_k * H >= prod);
    CHECK(H <= (Integer(1) << (k - 1)) * prod);
  }
}

TEST_CASE("non-Galois fields are flagged") {
  const auto K = NumberField::make(UniPoly{-2, 0, 0, 1});
  const HeightValue h = canonical_height_nf(poly_map({-2, 0, 1}), AlgebraicPoint::affine(NFElem::generator(K)));
  CHECK_FALSE(h.note.empty());
}

TEST_CASE("preperiodicity bound of the power map is zero") {
  CHECK(preperiodicity_bound(symmetrize(poly_map({0, 0, 1}), 1)) == doctest::Approx(0).epsilon(1e-12));
  CHECK(preperiodicity_bound(poly_map({-2, 0, 1})) >= 0);
}

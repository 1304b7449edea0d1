#include <doctest.h>

#include <random>

#include "symprod/arith/factor.hpp"
#include "symprod/arith/integer.hpp"
#include "symprod/arith/matrix.hpp"
#include "symprod/arith/modpoly.hpp"
#include "symprod/errors.hpp"
#include "symprod/kernels/modp.hpp"

using namespace symprod;

namespace {

UniPoly ints(std::initializer_list<long> c) {
  std::vector<Integer> v;
  for (long x : c) v.emplace_back(x);
  return UniPoly::from_integers(v);
}

// Independent irreducibility oracle for small degree: rational-root test by
// divisor enumeration, then quadratic/cubic factors with coefficients in a box.
bool brute_force_has_factor(const UniPoly& f, long box) {
  auto z = f.primitive();
  auto divides = [&](const UniPoly& g) { return (z % g).is_zero(); };
  if (z.degree() >= 2)
    for (long a = 1; a <= box; ++a)
      for (long b = -box; b <= box; ++b)
        if (divides(ints({b, a}))) return true;
  if (z.degree() >= 4)
    for (long a = 1; a <= box; ++a)
      for (long b = -box; b <= box; ++b)
        for (long c = -box; c <= box; ++c)
          if (c != 0 && divides(ints({c, b, a}))) return true;
  return false;
}

}  // namespace

TEST_CASE("factor_integer basic values") {
  CHECK(factor_integer(4096) == std::vector<PrimePower>{{2, 12}});
  CHECK(factor_integer(1).empty());
  CHECK(factor_integer(-12) == std::vector<PrimePower>{{2, 2}, {3, 1}});
  CHECK_THROWS_AS(factor_integer(0), Error);
  Integer big = Integer("1000000007") * Integer("998244353") * 4;
  CHECK(factor_integer(big) == std::vector<PrimePower>{{2, 2}, {Integer("998244353"), 1}, {Integer("1000000007"), 1}});
}

TEST_CASE("resultant of the x^2-29/16 lift has only the prime 2") {
  // Sylvester determinant, computed independently of the Euclidean resultant.
  std::vector<std::vector<Integer>> syl = {
      {16, 0, -29, 0}, {0, 16, 0, -29}, {0, 0, 16, 0}, {0, 0, 0, 16}};
  Integer det = bareiss_determinant(syl);
  CHECK(det == 65536);
  CHECK(factor_integer(det) == std::vector<PrimePower>{{2, 16}});
}

TEST_CASE("factor_unipoly examples") {
  auto f = factor_unipoly(ints({-1, 0, 1}));
  REQUIRE(f.factors.size() == 2);
  CHECK(f.factors[0].first == ints({-1, 1}));
  CHECK(f.factors[1].first == ints({1, 1}));
  CHECK(f.content == 1);

  auto cubic = ints({23, -164, 16, 64});
  CHECK(is_irreducible(cubic));
  CHECK_FALSE(brute_force_has_factor(cubic, 70));

  auto cyclo = ints({1, 1, 1, 1, 1});
  CHECK(is_irreducible(cyclo));
  CHECK_FALSE(brute_force_has_factor(cyclo, 6));
  // mod 2 the quintic cyclotomic polynomial is irreducible already
  CHECK(is_irreducible_mod(ModPoly::reduce(cyclo, 2)));
  CHECK_THROWS_AS(factor_unipoly(UniPoly{}), Error);
}

TEST_CASE("factor_unipoly content and multiplicities") {
  UniPoly p = UniPoly{Rational(1, 2), Rational(-1, 3)} * ints({1, 1}).pow(3) * ints({-2, 0, 1});
  auto f = factor_unipoly(p);
  CHECK(f.expand() == p);
  REQUIRE(f.factors.size() == 3);
  CHECK(f.factors[0] == std::make_pair(ints({1, 1}), 3u));
  CHECK(f.factors[1].first == ints({-3, 2}));
  CHECK(f.factors[2].first == ints({-2, 0, 1}));
  CHECK(f.content == Rational(-1, 6));
}

TEST_CASE("period-3 fixed-point polynomial of x^2-29/16") {
  UniPoly f{Rational(-29, 16), 0, 1};
  UniPoly it = f.compose(f).compose(f) - UniPoly::x();
  auto fac = factor_unipoly(it);
  CHECK(fac.expand() == it);
  std::vector<int> degs;
  for (auto& [g, m] : fac.factors) degs.push_back(g.degree());
  CHECK(degs == std::vector<int>{1, 1, 1, 2, 3});
  CHECK(fac.factors.back().first == ints({23, -164, 16, 64}));
}

TEST_CASE("period-5 fixed-point polynomials split as 1,1,5,10,15 / 2,5,25") {
  auto degrees = [](Rational c) {
    UniPoly f{c, 0, 1};
    UniPoly it = UniPoly::x();
    for (int i = 0; i < 5; ++i) it = f.compose(it);
    auto fac = factor_unipoly(it - UniPoly::x());
    CHECK(fac.expand() == it - UniPoly::x());
    std::vector<int> d;
    for (auto& [g, m] : fac.factors) d.push_back(g.degree());
    return d;
  };
  CHECK(degrees(-2) == std::vector<int>{1, 1, 5, 10, 15});
  CHECK(degrees(Rational(-16, 9)) == std::vector<int>{2, 5, 25});
  CHECK(degrees(Rational(-64, 9)) == std::vector<int>{2, 5, 25});
}

TEST_CASE("factor_unipoly round trip on random products") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-9, 9);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly p = UniPoly::constant(Rational(coef(rng) == 0 ? 3 : 5, 7));
    int parts = 1 + static_cast<int>(rng() % 3);
    for (int i = 0; i < parts; ++i) {
      std::vector<Integer> c;
      int d = 1 + static_cast<int>(rng() % 3);
      for (int j = 0; j < d; ++j) c.emplace_back(coef(rng));
      c.emplace_back(1 + rng() % 4);
      p *= UniPoly::from_integers(c).pow(1 + static_cast<unsigned>(rng() % 2));
    }
    auto f = factor_unipoly(p);
    CHECK(f.expand() == p);
    for (auto& [g, m] : f.factors) {
      CHECK(g.lead() > 0);
      if (g.degree() <= 4) CHECK_FALSE(brute_force_has_factor(g, 12));
    }
  }
}

TEST_CASE("mod-p kernels: AVX2 and scalar agree") {
  std::mt19937_64 rng(11);
  for (std::uint32_t p : {3u, 65521u, 1000003u, (1u << 26) - 5u}) {
    std::uniform_int_distribution<std::uint32_t> dist(0, p - 1);
    for (std::size_t n : {0u, 1u, 3u, 4u, 7u, 64u, 1001u}) {
      std::vector<std::uint32_t> a(n), b(n);
      for (auto& v : a) v = dist(rng);
      for (auto& v : b) v = dist(rng);
      std::uint32_t s = dist(rng);
      auto ref = a, got = a;
      kernels::scalar::axpy_mod(ref.data(), b.data(), n, s, p);
      kernels::axpy_mod(got.data(), b.data(), n, s, p);
      CHECK(ref == got);
      kernels::scalar::scale_mod(ref.data(), n, s, p);
      kernels::scale_mod(got.data(), n, s, p);
      CHECK(ref == got);
#ifdef SYMPROD_HAVE_AVX2
      if (kernels::avx2_available()) {
        auto v = a;
        kernels::avx2::axpy_mod(v.data(), b.data(), n, s, p);
        auto w = a;
        kernels::scalar::axpy_mod(w.data(), b.data(), n, s, p);
        CHECK(v == w);
      }
#endif
    }
  }
  kernels::force_scalar(true);
  CHECK(kernels::active_variant() == "scalar");
  kernels::force_scalar(false);
}

TEST_CASE("charpoly and linear solve") {
  RatMatrix m(3, 3);
  int vals[3][3] = {{2, 1, 0}, {1, 3, 1}, {0, 1, 4}};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m(i, j) = vals[i][j];
  UniPoly cp = m.charpoly();
  // det(xI - M) expanded by hand
  CHECK(cp == ints({-18, 24, -9, 1}));
  CHECK(m.determinant() == 18);
  auto x = solve_linear(m, {1, 2, 3});
  REQUIRE(x);
  for (int i = 0; i < 3; ++i) {
    Rational s = 0;
    for (int j = 0; j < 3; ++j) s += m(i, j) * (*x)[j];
    CHECK(s == i + 1);
  }
}

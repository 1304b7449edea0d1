#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symprod/arith/integer.hpp"
#include "symprod/arith/upoly.hpp"

namespace symprod {

/// Modular inverse of a (nonzero mod p), p prime.
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p);
std::uint32_t pow_mod(std::uint32_t a, std::uint64_t e, std::uint32_t p);

/// Dense polynomial over F_p, p an odd or even prime below 2^26.
/// Coefficients are residues in [0, p), trimmed.
class ModPoly {
 public:
  ModPoly() = default;
  explicit ModPoly(std::uint32_t p) : p_(p) {}
  ModPoly(std::uint32_t p, std::vector<std::uint32_t> coeffs);
  /// Reduction of an integral UniPoly; throws if a denominator vanishes mod p.
  static ModPoly reduce(const UniPoly& f, std::uint32_t p);
  static ModPoly reduce(const std::vector<Integer>& coeffs, std::uint32_t p);
  static ModPoly constant(std::uint32_t p, std::uint32_t c) { return ModPoly(p, {c}); }
  static ModPoly x(std::uint32_t p) { return ModPoly(p, {0, 1}); }

  std::uint32_t modulus() const noexcept { return p_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  const std::vector<std::uint32_t>& coeffs() const noexcept { return c_; }
  std::uint32_t coeff(int i) const { return i < 0 || i > degree() ? 0 : c_[static_cast<std::size_t>(i)]; }
  std::uint32_t lead() const { return c_.empty() ? 0 : c_.back(); }

  ModPoly& operator+=(const ModPoly& o);
  ModPoly& operator-=(const ModPoly& o);
  friend ModPoly operator+(ModPoly a, const ModPoly& b) { return a += b; }
  friend ModPoly operator-(ModPoly a, const ModPoly& b) { return a -= b; }
  friend ModPoly operator*(const ModPoly& a, const ModPoly& b);
  ModPoly scaled(std::uint32_t s) const;
  friend bool operator==(const ModPoly& a, const ModPoly& b) { return a.p_ == b.p_ && a.c_ == b.c_; }

  static std::pair<ModPoly, ModPoly> divmod(const ModPoly& a, const ModPoly& b);
  friend ModPoly operator/(const ModPoly& a, const ModPoly& b) { return divmod(a, b).first; }
  friend ModPoly operator%(const ModPoly& a, const ModPoly& b) { return divmod(a, b).second; }

  ModPoly monic() const;
  ModPoly derivative() const;
  std::uint32_t operator()(std::uint32_t x) const;
  /// this^e mod m.
  ModPoly powmod(const Integer& e, const ModPoly& m) const;

  std::string to_string() const;

 private:
  void trim();
  std::uint32_t p_ = 2;
  std::vector<std::uint32_t> c_;
};

ModPoly gcd(const ModPoly& a, const ModPoly& b);  ///< monic

struct ModExtendedGcd {
  ModPoly g, s, t;  ///< s*a + t*b = g, g monic
};
ModExtendedGcd extended_gcd(const ModPoly& a, const ModPoly& b);

/// Distinct-degree factorization of a monic squarefree polynomial:
/// list of (product of all irreducible factors of degree d, d).
std::vector<std::pair<ModPoly, int>> distinct_degree_factor(const ModPoly& f);

/// Cantor-Zassenhaus splitting of a monic squarefree product of irreducibles
/// of common degree d (p odd).
std::vector<ModPoly> equal_degree_factor(const ModPoly& f, int d, std::mt19937_64& rng);

/// Monic irreducible factors of a monic squarefree polynomial, sorted.
std::vector<ModPoly> factor_squarefree_mod(const ModPoly& f, std::mt19937_64& rng);

bool is_irreducible_mod(const ModPoly& f);

}  // namespace symprod
